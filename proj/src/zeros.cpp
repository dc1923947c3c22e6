#include "lowzero/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lowzero {
namespace {

constexpr double kBisectWidth = 1e-9;
constexpr double kCentralZeroRel = 1e-8;
constexpr double kDipRel = 1e-4;
constexpr double kEvalTol = 1e-9;

int worker_count() {
  if (const char* env = std::getenv("LOWZERO_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// fills values[i] = eval(ts[i]) with a deterministic index split
void evaluate_grid(const LEvaluator& eval, const std::vector<double>& ts,
                   std::vector<CompletedValue>* values) {
  values->resize(ts.size());
  const int threads = std::min<int>(worker_count(), static_cast<int>(ts.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < ts.size(); ++i) (*values)[i] = eval(ts[i], kEvalTol);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < ts.size();
             i += static_cast<std::size_t>(threads))
          (*values)[i] = eval(ts[i], kEvalTol);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

bool opposite_signs(double a, double b) {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0) || a == 0.0 || b == 0.0;
}

// counts a grid point landing exactly on a zero once, not twice
bool sign_change(double prev, double cur) {
  return (prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0) ||
         (cur == 0.0 && prev != 0.0);
}

ZeroRecord refine_bracket(const LEvaluator& eval, double a, double b, double fa, double fb) {
  while (b - a > kBisectWidth) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = eval(mid, kEvalTol).lambda_value;
    if (opposite_signs(fa, fm)) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  ZeroRecord record;
  record.bracket_width = b - a;
  // one secant polish, clamped to the bracket
  double gamma = 0.5 * (a + b);
  if (fb != fa) {
    const double secant = b - fb * (b - a) / (fb - fa);
    if (secant > a && secant < b) gamma = secant;
  }
  record.gamma = gamma;
  return record;
}

std::pair<bool, double> central_from(const CompletedValue& v) {
  return {central_zero_classification(v.lambda_value, v.scale), v.lambda_value};
}

}  // namespace

ZeroScanResult scan_zeros(const LFunctionSpec& spec, double t_max, double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 0.05)
    throw std::invalid_argument("scan_zeros: grid_step must lie in (0, 0.05]");
  if (!(t_max > 0.0) || t_max > 100.0)
    throw std::invalid_argument("scan_zeros: t_max must lie in (0, 100]");

  const LEvaluator eval(spec);
  const std::size_t n_points = static_cast<std::size_t>(std::floor(t_max / grid_step + 1e-9));
  std::vector<double> ts(n_points + 1);
  for (std::size_t i = 0; i <= n_points; ++i) ts[i] = static_cast<double>(i) * grid_step;
  std::vector<CompletedValue> values;
  evaluate_grid(eval, ts, &values);

  ZeroScanResult result;
  result.t_max = t_max;
  result.grid_step = grid_step;
  for (std::size_t i = 1; i <= n_points; ++i) {
    const double prev = values[i - 1].lambda_value;
    const double cur = values[i].lambda_value;
    if (sign_change(prev, cur)) {
      result.zeros.push_back(refine_bracket(eval, ts[i - 1], ts[i], prev, cur));
      continue;
    }
    if (i + 1 <= n_points) {
      const double next = values[i + 1].lambda_value;
      // compare against the local envelope of |Z|: the AFE term scale
      // overstates the meaningful magnitude once inter-term cancellation
      // grows with t, which would flag every inter-zero peak region
      const std::size_t lo = i > 32 ? i - 32 : 1;
      const std::size_t hi = std::min(n_points, i + 32);
      double envelope = 0.0;
      for (std::size_t j = lo; j <= hi; ++j)
        envelope = std::max(envelope, std::abs(values[j].lambda_value));
      const bool is_dip = std::abs(cur) < kDipRel * envelope && std::abs(cur) <= std::abs(prev) &&
                          std::abs(cur) <= std::abs(next) && !opposite_signs(cur, next);
      if (is_dip) result.suspected_even_order.push_back(ts[i]);
    }
  }
  std::sort(result.zeros.begin(), result.zeros.end(),
            [](const ZeroRecord& x, const ZeroRecord& y) { return x.gamma < y.gamma; });
  return result;
}

LowestZeroResult lowest_zero(const LFunctionSpec& spec, double t_max, double grid_step) {
  if (!(t_max >= 0.05)) throw std::invalid_argument("lowest_zero: t_max must be >= 0.05");
  if (!(grid_step > 0.0) || grid_step > 0.05)
    throw std::invalid_argument("lowest_zero: grid_step must lie in (0, 0.05]");
  t_max = std::min(t_max, 100.0);

  const LEvaluator eval(spec);
  LowestZeroResult result;
  const CompletedValue central = eval(0.0, kEvalTol);
  const auto [is_central, central_value] = central_from(central);
  result.central_value = central_value;
  if (is_central) result.status = LowestZeroResult::Status::central_zero_detected;

  // ascending walk with early exit at the first confirmed bracket; the
  // refined step protects against low zero pairs at large conductor
  const int batch = std::max(1, worker_count());
  double prev_t = 0.0;
  double prev_v = central.lambda_value;
  double t = 0.0;
  const double fine_step = grid_step / 4.0;
  while (t < t_max) {
    std::vector<double> ts;
    ts.reserve(batch);
    double cursor = t;
    for (int i = 0; i < batch && cursor < t_max; ++i) {
      const double step = cursor < 1.0 ? fine_step : grid_step;
      cursor = std::min(cursor + step, t_max);
      ts.push_back(cursor);
    }
    if (ts.empty()) break;
    std::vector<CompletedValue> values;
    evaluate_grid(eval, ts, &values);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double v = values[i].lambda_value;
      if (sign_change(prev_v, v)) {
        const ZeroRecord record = refine_bracket(eval, prev_t, ts[i], prev_v, v);
        result.tau = record.gamma;
        if (result.status != LowestZeroResult::Status::central_zero_detected)
          result.status = LowestZeroResult::Status::found;
        return result;
      }
      prev_t = ts[i];
      prev_v = v;
    }
    t = prev_t;
  }
  return result;
}

LowestZeroResult tau_quadratic(std::int64_t d, double t_max) {
  const KroneckerCharacter chi(d);  // validates fundamental d, |d| <= 1e12 via spec
  const LFunctionSpec l_spec = LFunctionSpec::dirichlet(chi);
  const LowestZeroResult from_l = lowest_zero(l_spec, t_max);

  // zeta_K = zeta * L(., chi_d): only scan zeta below the L zero already found
  double zeta_ceiling = t_max;
  if (from_l.tau.has_value()) zeta_ceiling = std::min(zeta_ceiling, *from_l.tau);
  LowestZeroResult from_zeta;
  if (zeta_ceiling >= 0.05) {
    from_zeta = lowest_zero(LFunctionSpec::zeta(), zeta_ceiling);
  } else {
    from_zeta.status = LowestZeroResult::Status::none_below_ceiling;
    from_zeta.central_value = hardy_z(LFunctionSpec::zeta(), 0.0, kEvalTol).lambda_value;
  }

  LowestZeroResult result;
  // the zeta factor has Z(0) = zeta(1/2) != 0; report the L central value
  result.central_value = from_l.central_value;
  if (from_l.tau.has_value() &&
      (!from_zeta.tau.has_value() || *from_l.tau <= *from_zeta.tau)) {
    result.tau = from_l.tau;
  } else if (from_zeta.tau.has_value()) {
    result.tau = from_zeta.tau;
  }
  const bool central =
      from_l.status == LowestZeroResult::Status::central_zero_detected ||
      from_zeta.status == LowestZeroResult::Status::central_zero_detected;
  if (central)
    result.status = LowestZeroResult::Status::central_zero_detected;
  else if (result.tau.has_value())
    result.status = LowestZeroResult::Status::found;
  else
    result.status = LowestZeroResult::Status::none_below_ceiling;
  return result;
}

bool central_zero_classification(double value, double scale) {
  return std::abs(value) < kCentralZeroRel * scale;
}

std::pair<bool, double> detect_central_zero(const LFunctionSpec& spec) {
  return central_from(hardy_z(spec, 0.0, kEvalTol));
}

std::vector<double> zero_list_for_explicit_formula(const LFunctionSpec& spec, double height) {
  if (!(height > 0.0) || height > 100.0)
    throw std::invalid_argument("zero_list_for_explicit_formula: height must lie in (0, 100]");
  const ZeroScanResult scan = scan_zeros(spec, height, 1.0 / 64.0);
  if (!scan.suspected_even_order.empty()) {
    std::ostringstream msg;
    msg << "zero_list_for_explicit_formula: suspected even-order zero near t="
        << scan.suspected_even_order.front() << "; multiplicity-1 assumption violated";
    throw std::runtime_error(msg.str());
  }
  std::vector<double> gammas;
  gammas.reserve(scan.zeros.size());
  for (const ZeroRecord& z : scan.zeros) gammas.push_back(z.gamma);
  return gammas;
}

}  // namespace lowzero
