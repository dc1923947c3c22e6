#include "lowzero/lfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lowzero/constants.hpp"
#include "lowzero/gamma.hpp"
#include "lowzero/summation.hpp"

namespace lowzero {
namespace {

using cplx = std::complex<double>;

// B_{2k}/(2k)! for k = 1..7
constexpr double kEulerMaclaurinCoeff[7] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    7.0 / 523069747200.0,
};

cplx n_to_minus_s(double n, cplx s) {
  const double ln_n = std::log(n);
  const double mag = std::exp(-s.real() * ln_n);
  const double phase = -s.imag() * ln_n;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

cplx zeta_em_impl(cplx s, double tol, int* n_terms, double* err_estimate) {
  if (!(s.real() > 0.0) || s.real() > 2.0 || std::abs(s.imag()) > 100.0)
    throw std::domain_error("zeta_em: s outside the working envelope");
  if (std::abs(s - cplx(1.0, 0.0)) < 1e-8)
    throw std::domain_error("zeta_em: s at the pole");

  int N = std::max(20, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
  for (;;) {
    StableComplexSum sum;
    for (int n = 1; n < N; ++n) sum.add(n_to_minus_s(n, s));
    const double Nd = N;
    cplx value = sum.value();
    const cplx n_pow = n_to_minus_s(Nd, s);  // N^{-s}
    value += Nd * n_pow / (s - 1.0);         // N^{1-s}/(s-1)
    value += 0.5 * n_pow;
    // Bernoulli corrections through B_12, Pochhammer (s)(s+1)...(s+2k-2)
    cplx poch = s;
    cplx n_scale = n_pow / Nd;  // N^{-s-2k+1} running power
    cplx correction = 0.0;
    double next_term_mag = 0.0;
    for (int k = 1; k <= 7; ++k) {
      const cplx term = kEulerMaclaurinCoeff[k - 1] * poch * n_scale;
      if (k <= 6) {
        correction += term;
      } else {
        next_term_mag = std::abs(term);  // first omitted term = error estimate
      }
      poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
      n_scale /= Nd * Nd;
    }
    value += correction;
    // rounding floor of the compensated partial sum, ~eps * sum |n^{-s}|
    const double rounding_floor = 1e-15 * std::sqrt(Nd);
    const double achieved = next_term_mag + rounding_floor;
    if (achieved <= tol) {
      if (n_terms != nullptr) *n_terms = N;
      if (err_estimate != nullptr) *err_estimate = achieved;
      return value;
    }
    if (N >= 600 || rounding_floor > tol) {
      std::ostringstream msg;
      msg << "zeta_em: tolerance " << tol << " unachievable in binary64, estimate " << achieved;
      throw std::runtime_error(msg.str());
    }
    N = std::min(600, N + N / 2 + 1);
  }
}

}  // namespace

std::complex<double> zeta_em(std::complex<double> s, double tol) {
  return zeta_em_impl(s, tol, nullptr, nullptr);
}

double riemann_siegel_theta(double t) {
  if (std::abs(t) > 100.0) throw std::domain_error("riemann_siegel_theta: |t| > 100");
  const cplx lg = log_gamma(cplx(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(kPi);
}

LFunctionSpec LFunctionSpec::zeta() {
  LFunctionSpec spec;
  spec.kind = Kind::riemann_zeta;
  spec.conductor = 1;
  spec.parity = 0;
  spec.has_pole = true;
  return spec;
}

LFunctionSpec LFunctionSpec::dirichlet(const KroneckerCharacter& chi) {
  if (chi.conductor() > 1'000'000'000'000ull)
    throw std::invalid_argument("LFunctionSpec: conductor beyond 1e12");
  LFunctionSpec spec;
  spec.kind = Kind::dirichlet_real;
  spec.character = chi;
  spec.conductor = chi.conductor();
  spec.parity = chi.parity();
  spec.has_pole = false;
  return spec;
}

std::vector<std::int8_t> char_coefficient_cache(const KroneckerCharacter& chi,
                                                std::uint32_t n_max) {
  if (n_max > 10'000'000u)
    throw std::invalid_argument("char_coefficient_cache: n_max beyond 1e7");
  return chi.values_up_to(n_max);
}

namespace {

// AFE truncation: weights die like e^{-x} with x = pi n^2 / q; x = 90 sits
// far below 1e-16 of the running maximum for every t in the envelope.
constexpr double kAfeHardX = 90.0;

std::uint32_t afe_cache_size(std::uint64_t q) {
  const double n = std::sqrt(kAfeHardX * static_cast<double>(q) / kPi);
  return static_cast<std::uint32_t>(std::ceil(n)) + 2;
}

}  // namespace

LEvaluator::LEvaluator(const LFunctionSpec& spec) : spec_(spec) {
  if (spec_.kind == LFunctionSpec::Kind::dirichlet_real) {
    if (!spec_.character.has_value())
      throw std::invalid_argument("LEvaluator: dirichlet spec without character");
    if (spec_.conductor > 1'000'000'000'000ull)
      throw std::invalid_argument("LEvaluator: conductor beyond 1e12");
    chi_ = spec_.character->values_up_to(afe_cache_size(spec_.conductor));
    log_q_over_pi_ = std::log(static_cast<double>(spec_.conductor) / kPi);
  }
}

CompletedValue LEvaluator::operator()(double t, double tol) const {
  if (std::abs(t) > 100.0) throw std::domain_error("hardy_z: |t| > 100");
  if (tol < 1e-10) throw std::domain_error("hardy_z: tol below the 1e-10 envelope");
  if (spec_.kind == LFunctionSpec::Kind::riemann_zeta) {
    int n_terms = 0;
    double em_err = 0.0;
    const cplx zeta = zeta_em_impl(cplx(0.5, t), std::min(tol * 1e-2, 1e-12), &n_terms, &em_err);
    const double theta = riemann_siegel_theta(t);
    const cplx z = std::exp(cplx(0.0, theta)) * zeta;
    CompletedValue result;
    result.t = t;
    result.lambda_value = z.real();
    result.err_estimate = std::abs(z.imag()) + em_err;
    result.scale = 1.0;
    result.n_terms = n_terms;
    return result;
  }
  return evaluate_afe(t, tol, false);
}

CompletedValue LEvaluator::evaluate_swapped(double t, double tol) const {
  if (spec_.kind != LFunctionSpec::Kind::dirichlet_real)
    throw std::logic_error("evaluate_swapped: only defined for Dirichlet specs");
  return evaluate_afe(t, tol, true);
}

CompletedValue LEvaluator::evaluate_extended(double t, double tol, double trunc_eps) const {
  if (spec_.kind != LFunctionSpec::Kind::dirichlet_real)
    throw std::logic_error("evaluate_extended: only defined for Dirichlet specs");
  return evaluate_afe(t, tol, false, trunc_eps);
}

CompletedValue LEvaluator::evaluate_afe(double t, double tol, bool swap_roles,
                                        double trunc_eps) const {
  const double q = static_cast<double>(spec_.conductor);
  const int a = spec_.parity;
  // z1 = (s+a)/2 at s = 1/2 + it, z2 = (1-s+a)/2 = conj(z1)
  cplx z1(0.25 + 0.5 * a, 0.5 * t);
  cplx z2 = std::conj(z1);
  if (swap_roles) std::swap(z1, z2);
  const cplx qpow1 = std::exp(z1 * log_q_over_pi_);
  const cplx qpow2 = std::exp(z2 * log_q_over_pi_);

  StableComplexSum acc;
  double scale = 0.0;
  int last_n = 0;
  const std::size_t n_cache = chi_.size();
  for (std::uint32_t n = 1;; ++n) {
    const double x = kPi * static_cast<double>(n) * static_cast<double>(n) / q;
    if (x > kAfeHardX) break;
    const int chi_n = (n < n_cache) ? chi_[n] : (*spec_.character)(n);
    if (chi_n == 0) continue;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    const double phase = t * std::log(static_cast<double>(n));
    const cplx n_minus_s(inv_sqrt_n * std::cos(phase), -inv_sqrt_n * std::sin(phase));
    const cplx n_s_minus_1 = std::conj(n_minus_s);
    const cplx g1 = gamma_upper(z1, x);
    const cplx g2 = gamma_upper(z2, x);
    // first sum carries n^{-s} against (s+a)/2; swapping the roles of s and
    // 1-s re-pairs the powers with the other gamma argument
    const cplx w1 = (swap_roles ? n_s_minus_1 : n_minus_s) * qpow1 * g1;
    const cplx w2 = (swap_roles ? n_minus_s : n_s_minus_1) * qpow2 * g2;
    const double term_mag = std::max(std::abs(w1), std::abs(w2));
    acc.add(static_cast<double>(chi_n) * (w1 + w2));
    scale = std::max(scale, term_mag);
    last_n = static_cast<int>(n);
    if (x > std::abs(t) * 0.5 + 3.0 && term_mag < trunc_eps * scale) break;
  }

  const cplx total = acc.value();
  CompletedValue result;
  result.t = t;
  result.lambda_value = total.real();
  result.err_estimate = std::abs(total.imag());
  result.scale = scale;
  result.n_terms = last_n;
  if (result.err_estimate > tol * std::abs(result.lambda_value) + 1e-12 * scale) {
    std::ostringstream msg;
    msg << "hardy_z: imaginary residual " << result.err_estimate << " exceeds the bound at t=" << t
        << ", q=" << spec_.conductor << " (evaluation bug)";
    throw std::runtime_error(msg.str());
  }
  return result;
}

CompletedValue hardy_z(const LFunctionSpec& spec, double t, double tol) {
  const LEvaluator eval(spec);
  return eval(t, tol);
}

}  // namespace lowzero
