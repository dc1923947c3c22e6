#include "lowzero/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lowzero/constants.hpp"
#include "lowzero/lfunctions.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/summation.hpp"
#include "lowzero/testfn.hpp"
#include "lowzero/zeros.hpp"

namespace lowzero {
namespace {

double require_quadrature(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": quadrature failed, achieved error " << r.error;
    throw std::runtime_error(msg.str());
  }
  return r.value;
}

}  // namespace

double j_integral(double T, double tol) {
  if (!(T > 0.0)) throw std::domain_error("j_integral: T must be positive");
  const auto integrand = [T](double x) { return f_eval(x / T) / (2.0 * std::cosh(0.5 * x)); };
  return require_quadrature(integrate(integrand, 0.0, T, tol), "j_integral");
}

double i_integral_head(double T, double tol) {
  if (!(T > 0.0)) throw std::domain_error("i_integral_head: T must be positive");
  // 1 - F(u) = -2u + (pi^2/2) u^2 + O(u^4): the series avoids the
  // subtraction near 0, where the integrand tends to -2/T
  const auto integrand = [T](double x) {
    if (x == 0.0) return -2.0 / T;
    const double u = x / T;
    const double numer = u < 1e-5 ? (-2.0 + 0.5 * kPi * kPi * u) * u : 1.0 - f_eval(u);
    return numer / (2.0 * std::sinh(0.5 * x));
  };
  return require_quadrature(integrate(integrand, 0.0, T, tol), "i_integral_head");
}

double i_integral(double T, double tol) {
  const double head = i_integral_head(T, tol);
  const double tail = -std::log(std::tanh(0.25 * T));  // int_T^inf dx/(2 sinh(x/2))
  return head + tail;
}

double archimedean_term(double T, double tol) {
  if (!(T > 0.0)) throw std::domain_error("archimedean_term: T must be positive");
  const auto integrand = [T](double x) { return f_eval(x / T) * std::cosh(0.5 * x); };
  return 4.0 * require_quadrature(integrate(integrand, 0.0, T, tol), "archimedean_term");
}

ExplicitFormulaBreakdown weil_rhs(const NumberField& field, const KroneckerCharacter* chi,
                                  double T, const MangoldtTable& table) {
  const bool quadratic = chi != nullptr;
  if (quadratic) {
    if (field.degree != 2)
      throw std::invalid_argument("weil_rhs: character supplied for a non-quadratic field");
    if (field.disc.fits_int64() && field.disc.to_int64() != chi->d())
      throw std::invalid_argument("weil_rhs: field discriminant does not match the character");
  } else if (field.degree != 1) {
    throw std::invalid_argument("weil_rhs: only Q and quadratic fields carry prime data here");
  }

  ExplicitFormulaBreakdown b;
  b.T = T;
  const double tol = 1e-10;
  b.archimedean = archimedean_term(T, tol);
  const double prime_sum =
      quadratic ? quadratic_prime_sum(*chi, T, table) : weighted_prime_sum_with_F(T, table);
  b.prime_term = 2.0 * prime_sum;
  b.disc_term = field.disc.compare_abs(BigInt(1)) == 0 ? 0.0 : field.disc.log_abs();
  b.const_term = field.degree * (kLog2Pi + kEulerGamma + 2.0 * std::numbers::ln2_v<double>);
  b.j_term = field.r1 * j_integral(T, tol);
  b.i_term = field.degree * i_integral(T, tol);
  return b;
}

double weil_lhs(std::span<const double> zero_ordinates, double T, int central_order) {
  StableSum sum;
  for (double gamma : zero_ordinates) {
    if (!(gamma > 0.0)) throw std::invalid_argument("weil_lhs: ordinates must be positive");
    sum.add(2.0 * fhat_T(gamma, T));  // +gamma and -gamma pair, Fhat even
  }
  return central_order * fhat_T(0.0, T) + sum.value();
}

namespace {

// bound on 2 sum_{gamma > H} |Fhat_T(gamma)| via |Fhat_T| <= 8/(T u^2) and
// the zero-counting density dN = (ln Q + n ln(u/2pi)) / (2 pi) du
double zero_tail_estimate(double T, double H, double log_conductor, int degree) {
  const double density_integral =
      (log_conductor + degree * (std::log(H / (2.0 * kPi)) + 1.0)) / H;
  return 2.0 * (8.0 / T) * density_integral / (2.0 * kPi);
}

}  // namespace

ExplicitFormulaBreakdown weil_residual(const NumberField& field, const KroneckerCharacter* chi,
                                       double T, double zero_height, const MangoldtTable& table) {
  ExplicitFormulaBreakdown b = weil_rhs(field, chi, T, table);
  b.zero_height_used = zero_height;

  std::vector<double> gammas = zero_list_for_explicit_formula(LFunctionSpec::zeta(), zero_height);
  int central_order = detect_central_zero(LFunctionSpec::zeta()).first ? 1 : 0;
  double log_conductor = 0.0;
  if (chi != nullptr) {
    const LFunctionSpec l_spec = LFunctionSpec::dirichlet(*chi);
    const std::vector<double> l_gammas = zero_list_for_explicit_formula(l_spec, zero_height);
    gammas.insert(gammas.end(), l_gammas.begin(), l_gammas.end());
    std::sort(gammas.begin(), gammas.end());
    if (detect_central_zero(l_spec).first) ++central_order;
    log_conductor = std::log(static_cast<double>(chi->conductor()));
  }
  b.central_order = central_order;
  b.zero_sum = weil_lhs(gammas, T, central_order);
  const double rhs =
      b.archimedean - b.prime_term + b.disc_term - b.const_term - b.j_term + b.i_term;
  b.residual = b.zero_sum - rhs;
  b.truncation_tail_estimate = zero_tail_estimate(T, zero_height, log_conductor, field.degree);
  return b;
}

IntegralBoundsReport verify_34_35(std::span<const double> T_grid) {
  IntegralBoundsReport report;
  report.all_ok = true;
  for (double T : T_grid) {
    if (T < kTLowerThreshold || T > 30.0)
      throw std::invalid_argument("verify_34_35: grid values must lie in [0.314, 30]");
    IntegralBoundsRow row;
    row.T = T;
    row.j_value = j_integral(T, 1e-10);
    row.i_value = i_integral(T, 1e-10);
    const double scale = std::exp(0.5 * T);
    row.j_ok = row.j_value <= kJIntegralCoeff * scale;
    row.i_ok = row.i_value >= -kIIntegralCoeff * scale;
    report.sup_j_scaled = std::max(report.sup_j_scaled, row.j_value / scale);
    report.sup_i_scaled = std::max(report.sup_i_scaled, -row.i_value / scale);
    report.all_ok = report.all_ok && row.j_ok && row.i_ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace lowzero
