#include "lowzero/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lowzero/explicit_formula.hpp"
#include "lowzero/testfn.hpp"

namespace lowzero {

std::optional<double> theorem1_bound(double alpha, const BoundConstants& constants) {
  if (!(alpha > kTheorem1AlphaThreshold)) return std::nullopt;
  const double ratio = (alpha - constants.linear) / constants.exponential;
  if (!(ratio > 1.0)) return std::nullopt;  // recomputed constants move the edge slightly
  return kPi / (kSqrt2 * std::log(ratio));
}

std::optional<Theorem2Parts> theorem2_bound(double alpha, double log_disc,
                                            const BoundConstants& constants) {
  if (!(log_disc > 1.0)) throw std::domain_error("theorem2_bound: log|d_K| must exceed 1");
  if (!(alpha > kTheorem2AlphaThreshold)) return std::nullopt;
  const double loglog = std::log(log_disc);
  Theorem2Parts parts;
  const double order_slope = (constants.order_coeff / (kPi * kPi)) * alpha / loglog;
  parts.A = (alpha - constants.linear) / (2.0 * order_slope);
  parts.B = std::log((alpha - constants.linear) / (2.0 * constants.exponential));
  if (!(parts.A > 0.0) || !(parts.B > 0.0)) return std::nullopt;
  parts.bound = kSqrt2 * kPi / std::min(parts.A, parts.B);
  return parts;
}

std::optional<double> remark_variant_bound(double alpha, const BoundConstants& constants) {
  if (!(alpha > kRemarkAlphaThreshold)) return std::nullopt;
  const double ratio = (alpha - constants.linear) / constants.exp_remark;
  if (!(ratio > 1.0)) return std::nullopt;
  return kPi / (kSqrt2 * std::log(ratio));
}

double neugebauer_bound(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("neugebauer_bound: alpha must be positive");
  const double inner = 0.25 * std::log(82.0 + 27.0 * alpha);
  return std::min(60.0, 64.0 * kPi * kPi / std::log(inner));
}

double lemma3_threshold(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw std::domain_error("lemma3_threshold: a, b, c must be positive");
  if (!(c > 2.0 * b)) throw std::domain_error("lemma3_threshold: hypothesis c > 2b violated");
  return std::min(c / (2.0 * a), std::log(c / (2.0 * b)));
}

double central_order_bound(double log_disc, int degree) {
  if (!(log_disc > 1.0)) throw std::domain_error("central_order_bound: log|d_K| must exceed 1");
  if (degree < 1) throw std::invalid_argument("central_order_bound: degree must be positive");
  const double loglog = std::log(log_disc);
  return log_disc / loglog + degree / (2.0 * loglog);
}

ConstantAudit derive_inequality_constants(double tol) {
  if (!(tol >= 1e-8)) throw std::domain_error("derive_inequality_constants: tol must be >= 1e-8");
  ConstantAudit audit;
  const SupNormResult sup = sup_norm_F();
  audit.sup_F = sup.max;
  audit.sup_F_argmax = sup.argmax;
  audit.prime_const = audit.sup_F * kRosserPsiSlope;

  // suprema of J(F_T) e^{-T/2} and -I(F_T) e^{-T/2} on [0.314, 30]:
  // dense scan then golden-section refinement around each argmax
  const auto j_scaled = [tol](double T) { return j_integral(T, tol * 1e-2) * std::exp(-0.5 * T); };
  const auto i_scaled = [tol](double T) {
    return -i_integral_head(T, tol * 1e-2) * std::exp(-0.5 * T);
  };
  const auto supremum = [](const auto& f, double lo, double hi) {
    const int n = 600;
    double best_t = lo;
    double best = f(lo);
    for (int i = 1; i <= n; ++i) {
      // geometric grid: the scaled integrands vary fastest at small T
      const double t = lo * std::pow(hi / lo, static_cast<double>(i) / n);
      const double v = f(t);
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
    double a = std::max(lo, best_t * 0.97);
    double b = std::min(hi, best_t * 1.03);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > 1e-7) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = f(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = f(x1);
      }
    }
    return std::max({best, f1, f2});
  };
  audit.j_const = supremum(j_scaled, kTLowerThreshold, 30.0);
  audit.i_const = supremum(i_scaled, kTLowerThreshold, 30.0);

  audit.assembled_exp_const = 4.0 * audit.prime_const + audit.j_const + audit.i_const;
  audit.assembled_lin_const =
      (kLog2Pi + kEulerGamma + 2.0 * std::numbers::ln2_v<double>) - 2.0 * audit.prime_const;
  audit.delta_exp = audit.assembled_exp_const - audit.paper_exp_const;
  audit.delta_lin = audit.assembled_lin_const - audit.paper_lin_const;
  return audit;
}

BoundReport bound_report(const NumberField& field, bool central_zero,
                         const BoundConstants& constants) {
  BoundReport report;
  report.alpha = field.alpha;
  report.constants_used = constants;
  report.theorem1_applicable = field.alpha > kTheorem1AlphaThreshold;
  report.theorem2_applicable = field.alpha > kTheorem2AlphaThreshold;
  report.remark_applicable = field.alpha > kRemarkAlphaThreshold;
  if (!central_zero) {
    report.theorem1 = theorem1_bound(field.alpha, constants);
  } else if (report.theorem2_applicable) {
    report.theorem2 = theorem2_bound(field.alpha, field.disc.log_abs(), constants);
  }
  report.remark_variant = remark_variant_bound(field.alpha, constants);
  report.neugebauer = neugebauer_bound(field.alpha);
  report.dichotomy_note =
      "conditional on GRH: either tau(K) >= tau_0 (~14.1347) or tau(K) obeys the listed bound";
  return report;
}

}  // namespace lowzero
