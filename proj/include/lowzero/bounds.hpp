#pragma once

#include <optional>
#include <string>

#include "lowzero/constants.hpp"
#include "lowzero/fields.hpp"

namespace lowzero {

struct Theorem2Parts {
  double A = 0.0;
  double B = 0.0;
  double bound = 0.0;  // sqrt(2) pi / min(A, B)
};

struct BoundReport {
  double alpha = 0.0;
  std::optional<double> theorem1;
  bool theorem1_applicable = false;  // alpha > 6.6958
  std::optional<Theorem2Parts> theorem2;
  bool theorem2_applicable = false;  // alpha > 12.1048
  std::optional<double> remark_variant;
  bool remark_applicable = false;  // alpha > 6.4435, large degree only
  double neugebauer = 0.0;
  BoundConstants constants_used;
  std::string dichotomy_note;
};

/// Audit of the proof constants: everything is recomputed from the module
/// oracles and assembled against the printed 5.4084 / 1.2874.
struct ConstantAudit {
  double sup_F = 0.0;
  double sup_F_argmax = 0.0;
  double j_const = 0.0;      // sup_T J(F_T) e^{-T/2} on [0.314, 30]
  double i_const = 0.0;      // sup_T -I(F_T) e^{-T/2}
  double prime_const = 0.0;  // sup_F * 1.0389
  double assembled_exp_const = 0.0;  // 4*prime + j + i
  double assembled_lin_const = 0.0;  // (ln 2pi + gamma + 2 ln 2) - 2*prime
  double paper_exp_const = 5.4084;
  double paper_lin_const = 1.2874;
  double delta_exp = 0.0;
  double delta_lin = 0.0;
};

/// pi / (sqrt(2) ln((alpha - 1.2874)/5.4084)) when alpha > 6.6958.
std::optional<double> theorem1_bound(double alpha,
                                     const BoundConstants& constants = BoundConstants{});

/// A, B and sqrt(2) pi / min(A, B) when alpha > 12.1048; log_disc = ln|d_K|.
std::optional<Theorem2Parts> theorem2_bound(double alpha, double log_disc,
                                            const BoundConstants& constants = BoundConstants{});

/// Remark variant with the sharper 5.1561 denominator, alpha > 6.4435;
/// valid only for sufficiently large degree.
std::optional<double> remark_variant_bound(double alpha,
                                           const BoundConstants& constants = BoundConstants{});

/// min{60, 64 pi^2 / ln((1/4) ln(82 + 27 alpha))}: the unconditional bound,
/// clamped at 60 for every alpha below an astronomically large crossover.
double neugebauer_bound(double alpha);

/// min(c/2a, ln(c/2b)) for a, b, c > 0 with c > 2b: any T > 0 with
/// aT + b e^{T/2} >= c satisfies T >= this threshold.
double lemma3_threshold(double a, double b, double c);

/// Ceiling on the order of the central zero:
/// log|d|/loglog|d| + n/(2 loglog|d|); log_disc > 1 required.
double central_order_bound(double log_disc, int degree);

ConstantAudit derive_inequality_constants(double tol);

BoundReport bound_report(const NumberField& field, bool central_zero,
                         const BoundConstants& constants = BoundConstants{});

}  // namespace lowzero
