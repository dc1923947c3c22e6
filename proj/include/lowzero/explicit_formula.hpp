#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lowzero/fields.hpp"
#include "lowzero/primes.hpp"

namespace lowzero {

/// Every term of the explicit formula evaluated for F_T, plus the two-sided
/// residual zero_sum - (archimedean - prime_term + disc_term - const_term
/// - j_term + i_term).
struct ExplicitFormulaBreakdown {
  double T = 0.0;
  double zero_sum = 0.0;     // central_order * Fhat_T(0) + 2 sum Fhat_T(gamma)
  double archimedean = 0.0;  // Phi_T(0) + Phi_T(1)
  double prime_term = 0.0;   // 2 * prime-ideal sum
  double disc_term = 0.0;    // ln|d_K|
  double const_term = 0.0;   // n_K [ln 2pi + gamma + 2 ln 2]
  double j_term = 0.0;       // r_1 J(F_T)
  double i_term = 0.0;       // n_K I(F_T)
  double residual = 0.0;
  double zero_height_used = 0.0;
  double truncation_tail_estimate = 0.0;  // bound on the omitted zero sum
  int central_order = 0;
};

/// J(F_T) = int_0^T F(x/T) / (2 cosh(x/2)) dx.
double j_integral(double T, double tol);

/// The [0,T] part of I(F_T), the object displayed in the source inequality
/// (its scaled supremum is the 0.1034 constant); quadrature with the
/// analytic limit -2/T at 0.
double i_integral_head(double T, double tol);

/// I(F_T) = int_0^inf (1 - F_T(x)) / (2 sinh(x/2)) dx as the explicit
/// formula needs it: the head plus the closed-form tail -ln tanh(T/4).
double i_integral(double T, double tol);

/// Phi_T(0) + Phi_T(1) = 4 int_0^T F(x/T) cosh(x/2) dx.
double archimedean_term(double T, double tol);

/// Right-hand side assembly; chi present exactly for quadratic fields.
ExplicitFormulaBreakdown weil_rhs(const NumberField& field, const KroneckerCharacter* chi,
                                  double T, const MangoldtTable& table);

/// central_order * Fhat_T(0) + 2 sum_gamma Fhat_T(gamma);
/// Fhat_T(0) = 16 T / pi^2.
double weil_lhs(std::span<const double> zero_ordinates, double T, int central_order);

/// Both sides with zeros scanned to zero_height (zeta list for Q, union of
/// zeta and L(chi_d) lists for quadratic fields).
ExplicitFormulaBreakdown weil_residual(const NumberField& field, const KroneckerCharacter* chi,
                                       double T, double zero_height, const MangoldtTable& table);

struct IntegralBoundsRow {
  double T = 0.0;
  double j_value = 0.0;
  double i_value = 0.0;  // the full I(F_T), head plus closed-form tail
  bool j_ok = false;     // J(F_T) <=  0.276 e^{T/2}
  bool i_ok = false;     // I(F_T) >= -0.1034 e^{T/2}
};

struct IntegralBoundsReport {
  std::vector<IntegralBoundsRow> rows;
  double sup_j_scaled = 0.0;  // observed sup of J(F_T) e^{-T/2}
  double sup_i_scaled = 0.0;  // observed sup of -I(F_T) e^{-T/2}
  bool all_ok = false;
};

/// Checks of the two archimedean integral bounds on a T grid in [0.314, 30].
IntegralBoundsReport verify_34_35(std::span<const double> T_grid);

}  // namespace lowzero
