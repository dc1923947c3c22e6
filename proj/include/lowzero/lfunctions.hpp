#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lowzero/fields.hpp"

namespace lowzero {

/// Description of a completed self-dual L-function on the critical line:
/// the Riemann zeta or a Dirichlet L-function of a real primitive
/// (Kronecker) character. Real primitive characters have root number +1,
/// so the completed value at 1/2 + it is real.
struct LFunctionSpec {
  enum class Kind { riemann_zeta, dirichlet_real };

  Kind kind = Kind::riemann_zeta;
  std::optional<KroneckerCharacter> character;
  std::uint64_t conductor = 1;
  int parity = 0;  // gamma-factor parity a: 0 if d > 0, 1 if d < 0
  bool has_pole = true;
  int root_number = 1;

  static LFunctionSpec zeta();
  static LFunctionSpec dirichlet(const KroneckerCharacter& chi);
};

struct CompletedValue {
  double t = 0.0;
  double lambda_value = 0.0;  // Z(t) for zeta, Lambda(1/2 + it, chi) otherwise
  double err_estimate = 0.0;  // imaginary residual of the evaluation
  double scale = 1.0;         // largest single term of the defining sum
  int n_terms = 0;
};

/// zeta(s) by Euler-Maclaurin, 0 < Re s <= 2, |Im s| <= 100, s != 1.
std::complex<double> zeta_em(std::complex<double> s, double tol);

/// theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln pi, continuous with
/// theta(0) = 0; odd in t.
double riemann_siegel_theta(double t);

/// chi_d(n) for n <= n_max in one multiplicative pass, for reuse across all
/// evaluations at different t. n_max <= 1e7.
std::vector<std::int8_t> char_coefficient_cache(const KroneckerCharacter& chi,
                                                std::uint32_t n_max);

/// Shared-cache evaluator: builds the character table once for a whole scan.
class LEvaluator {
 public:
  explicit LEvaluator(const LFunctionSpec& spec);

  const LFunctionSpec& spec() const { return spec_; }

  /// Z(t) for zeta; the completed Lambda(1/2+it, chi_d) by the smoothed
  /// approximate functional equation otherwise. |t| <= 100, tol >= 1e-10.
  CompletedValue operator()(double t, double tol = 1e-9) const;

  /// Dual-route check: the two AFE sums evaluated with the s and 1-s roles
  /// swapped; equals operator() up to roundoff by Lambda(s) = Lambda(1-s).
  CompletedValue evaluate_swapped(double t, double tol = 1e-9) const;

  /// Truncation knob for self-consistency checks: trunc_eps = 0 runs the
  /// sums to the hard cutoff of the coefficient cache.
  CompletedValue evaluate_extended(double t, double tol, double trunc_eps) const;

 private:
  CompletedValue evaluate_afe(double t, double tol, bool swap_roles,
                              double trunc_eps = 1e-16) const;

  LFunctionSpec spec_;
  std::vector<std::int8_t> chi_;
  double log_q_over_pi_ = 0.0;
};

/// One-shot form of the evaluator (builds a cache sized for |t|).
CompletedValue hardy_z(const LFunctionSpec& spec, double t, double tol = 1e-9);

}  // namespace lowzero
