#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lowzero/bigint.hpp"

namespace lowzero {

/// Invariants of a number field: everything the zero bounds consume.
struct NumberField {
  int degree = 1;
  int r1 = 1;  // real embeddings
  int r2 = 0;  // conjugate complex pairs
  BigInt disc = 1;
  double alpha = 0.0;  // ln|d_K| / n_K
  // false when disc is only a polynomial discriminant (maximality of the
  // generated order was not checked)
  bool disc_is_field_disc = true;

  static NumberField rationals();
  static NumberField make(int degree, int r1, int r2, BigInt disc, bool field_disc = true);
};

/// ln|d_K| / n_K in nats; |d_K| >= 2 required.
double alpha_of(const BigInt& disc, int degree);

/// m = squarefree * square^2 with squarefree squarefree; trial division.
std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t m);

/// Kronecker symbol (d/n), n >= 1.
int kronecker(std::int64_t d, std::uint64_t n);

bool is_fundamental_discriminant(std::int64_t d);

/// Real primitive character mod |d| attached to a fundamental discriminant.
class KroneckerCharacter {
 public:
  explicit KroneckerCharacter(std::int64_t d);

  std::int64_t d() const { return d_; }
  std::uint64_t conductor() const { return q_; }
  int parity() const { return parity_; }  // 0 for d>0, 1 for d<0

  int operator()(std::uint64_t n) const { return kronecker(d_, n); }

  /// chi_d(1..n_max) in one multiplicative pass (smallest-prime-factor sieve).
  std::vector<std::int8_t> values_up_to(std::uint32_t n_max) const;

 private:
  std::int64_t d_;
  std::uint64_t q_;
  int parity_;
};

/// Parses "x^k+c" (k >= 2, c >= 1). k = 2 uses the exact quadratic
/// discriminant rule; k >= 3 uses the trinomial polynomial discriminant
/// (-1)^{k(k-1)/2} k^k c^{k-1} with disc_is_field_disc = false.
NumberField parse_field_spec(std::string_view spec);

}  // namespace lowzero
