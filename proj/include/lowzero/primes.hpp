#pragma once

#include <cstdint>
#include <vector>

#include "lowzero/fields.hpp"

namespace lowzero {

/// Table of prime powers n = p^m <= x_max with their base primes.
/// Lambda(n) = ln p; zeros of the von Mangoldt function are not stored.
class MangoldtTable {
 public:
  // 2 <= x_max <= 1e9; flat sieve to 1e8, segmented beyond.
  static MangoldtTable build(std::uint64_t x_max);

  std::uint64_t x_max() const { return x_max_; }
  std::size_t size() const { return pp_.size(); }
  std::uint32_t prime_power(std::size_t i) const { return pp_[i]; }
  std::uint32_t prime(std::size_t i) const { return p_[i]; }
  double lambda(std::size_t i) const;

  /// Number of entries with prime_power <= x.
  std::size_t count_upto(double x) const;

 private:
  std::uint64_t x_max_ = 0;
  std::vector<std::uint32_t> pp_;  // ascending
  std::vector<std::uint32_t> p_;
};

/// Chebyshev Psi(x) = sum_{n <= x} Lambda(n), compensated.
double chebyshev_psi(double x, const MangoldtTable& table);

/// sum_{n <= e^T} Lambda(n)/sqrt(n).
double lambda_weighted_sum(double T, const MangoldtTable& table);

/// sum_{n <= e^T} Lambda(n)/sqrt(n) * F_T(ln n): the rational-prime sum of
/// the explicit formula for K = Q.
double weighted_prime_sum_with_F(double T, const MangoldtTable& table);

enum class Splitting { split, inert, ramified };

struct PrimeIdealLocal {
  std::uint64_t p = 0;
  Splitting splitting = Splitting::split;
  // (ideal norm, number of primes above p with that norm)
  std::vector<std::pair<std::uint64_t, int>> ideal_norms;
};

/// Splitting of p in the quadratic field of discriminant d via chi_d(p).
PrimeIdealLocal prime_ideal_decomposition(const KroneckerCharacter& chi, std::uint64_t p);

/// sum over prime ideals and powers of ln(N p)/N p^{m/2} F_T(m ln N p) for
/// the quadratic field of chi, assembled through the splitting law.
double quadratic_prime_sum(const KroneckerCharacter& chi, double T, const MangoldtTable& table);

}  // namespace lowzero
