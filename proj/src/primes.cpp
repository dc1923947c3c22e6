#include "lowzero/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lowzero/summation.hpp"
#include "lowzero/testfn.hpp"

namespace lowzero {
namespace {

constexpr std::uint64_t kFlatSieveLimit = 100'000'000;
constexpr std::uint64_t kHardCap = 1'000'000'000;

std::vector<std::uint32_t> primes_upto(std::uint32_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

MangoldtTable MangoldtTable::build(std::uint64_t x_max) {
  if (x_max < 2) throw std::invalid_argument("MangoldtTable: x_max must be >= 2");
  if (x_max > kHardCap) throw std::invalid_argument("MangoldtTable: x_max beyond the 1e9 cap");

  MangoldtTable table;
  table.x_max_ = x_max;

  struct Entry {
    std::uint32_t pp, p;
  };
  std::vector<Entry> entries;

  const std::uint32_t flat = static_cast<std::uint32_t>(std::min(x_max, kFlatSieveLimit));
  const std::vector<std::uint32_t> small_primes = primes_upto(flat);
  entries.reserve(small_primes.size() + small_primes.size() / 8 + 64);
  for (std::uint32_t p : small_primes) entries.push_back({p, p});

  if (x_max > kFlatSieveLimit) {
    // segments above the flat region; base primes to sqrt(x_max) are already
    // in small_primes since sqrt(1e9) < 1e8
    const std::uint64_t segment = 1u << 24;
    std::vector<bool> composite;
    for (std::uint64_t lo = kFlatSieveLimit + 1; lo <= x_max; lo += segment) {
      const std::uint64_t hi = std::min(x_max, lo + segment - 1);
      composite.assign(hi - lo + 1, false);
      for (std::uint32_t p : small_primes) {
        const std::uint64_t p64 = p;
        if (p64 * p64 > hi) break;
        std::uint64_t start = ((lo + p64 - 1) / p64) * p64;
        if (start < p64 * p64) start = p64 * p64;
        for (std::uint64_t j = start; j <= hi; j += p64) composite[j - lo] = true;
      }
      for (std::uint64_t n = lo; n <= hi; ++n)
        if (!composite[n - lo])
          entries.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n)});
    }
  }

  // higher prime powers: base primes run to sqrt(x_max)
  for (std::uint32_t p : small_primes) {
    const std::uint64_t p64 = p;
    if (p64 * p64 > x_max) break;
    for (std::uint64_t q = p64 * p64; q <= x_max; q *= p64) {
      entries.push_back({static_cast<std::uint32_t>(q), p});
      if (q > x_max / p64) break;
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.pp < b.pp; });
  table.pp_.resize(entries.size());
  table.p_.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    table.pp_[i] = entries[i].pp;
    table.p_[i] = entries[i].p;
  }
  return table;
}

double MangoldtTable::lambda(std::size_t i) const {
  return std::log(static_cast<double>(p_[i]));
}

std::size_t MangoldtTable::count_upto(double x) const {
  if (x < 2.0) return 0;
  // nudge up by one ulp so n <= x holds when x lands on an integer boundary
  const double limit = x * (1.0 + 4e-16);
  const std::uint64_t n = static_cast<std::uint64_t>(limit);
  auto it = std::upper_bound(pp_.begin(), pp_.end(),
                             static_cast<std::uint32_t>(std::min<std::uint64_t>(n, 0xffffffffull)));
  return static_cast<std::size_t>(it - pp_.begin());
}

double chebyshev_psi(double x, const MangoldtTable& table) {
  if (x > static_cast<double>(table.x_max()) * (1.0 + 1e-12))
    throw std::out_of_range("chebyshev_psi: x exceeds the table range");
  const std::size_t count = table.count_upto(x);
  StableSum sum;
  for (std::size_t i = 0; i < count; ++i) sum.add(table.lambda(i));
  return sum.value();
}

double lambda_weighted_sum(double T, const MangoldtTable& table) {
  if (!(T > 0.0)) throw std::domain_error("lambda_weighted_sum: T must be positive");
  const double x = std::exp(T);
  if (x > static_cast<double>(table.x_max()) * (1.0 + 1e-12))
    throw std::out_of_range("lambda_weighted_sum: e^T exceeds the table range");
  const std::size_t count = table.count_upto(x);
  StableSum sum;
  for (std::size_t i = 0; i < count; ++i)
    sum.add(table.lambda(i) / std::sqrt(static_cast<double>(table.prime_power(i))));
  return sum.value();
}

double weighted_prime_sum_with_F(double T, const MangoldtTable& table) {
  if (!(T > 0.0)) throw std::domain_error("weighted_prime_sum_with_F: T must be positive");
  const double x = std::exp(T);
  if (x > static_cast<double>(table.x_max()) * (1.0 + 1e-12))
    throw std::out_of_range("weighted_prime_sum_with_F: e^T exceeds the table range");
  const std::size_t count = table.count_upto(x);
  StableSum sum;
  for (std::size_t i = 0; i < count; ++i) {
    const double n = static_cast<double>(table.prime_power(i));
    sum.add(table.lambda(i) / std::sqrt(n) * f_eval(std::log(n) / T));
  }
  return sum.value();
}

PrimeIdealLocal prime_ideal_decomposition(const KroneckerCharacter& chi, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("prime_ideal_decomposition: p is not prime");
  PrimeIdealLocal local;
  local.p = p;
  const int value = chi(p);
  if (value > 0) {
    local.splitting = Splitting::split;
    local.ideal_norms = {{p, 2}};
  } else if (value < 0) {
    local.splitting = Splitting::inert;
    local.ideal_norms = {{p * p, 1}};
  } else {
    local.splitting = Splitting::ramified;
    local.ideal_norms = {{p, 1}};
  }
  return local;
}

double quadratic_prime_sum(const KroneckerCharacter& chi, double T, const MangoldtTable& table) {
  if (!(T > 0.0)) throw std::domain_error("quadratic_prime_sum: T must be positive");
  const double x = std::exp(T);
  if (x > static_cast<double>(table.x_max()) * (1.0 + 1e-12))
    throw std::out_of_range("quadratic_prime_sum: e^T exceeds the table range");
  const std::size_t count = table.count_upto(x);
  StableSum sum;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t pp = table.prime_power(i);
    const std::uint32_t p = table.prime(i);
    const int value = chi(p);
    double factor;
    if (value > 0) {
      // p splits: two ideals of norm p, every power contributes twice
      factor = 2.0;
    } else if (value == 0) {
      // ramified: one ideal of norm p
      factor = 1.0;
    } else {
      // inert: one ideal of norm p^2, so only even rational powers appear
      const auto root = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(pp))));
      const bool even_power = static_cast<std::uint64_t>(root) * root == pp;
      if (!even_power) continue;
      factor = 2.0;
    }
    const double n = static_cast<double>(pp);
    sum.add(factor * table.lambda(i) / std::sqrt(n) * f_eval(std::log(n) / T));
  }
  return sum.value();
}

}  // namespace lowzero
