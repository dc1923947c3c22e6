#include "lowzero/fields.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lowzero {
namespace {

BigInt bigint_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_squarefree_u64(std::uint64_t m) {
  if (m == 0) return false;
  for (std::uint64_t p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

}  // namespace

NumberField NumberField::rationals() {
  NumberField f;
  f.degree = 1;
  f.r1 = 1;
  f.r2 = 0;
  f.disc = 1;
  f.alpha = 0.0;
  f.disc_is_field_disc = true;
  return f;
}

NumberField NumberField::make(int degree, int r1, int r2, BigInt disc, bool field_disc) {
  if (degree < 1 || r1 < 0 || r2 < 0 || degree != r1 + 2 * r2)
    throw std::invalid_argument("NumberField: signature inconsistent with degree");
  NumberField f;
  f.degree = degree;
  f.r1 = r1;
  f.r2 = r2;
  f.disc = std::move(disc);
  f.disc_is_field_disc = field_disc;
  if (degree == 1) {
    if (f.disc.compare_abs(BigInt(1)) != 0)
      throw std::invalid_argument("NumberField: degree 1 requires |disc| = 1");
    f.alpha = 0.0;
  } else {
    if (f.disc.compare_abs(BigInt(3)) < 0)
      throw std::invalid_argument("NumberField: |disc| < 3 impossible for degree >= 2");
    f.alpha = alpha_of(f.disc, degree);
  }
  return f;
}

double alpha_of(const BigInt& disc, int degree) {
  if (degree < 1) throw std::invalid_argument("alpha_of: degree must be positive");
  if (disc.compare_abs(BigInt(2)) < 0)
    throw std::domain_error("alpha_of: |disc| < 2 signals a degenerate field record");
  return disc.log_abs() / static_cast<double>(degree);
}

std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("squarefree_decompose: m must be positive");
  std::uint64_t squarefree = 1;
  std::uint64_t square = 1;
  for (std::uint64_t p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e & 1u) squarefree *= p;
    for (unsigned i = 0; i < e / 2; ++i) square *= p;
  }
  if (m > 1) squarefree *= m;
  return {squarefree, square};
}

int kronecker(std::int64_t d, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be positive");
  if (n >= (1ull << 63)) throw std::invalid_argument("kronecker: n out of range");
  int result = 1;
  if (n % 2 == 0) {
    if (d % 2 == 0) return 0;
    std::int64_t d8 = d % 8;
    if (d8 < 0) d8 += 8;
    const int two_symbol = (d8 == 1 || d8 == 7) ? 1 : -1;
    while (n % 2 == 0) {
      n /= 2;
      result *= two_symbol;
    }
  }
  if (n == 1) return result;
  std::uint64_t a;
  {
    std::int64_t r = d % static_cast<std::int64_t>(n);
    if (r < 0) r += static_cast<std::int64_t>(n);
    a = static_cast<std::uint64_t>(r);
  }
  std::uint64_t m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::uint64_t m8 = m % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t mod4 = ((d % 4) + 4) % 4;
  if (mod4 == 1) {
    return is_squarefree_u64(static_cast<std::uint64_t>(d < 0 ? -d : d));
  }
  if (mod4 != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t m4 = ((m % 4) + 4) % 4;
  if (m4 != 2 && m4 != 3) return false;
  return is_squarefree_u64(static_cast<std::uint64_t>(m < 0 ? -m : m));
}

KroneckerCharacter::KroneckerCharacter(std::int64_t d) : d_(d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("KroneckerCharacter: d is not a fundamental discriminant");
  q_ = static_cast<std::uint64_t>(d < 0 ? -d : d);
  parity_ = d < 0 ? 1 : 0;
}

std::vector<std::int8_t> KroneckerCharacter::values_up_to(std::uint32_t n_max) const {
  std::vector<std::int8_t> chi(static_cast<std::size_t>(n_max) + 1, 0);
  if (n_max == 0) return chi;
  chi[1] = 1;
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n_max; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint32_t p = spf[n];
    if (n == p) {
      chi[n] = static_cast<std::int8_t>(kronecker(d_, p));
    } else {
      chi[n] = static_cast<std::int8_t>(chi[p] * chi[n / p]);
    }
  }
  return chi;
}

NumberField parse_field_spec(std::string_view spec) {
  std::string s;
  s.reserve(spec.size());
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  const auto fail = [&](const char* why) {
    throw std::invalid_argument("parse_field_spec: " + std::string(why) + " in \"" + s + "\"");
  };

  std::size_t i = 0;
  if (i >= s.size() || (s[i] != 'x' && s[i] != 'X')) fail("expected leading 'x'");
  ++i;
  if (i >= s.size() || s[i] != '^') fail("expected '^'");
  ++i;
  std::size_t k_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == k_begin) fail("missing exponent");
  unsigned long k = 0;
  try {
    k = std::stoul(s.substr(k_begin, i - k_begin));
  } catch (const std::exception&) {
    fail("exponent out of range");
  }
  if (k < 2) fail("exponent must be >= 2");
  if (k > 64) fail("exponent larger than supported (64)");
  if (i >= s.size() || s[i] != '+') fail("expected '+'");
  ++i;
  std::string c_digits = s.substr(i);
  if (c_digits.empty()) fail("missing constant term");
  for (char c : c_digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("constant term not a positive integer");
  const BigInt c_big = BigInt::from_decimal(c_digits);
  if (c_big.is_zero()) fail("constant term must be nonzero");

  if (k == 2) {
    if (!c_big.fits_int64())
      fail("quadratic constant too large for exact squarefree decomposition");
    const std::uint64_t c = static_cast<std::uint64_t>(c_big.to_int64());
    const auto [sf, sq] = squarefree_decompose(c);
    (void)sq;
    // D = squarefree part of -c; d_K = D when D = 1 (mod 4), else 4D
    BigInt d = BigInt::from_u64(sf);
    d.negate();
    const std::uint32_t mod4 = (4u - sf % 4u) % 4u;
    if (mod4 != 1) d *= BigInt(4);
    return NumberField::make(2, 0, 1, std::move(d), true);
  }

  // trinomial discriminant of x^k + c: (-1)^{k(k-1)/2} k^k c^{k-1}
  BigInt d = BigInt::pow(k, static_cast<unsigned>(k)) * bigint_pow(c_big, static_cast<unsigned>(k - 1));
  if ((k * (k - 1) / 2) % 2 == 1) d.negate();
  const int kk = static_cast<int>(k);
  const int r1 = (k % 2 == 1) ? 1 : 0;
  const int r2 = (k % 2 == 1) ? (kk - 1) / 2 : kk / 2;
  return NumberField::make(kk, r1, r2, std::move(d), false);
}

}  // namespace lowzero
