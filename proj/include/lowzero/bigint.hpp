#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lowzero {

// Minimal signed arbitrary-precision integer: just enough for exact
// discriminant arithmetic (products, powers, word division, decimal I/O,
// accurate natural log of the magnitude).
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  static BigInt from_u64(std::uint64_t v);
  static BigInt from_decimal(std::string_view text);
  // base^exp, base > 0
  static BigInt pow(std::uint64_t base, unsigned exp);

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return negative_; }
  BigInt abs() const;
  void negate();

  BigInt operator*(const BigInt& rhs) const;
  BigInt& operator*=(const BigInt& rhs);

  // Quotient and remainder under division by a machine word (divisor > 0).
  // The remainder is reported for the magnitude.
  BigInt div_u32(std::uint32_t divisor, std::uint32_t* remainder = nullptr) const;
  std::uint32_t mod_u32(std::uint32_t m) const;  // magnitude mod m

  bool operator==(const BigInt& rhs) const = default;
  // Comparison of magnitudes: -1, 0, +1.
  int compare_abs(const BigInt& rhs) const;

  unsigned bit_length() const;  // 0 for zero
  bool fits_int64() const;
  std::int64_t to_int64() const;  // valid when fits_int64()

  // ln|x|, accurate to a few ulps (top 53 bits exact + exponent * ln 2).
  double log_abs() const;

  std::string to_string() const;  // decimal, leading '-' when negative

 private:
  void trim();
  // little-endian base-2^32 magnitude; empty means zero
  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;
};

}  // namespace lowzero
