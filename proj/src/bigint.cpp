#include "lowzero/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lowzero {

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

BigInt BigInt::from_u64(std::uint64_t v) {
  BigInt r;
  while (v != 0) {
    r.limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
  return r;
}

BigInt BigInt::from_decimal(std::string_view text) {
  BigInt r;
  bool neg = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("BigInt: empty decimal literal");
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid decimal digit");
    // r = r*10 + digit
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10u + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry != 0) {
      r.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  r.trim();
  r.negative_ = neg && !r.is_zero();
  return r;
}

BigInt BigInt::pow(std::uint64_t base, unsigned exp) {
  BigInt r = from_u64(1);
  BigInt b = from_u64(base);
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

void BigInt::negate() {
  if (!is_zero()) negative_ = !negative_;
}

BigInt BigInt::operator*(const BigInt& rhs) const {
  BigInt r;
  if (is_zero() || rhs.is_zero()) return r;
  r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t a = limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[i + j]) + a * rhs.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[k]) + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  r.negative_ = negative_ != rhs.negative_;
  return r;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  *this = *this * rhs;
  return *this;
}

BigInt BigInt::div_u32(std::uint32_t divisor, std::uint32_t* remainder) const {
  if (divisor == 0) throw std::domain_error("BigInt: division by zero");
  BigInt q;
  q.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    q.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  q.trim();
  q.negative_ = negative_ && !q.is_zero();
  if (remainder != nullptr) *remainder = static_cast<std::uint32_t>(rem);
  return q;
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
  if (m == 0) throw std::domain_error("BigInt: modulus zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % m;
  return static_cast<std::uint32_t>(rem);
}

int BigInt::compare_abs(const BigInt& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

unsigned BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  unsigned top = 32;
  std::uint32_t hi = limbs_.back();
  while ((hi & 0x80000000u) == 0) {
    hi <<= 1;
    --top;
  }
  return static_cast<unsigned>(32 * (limbs_.size() - 1)) + top;
}

bool BigInt::fits_int64() const {
  unsigned bits = bit_length();
  if (bits < 64) return true;
  if (bits > 64) return false;
  // exactly 64 bits: only -2^63 fits
  return negative_ && limbs_[0] == 0 && limbs_[1] == 0x80000000u;
}

std::int64_t BigInt::to_int64() const {
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

double BigInt::log_abs() const {
  if (is_zero()) throw std::domain_error("BigInt: log of zero");
  const unsigned bits = bit_length();
  if (bits <= 53) {
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return std::log(static_cast<double>(mag));
  }
  // top 53 bits exactly, remaining bit count goes into the exponent
  const unsigned shift = bits - 53;
  std::uint64_t mant = 0;
  for (int b = 52; b >= 0; --b) {
    const unsigned pos = shift + static_cast<unsigned>(b);
    const std::uint32_t limb = limbs_[pos / 32];
    mant = (mant << 1) | ((limb >> (pos % 32)) & 1u);
  }
  return std::log(static_cast<double>(mant)) + static_cast<double>(shift) * std::numbers::ln2_v<double>;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt cur = abs();
  while (!cur.is_zero()) {
    std::uint32_t rem = 0;
    cur = cur.div_u32(1000000000u, &rem);
    if (cur.is_zero()) {
      while (rem != 0) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    } else {
      for (int i = 0; i < 9; ++i) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
  }
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

}  // namespace lowzero
