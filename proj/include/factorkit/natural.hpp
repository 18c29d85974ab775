#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "factorkit/error.hpp"

namespace factorkit {

/// Arbitrary-precision nonnegative integer.
///
/// Base-2^32 limbs, least significant first, no trailing zero limbs
/// (zero is the empty limb vector). All arithmetic is exact; nothing in
/// this module touches floating point.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);

  /// Parses ASCII decimal text (digits only, no sign, no separators).
  /// Leading zeros are accepted and normalized away.
  static Natural from_decimal(std::string_view text);

  /// Canonical decimal form: no leading zeros except the single digit "0".
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  bool is_odd() const { return !is_even(); }

  /// Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  bool bit(std::size_t index) const;

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // pre: fits_u64()

  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);
  friend bool operator==(const Natural& a, const Natural& b) = default;

  Natural& operator+=(const Natural& other);
  Natural& operator-=(const Natural& other);  // throws Underflow if other > *this
  Natural& operator<<=(std::size_t bits);
  Natural& operator>>=(std::size_t bits);

  friend Natural operator+(Natural a, const Natural& b) { a += b; return a; }
  friend Natural operator-(Natural a, const Natural& b) { a -= b; return a; }
  friend Natural operator*(const Natural& a, const Natural& b);
  friend Natural operator<<(Natural a, std::size_t bits) { a <<= bits; return a; }
  friend Natural operator>>(Natural a, std::size_t bits) { a >>= bits; return a; }

  struct DivMod;

  /// Exact division with remainder: a = q * b + r, 0 <= r < b.
  /// Throws DivisionByZero for b = 0.
  static DivMod divmod(const Natural& a, const Natural& b);

  /// Remainder modulo a machine word, without building the quotient.
  std::uint32_t mod_u32(std::uint32_t m) const;  // pre: m != 0

 private:
  void trim();
  void mul_add_small(std::uint32_t mul, std::uint32_t add);
  std::uint32_t divmod_small(std::uint32_t div);  // in place; returns remainder

  std::vector<std::uint32_t> limbs_;
};

struct Natural::DivMod {
  Natural quotient;
  Natural remainder;
};

inline Natural operator/(const Natural& a, const Natural& b) {
  return Natural::divmod(a, b).quotient;
}

inline Natural operator%(const Natural& a, const Natural& b) {
  return Natural::divmod(a, b).remainder;
}

std::ostream& operator<<(std::ostream& os, const Natural& value);

/// floor(sqrt(n)), exact at any size (integer Newton iteration).
Natural isqrt(const Natural& n);

/// Greatest common divisor; gcd(0, 0) = 0.
Natural gcd(Natural a, Natural b);

/// base^exp mod modulus by square-and-multiply.
/// Throws InvalidModulus for modulus = 0.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

/// The d in [1, m) with a*d = 1 (mod m), by extended Euclid.
/// Throws InvalidModulus for m < 2 and NotInvertible when gcd(a, m) != 1.
Natural mod_inverse(const Natural& a, const Natural& m);

}  // namespace factorkit
