#include "factorkit/natural.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>

namespace factorkit {

namespace {

constexpr std::uint64_t kLimbBase = std::uint64_t(1) << 32;
constexpr std::uint32_t kLimbMask = 0xFFFFFFFFu;

// Largest power of ten in a limb; decimal io works in chunks of 9 digits.
constexpr std::uint32_t kDecChunkBase = 1'000'000'000u;
constexpr int kDecChunkDigits = 9;

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= kLimbMask) {
    return (a * b) % m;  // operands already reduced below 2^32
  }
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, const Natural& exp,
                          std::uint64_t m) {
  std::uint64_t result = 1 % m;
  std::uint64_t b = base % m;
  const std::size_t nbits = exp.bit_length();
  for (std::size_t i = 0; i < nbits; ++i) {
    if (exp.bit(i)) {
      result = mul_mod_u64(result, b, m);
    }
    b = mul_mod_u64(b, b, m);
  }
  return result;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) {
    return n;
  }
  // Start at a power of two >= sqrt(n); Newton descends monotonically.
  std::uint64_t x = std::uint64_t(1) << ((std::bit_width(n) + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) {
      return x;
    }
    x = y;
  }
}

}  // namespace

Natural::Natural(std::uint64_t value) {
  if (value > kLimbMask) {
    limbs_ = {static_cast<std::uint32_t>(value),
              static_cast<std::uint32_t>(value >> 32)};
  } else if (value != 0) {
    limbs_ = {static_cast<std::uint32_t>(value)};
  }
}

void Natural::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) {
    limbs_.pop_back();
  }
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidNumber, "empty decimal string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::InvalidNumber,
                  "invalid decimal digit in \"" + std::string(text) + "\"");
    }
  }
  Natural result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t take = std::min<std::size_t>(
        pos == 0 && text.size() % kDecChunkDigits != 0
            ? text.size() % kDecChunkDigits
            : kDecChunkDigits,
        text.size() - pos);
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
      scale *= 10;
    }
    result.mul_add_small(take == kDecChunkDigits ? kDecChunkBase : scale,
                         chunk);
    pos += take;
  }
  return result;
}

std::string Natural::to_decimal() const {
  if (is_zero()) {
    return "0";
  }
  Natural scratch = *this;
  std::vector<std::uint32_t> chunks;
  while (!scratch.is_zero()) {
    chunks.push_back(scratch.divmod_small(kDecChunkBase));
  }
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t Natural::bit_length() const {
  if (limbs_.empty()) {
    return 0;
  }
  return 32 * (limbs_.size() - 1) +
         static_cast<std::size_t>(std::bit_width(limbs_.back()));
}

bool Natural::bit(std::size_t index) const {
  const std::size_t limb = index / 32;
  if (limb >= limbs_.size()) {
    return false;
  }
  return (limbs_[limb] >> (index % 32)) & 1u;
}

std::uint64_t Natural::to_u64() const {
  std::uint64_t value = 0;
  if (limbs_.size() >= 2) {
    value = std::uint64_t(limbs_[1]) << 32;
  }
  if (!limbs_.empty()) {
    value |= limbs_[0];
  }
  return value;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) {
      return a.limbs_[i] <=> b.limbs_[i];
    }
  }
  return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& other) {
  if (other.limbs_.size() > limbs_.size()) {
    limbs_.resize(other.limbs_.size(), 0);
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < other.limbs_.size()) {
      sum += other.limbs_[i];
    } else if (carry == 0) {
      break;
    }
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  return *this;
}

Natural& Natural::operator-=(const Natural& other) {
  if (*this < other) {
    throw Error(ErrorCode::Underflow, "natural subtraction underflow");
  }
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sub = borrow;
    if (i < other.limbs_.size()) {
      sub += other.limbs_[i];
    } else if (borrow == 0) {
      break;
    }
    const std::uint64_t cur = limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur - sub);
    borrow = cur < sub ? 1 : 0;
  }
  trim();
  return *this;
}

Natural operator*(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) {
    return Natural{};
  }
  Natural result;
  result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a.limbs_[i];
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      // ai*bj + limb + carry < 2^64 exactly, so the accumulation is safe
      const std::uint64_t cur =
          ai * b.limbs_[j] + result.limbs_[i + j] + carry;
      result.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    result.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
  }
  result.trim();
  return result;
}

Natural& Natural::operator<<=(std::size_t bits) {
  if (is_zero() || bits == 0) {
    return *this;
  }
  const std::size_t limb_shift = bits / 32;
  const unsigned bit_shift = bits % 32;
  if (bit_shift != 0) {
    std::uint32_t carry = 0;
    for (auto& limb : limbs_) {
      const std::uint32_t next = limb >> (32 - bit_shift);
      limb = (limb << bit_shift) | carry;
      carry = next;
    }
    if (carry != 0) {
      limbs_.push_back(carry);
    }
  }
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
  const std::size_t limb_shift = bits / 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
  const unsigned bit_shift = bits % 32;
  if (bit_shift != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      limbs_[i] >>= bit_shift;
      if (i + 1 < limbs_.size()) {
        limbs_[i] |= limbs_[i + 1] << (32 - bit_shift);
      }
    }
  }
  trim();
  return *this;
}

void Natural::mul_add_small(std::uint32_t mul, std::uint32_t add) {
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    const std::uint64_t cur = std::uint64_t(limb) * mul + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
}

std::uint32_t Natural::divmod_small(std::uint32_t div) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / div);
    rem = cur % div;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::uint32_t Natural::mod_u32(std::uint32_t m) const {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = ((rem << 32) | limbs_[i]) % m;
  }
  return static_cast<std::uint32_t>(rem);
}

Natural::DivMod Natural::divmod(const Natural& a, const Natural& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero");
  }
  if (a < b) {
    return {Natural{}, a};
  }
  if (b.limbs_.size() == 1) {
    Natural q = a;
    const std::uint32_t r = q.divmod_small(b.limbs_[0]);
    return {std::move(q), Natural(r)};
  }

  // Knuth algorithm D on base-2^32 limbs (the divmnu formulation).
  const std::size_t n = b.limbs_.size();
  const std::size_t m = a.limbs_.size() - n;
  const unsigned shift = std::countl_zero(b.limbs_.back());

  const Natural normalized_a = a << shift;
  const Natural normalized_b = b << shift;
  std::vector<std::uint32_t> u = normalized_a.limbs_;
  u.resize(m + n + 1, 0);
  const std::vector<std::uint32_t>& v = normalized_b.limbs_;

  Natural q;
  q.limbs_.assign(m + 1, 0);

  for (std::size_t j = m + 1; j-- > 0;) {
    const std::uint64_t num = (std::uint64_t(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = num / v[n - 1];
    std::uint64_t rhat = num % v[n - 1];
    while (qhat >= kLimbBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kLimbBase) {
        break;
      }
    }

    // Multiply and subtract; k carries the running borrow.
    std::int64_t k = 0;
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t p = qhat * v[i];
      t = static_cast<std::int64_t>(u[i + j]) - k -
          static_cast<std::int64_t>(p & kLimbMask);
      u[i + j] = static_cast<std::uint32_t>(t);
      k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
    }
    t = static_cast<std::int64_t>(u[j + n]) - k;
    u[j + n] = static_cast<std::uint32_t>(t);

    q.limbs_[j] = static_cast<std::uint32_t>(qhat);
    if (t < 0) {
      // qhat was one too large; add the divisor back.
      --q.limbs_[j];
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sum = std::uint64_t(u[i + j]) + v[i] + carry;
        u[i + j] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
      }
      u[j + n] += static_cast<std::uint32_t>(carry);
    }
  }
  q.trim();

  Natural r;
  r.limbs_.assign(u.begin(), u.begin() + n);
  r.trim();
  r >>= shift;
  return {std::move(q), std::move(r)};
}

std::ostream& operator<<(std::ostream& os, const Natural& value) {
  return os << value.to_decimal();
}

Natural isqrt(const Natural& n) {
  if (n.fits_u64()) {
    return Natural(isqrt_u64(n.to_u64()));
  }
  Natural x = Natural(1) << ((n.bit_length() + 1) / 2);
  while (true) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) {
      return x;
    }
    x = std::move(y);
  }
}

Natural gcd(Natural a, Natural b) {
  if (a.fits_u64() && b.fits_u64()) {
    std::uint64_t x = a.to_u64();
    std::uint64_t y = b.to_u64();
    while (y != 0) {
      const std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Natural(x);
  }
  while (!b.is_zero()) {
    Natural t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Natural mod_pow(const Natural& base, const Natural& exp,
                const Natural& modulus) {
  if (modulus.is_zero()) {
    throw Error(ErrorCode::InvalidModulus, "mod_pow modulus must be >= 1");
  }
  if (modulus.fits_u64()) {
    std::uint64_t m = modulus.to_u64();
    if (m == 1) {
      return Natural{};
    }
    const std::uint64_t b =
        base.fits_u64() ? base.to_u64() % m : (base % modulus).to_u64();
    return Natural(pow_mod_u64(b, exp, m));
  }
  Natural result(1);
  Natural b = base % modulus;
  const std::size_t nbits = exp.bit_length();
  for (std::size_t i = 0; i < nbits; ++i) {
    if (exp.bit(i)) {
      result = result * b % modulus;
    }
    b = b * b % modulus;
  }
  return result;
}

Natural mod_inverse(const Natural& a, const Natural& m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidModulus, "mod_inverse modulus must be >= 2");
  }
  // Extended Euclid with the Bezout coefficient kept reduced mod m,
  // which sidesteps signed arithmetic entirely.
  Natural r0 = m;
  Natural r1 = a % m;
  Natural t0;      // coefficient of r0
  Natural t1(1);   // coefficient of r1
  while (!r1.is_zero()) {
    auto [q, r2] = Natural::divmod(r0, r1);
    Natural qt = q * t1 % m;
    Natural t2 = t0 >= qt ? t0 - qt : t0 + m - qt;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 != 1) {
    throw Error(ErrorCode::NotInvertible,
                "no modular inverse: gcd(" + a.to_decimal() + ", " +
                    m.to_decimal() + ") != 1");
  }
  return t0;
}

}  // namespace factorkit
