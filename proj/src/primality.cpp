#include "factorkit/primality.hpp"

#include <cstddef>

namespace factorkit {

namespace {

// Sieved verdicts for small values; the factorization engines hammer
// is_prime with sub-2^20 candidates, where a table beats witness runs by
// orders of magnitude.
constexpr std::uint64_t kSmallTableLimit = std::uint64_t(1) << 20;

const std::vector<bool>& small_prime_table() {
  static const std::vector<bool> table = [] {
    std::vector<bool> flags(kSmallTableLimit, true);
    flags[0] = flags[1] = false;
    for (std::uint64_t i = 2; i * i < kSmallTableLimit; ++i) {
      if (flags[i]) {
        for (std::uint64_t j = i * i; j < kSmallTableLimit; j += i) {
          flags[j] = false;
        }
      }
    }
    return flags;
  }();
  return table;
}

// Smallest composite that the twelve-witness set cannot certify.
const Natural& deterministic_limit() {
  static const Natural limit =
      Natural::from_decimal("3317044064679887385961981");
  return limit;
}

// Extra strong-pseudoprime rounds appended beyond the certified range.
constexpr std::array<std::uint32_t, 8> kFallbackWitnesses = {
    41, 43, 47, 53, 59, 61, 67, 71};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= 0xFFFFFFFFull) {
    return (a * b) % m;
  }
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One strong-pseudoprime round: n - 1 = d * 2^s with d odd.
bool witness_passes_u64(std::uint64_t n, std::uint64_t d, int s,
                        std::uint64_t a) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) {
      return true;
    }
  }
  return false;
}

bool witness_passes(const Natural& n, const Natural& n_minus_1,
                    const Natural& d, std::size_t s, std::uint32_t a) {
  Natural x = mod_pow(Natural(a), d, n);
  if (x == 1 || x == n_minus_1) {
    return true;
  }
  for (std::size_t i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) {
      return true;
    }
  }
  return false;
}

// Full witness run for odd n >= 2^20 coprime to every witness prime.
bool miller_rabin_u64(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : kMillerRabinWitnesses) {
    if (!witness_passes_u64(n, d, s, a)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < kSmallTableLimit) {
    return small_prime_table()[n];
  }
  for (std::uint32_t w : kMillerRabinWitnesses) {
    if (n % w == 0) {
      return false;  // n > 37, so equality is off the table
    }
  }
  return miller_rabin_u64(n);
}

PrimalityVerdict is_prime(const Natural& n) {
  if (n < 2) {
    return {n, false, PrimalityMethod::SmallSieve};
  }
  if (n == 2) {
    return {n, true, PrimalityMethod::SmallSieve};
  }
  if (n.is_even()) {
    return {n, false, PrimalityMethod::SmallSieve};
  }
  if (n.fits_u64() && n.to_u64() < kSmallTableLimit) {
    return {n, small_prime_table()[n.to_u64()], PrimalityMethod::SmallSieve};
  }
  for (std::uint32_t w : kMillerRabinWitnesses) {
    if (w != 2 && n.mod_u32(w) == 0) {
      return {n, false, PrimalityMethod::SmallSieve};  // n > 2^20 > w
    }
  }

  if (n.fits_u64()) {
    return {n, miller_rabin_u64(n.to_u64()),
            PrimalityMethod::DeterministicWitnessSet};
  }

  const Natural n_minus_1 = n - 1;
  Natural d = n_minus_1;
  std::size_t s = 0;
  while (d.is_even()) {
    d >>= 1;
    ++s;
  }

  const bool certified = n < deterministic_limit();
  for (std::uint32_t a : kMillerRabinWitnesses) {
    if (!witness_passes(n, n_minus_1, d, s, a)) {
      return {n, false,
              certified ? PrimalityMethod::DeterministicWitnessSet
                        : PrimalityMethod::ProbabilisticFallback};
    }
  }
  if (certified) {
    return {n, true, PrimalityMethod::DeterministicWitnessSet};
  }
  for (std::uint32_t a : kFallbackWitnesses) {
    if (!witness_passes(n, n_minus_1, d, s, a)) {
      return {n, false, PrimalityMethod::ProbabilisticFallback};
    }
  }
  return {n, true, PrimalityMethod::ProbabilisticFallback};
}

Natural gen_prime(std::size_t bits, std::mt19937_64& rng) {
  if (bits < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "gen_prime requires bits >= 3");
  }
  while (true) {
    Natural candidate;
    for (std::size_t filled = 0; filled < bits; filled += 64) {
      candidate <<= 64;
      candidate += Natural(rng());
    }
    if (candidate.bit_length() > bits) {
      candidate >>= candidate.bit_length() - bits;
    }
    if (candidate.bit_length() < bits) {
      candidate += Natural(1) << (bits - 1);  // force the top bit
    }
    if (candidate.is_even()) {
      candidate += 1;
    }
    if (is_prime(candidate).is_prime) {
      return candidate;
    }
  }
}

}  // namespace factorkit
