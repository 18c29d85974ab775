#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "factorkit/natural.hpp"

namespace factorkit {

/// Witness set for Miller-Rabin. Testing against these twelve bases is
/// deterministic for every n below 3317044064679887385961981 (~3.3e24).
inline constexpr std::array<std::uint32_t, 12> kMillerRabinWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

enum class PrimalityMethod {
  SmallSieve,              // sieve table (n < 2^20), parity, or witness divisor
  DeterministicWitnessSet, // full witness run inside the proven range
  ProbabilisticFallback,   // beyond the proven range; verdict not certified
};

struct PrimalityVerdict {
  Natural n;
  bool is_prime;
  PrimalityMethod method;
};

/// Deterministic primality verdict for all n below ~3.3e24; above that the
/// same witnesses (plus extra strong-pseudoprime rounds) still run, but the
/// verdict is flagged ProbabilisticFallback.
PrimalityVerdict is_prime(const Natural& n);

/// Same verdict as is_prime() for word-sized n; the factorization engines'
/// inner loops call this to skip bignum traffic.
bool is_prime_u64(std::uint64_t n);

/// Random prime with exactly `bits` significant bits (top bit set), found by
/// rejection sampling odd candidates through is_prime.
/// Throws InvalidArgument for bits < 3.
Natural gen_prime(std::size_t bits, std::mt19937_64& rng);

}  // namespace factorkit
