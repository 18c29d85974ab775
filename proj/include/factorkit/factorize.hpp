#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "factorkit/natural.hpp"

namespace factorkit {

enum class FactorOutcome {
  Factored,
  Prime,    // candidate scan exhausted; n proven prime
  Invalid,  // n outside the engine's domain
};

enum class FactorMethod {
  Trial,
  Knj,
};

/// One KNJ loop candidate. Consecutive entries descend by exactly 2;
/// y_integral is meaningful only when x_prime holds.
struct KnjTraceEntry {
  Natural x;
  bool x_prime;
  bool y_integral;
};

struct FactorReport {
  Natural n;
  FactorOutcome outcome = FactorOutcome::Invalid;
  Natural p;  // set iff Factored; p is prime and p <= q
  Natural q;
  FactorMethod method = FactorMethod::Trial;
  std::uint64_t iterations = 0;
  std::optional<std::vector<KnjTraceEntry>> trace;
};

/// Baseline engine: tries candidates 2, 3, 4, ... up to isqrt(n) and stops
/// at the first divisor. Iteration count is the number of candidates
/// examined, so a hit at candidate c reports c - 1 and a full scan that
/// proves n prime reports isqrt(n) - 1.
/// n < 2 yields Invalid.
FactorReport trial_division(const Natural& n);

/// KNJ engine: descends odd candidates X from the even-adjusted
/// floor(sqrt(n)) (incremented by one when even) down to 3, testing
/// divisibility only at prime X. Every candidate examined counts as one
/// iteration whether or not it is prime. An exhausted scan proves an odd
/// n prime, since any odd composite has an odd prime factor <= isqrt(n).
/// Even n or n < 3 yields Invalid; callers must strip factors of two
/// themselves.
FactorReport knj_factorize(const Natural& n, bool record_trace = false);

/// Re-checks every FactorReport invariant: factor product and ordering,
/// primality of p, iteration floor, trace descent and anchoring, and the
/// claimed outcome itself.
bool verify(const FactorReport& report);

}  // namespace factorkit
