#include "factorkit/factorize.hpp"

#include "factorkit/primality.hpp"

namespace factorkit {

namespace {

FactorReport trial_division_u64(std::uint64_t n) {
  FactorReport report{.n = Natural(n), .method = FactorMethod::Trial};
  const std::uint64_t root = isqrt(Natural(n)).to_u64();
  for (std::uint64_t c = 2; c <= root; ++c) {
    if (n % c == 0) {
      report.outcome = FactorOutcome::Factored;
      report.p = Natural(c);
      report.q = Natural(n / c);
      report.iterations = c - 1;
      return report;
    }
  }
  report.outcome = FactorOutcome::Prime;
  report.iterations = root - 1;
  return report;
}

FactorReport knj_u64(std::uint64_t n) {
  FactorReport report{.n = Natural(n), .method = FactorMethod::Knj};
  std::uint64_t x = isqrt(Natural(n)).to_u64();
  if (x % 2 == 0) {
    ++x;
  }
  std::uint64_t iterations = 0;
  for (; x >= 3; x -= 2) {
    ++iterations;
    if (is_prime_u64(x) && n % x == 0) {
      report.outcome = FactorOutcome::Factored;
      report.p = Natural(x);
      report.q = Natural(n / x);
      report.iterations = iterations;
      return report;
    }
  }
  report.outcome = FactorOutcome::Prime;
  report.iterations = iterations;
  return report;
}

}  // namespace

FactorReport trial_division(const Natural& n) {
  if (n < 2) {
    return {.n = n, .outcome = FactorOutcome::Invalid,
            .method = FactorMethod::Trial};
  }
  if (n.fits_u64()) {
    return trial_division_u64(n.to_u64());
  }

  FactorReport report{.n = n, .method = FactorMethod::Trial};
  const Natural root = isqrt(n);
  const Natural one(1);
  std::uint64_t iterations = 0;
  for (Natural c(2); c <= root; c += one) {
    ++iterations;
    auto [quot, rem] = Natural::divmod(n, c);
    if (rem.is_zero()) {
      report.outcome = FactorOutcome::Factored;
      report.p = c;
      report.q = std::move(quot);
      report.iterations = iterations;
      return report;
    }
  }
  report.outcome = FactorOutcome::Prime;
  report.iterations = iterations;
  return report;
}

FactorReport knj_factorize(const Natural& n, bool record_trace) {
  if (n < 3 || n.is_even()) {
    return {.n = n, .outcome = FactorOutcome::Invalid,
            .method = FactorMethod::Knj};
  }
  if (n.fits_u64() && !record_trace) {
    return knj_u64(n.to_u64());
  }

  FactorReport report{.n = n, .method = FactorMethod::Knj};
  if (record_trace) {
    report.trace.emplace();
  }

  Natural x = isqrt(n);
  if (x.is_even()) {
    x += 1;
  }
  const Natural two(2);
  std::uint64_t iterations = 0;
  while (x >= 3) {
    ++iterations;
    const bool x_prime = is_prime(x).is_prime;
    bool y_integral = false;
    Natural quotient;
    if (x_prime) {
      auto [quot, rem] = Natural::divmod(n, x);
      y_integral = rem.is_zero();
      quotient = std::move(quot);
    }
    if (report.trace) {
      report.trace->push_back({x, x_prime, y_integral});
    }
    if (x_prime && y_integral) {
      report.outcome = FactorOutcome::Factored;
      report.p = std::move(x);
      report.q = std::move(quotient);
      report.iterations = iterations;
      return report;
    }
    x -= two;
  }
  report.outcome = FactorOutcome::Prime;
  report.iterations = iterations;
  return report;
}

bool verify(const FactorReport& report) {
  switch (report.outcome) {
    case FactorOutcome::Invalid:
      return report.method == FactorMethod::Trial
                 ? report.n < 2
                 : report.n < 3 || report.n.is_even();

    case FactorOutcome::Prime:
      return is_prime(report.n).is_prime;

    case FactorOutcome::Factored: {
      if (report.iterations < 1) {
        return false;
      }
      if (report.p <= 1 || report.p > report.q || report.q >= report.n) {
        return false;
      }
      if (report.p * report.q != report.n) {
        return false;
      }
      if (!is_prime(report.p).is_prime) {
        return false;
      }
      if (report.trace) {
        if (report.method != FactorMethod::Knj) {
          return false;
        }
        const auto& trace = *report.trace;
        if (trace.size() != report.iterations) {
          return false;
        }
        Natural start = isqrt(report.n);
        if (start.is_even()) {
          start += 1;
        }
        if (trace.front().x != start || trace.back().x != report.p) {
          return false;
        }
        const Natural two(2);
        for (std::size_t i = 0; i < trace.size(); ++i) {
          const auto& entry = trace[i];
          if (entry.x.is_even() || entry.x < 3) {
            return false;
          }
          if (i > 0 && trace[i - 1].x != entry.x + two) {
            return false;
          }
          // only the terminal candidate may be a prime divisor
          const bool hit = entry.x_prime && entry.y_integral;
          if (hit != (i + 1 == trace.size())) {
            return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace factorkit
