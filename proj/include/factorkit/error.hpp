#pragma once

#include <stdexcept>
#include <string>

namespace factorkit {

/// Failure categories surfaced by the toolkit's operations.
enum class ErrorCode {
  InvalidNumber,         // malformed decimal text
  DivisionByZero,
  Underflow,             // natural subtraction would go negative
  InvalidModulus,        // modulus 0 for mod_pow, modulus < 2 for mod_inverse
  NotInvertible,         // gcd(a, m) != 1
  InvalidArgument,
  NotPrime,
  DegenerateModulus,     // p == q
  BadExponent,           // e out of range or gcd(e, phi) != 1
  MessageOutOfRange,
  CiphertextOutOfRange,
  NotASemiprime,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace factorkit
