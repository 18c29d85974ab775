#pragma once

#include <iosfwd>
#include <optional>
#include <random>

#include "factorkit/factorize.hpp"
#include "factorkit/natural.hpp"

namespace factorkit {

struct RsaPublicKey {
  Natural n;
  Natural e;
};

struct RsaPrivateKey {
  Natural n;
  Natural d;
};

struct RsaKeyPair {
  RsaPublicKey public_key;
  RsaPrivateKey private_key;
  Natural p;
  Natural q;
  Natural phi;  // (p-1)*(q-1)
};

/// Builds a key pair from known primes: n = p*q, phi = (p-1)(q-1),
/// d = e^-1 mod phi. Pure: identical inputs give identical pairs.
/// Throws NotPrime, DegenerateModulus (p == q), or BadExponent
/// (e outside (1, phi) or gcd(e, phi) != 1).
RsaKeyPair keygen_from_primes(const Natural& p, const Natural& q,
                              const Natural& e);

/// Draws p and q of exactly `bits` bits each (retrying until p != q and
/// gcd(e, phi) = 1) and delegates to keygen_from_primes.
/// Throws InvalidArgument for bits < 8 and BadExponent for even or tiny e.
RsaKeyPair keygen_random(std::size_t bits, const Natural& e,
                         std::mt19937_64& rng);

/// keygen_random with the conventional public exponent 65537.
RsaKeyPair keygen_random(std::size_t bits, std::mt19937_64& rng);

/// c = m^e mod n. Throws MessageOutOfRange for m >= n.
Natural encrypt(const Natural& m, const RsaPublicKey& key);

/// m = c^d mod n. Throws CiphertextOutOfRange for c >= n.
Natural decrypt(const Natural& c, const RsaPrivateKey& key);

struct CrackResult {
  RsaKeyPair key;             // attacker-recovered key material
  FactorReport factorization; // carries the engine's iteration count
};

/// Key-recovery attack: factorizes n with the chosen engine and rebuilds
/// phi and d from the factors. Throws NotASemiprime when n does not split
/// into two distinct primes, and BadExponent when e is invalid for the
/// recovered phi.
CrackResult crack(const RsaPublicKey& key, FactorMethod method);

/// Line-oriented key record: name=value with decimal values, fields
/// n, e, d, p, q, phi in that order.
void write_key_file(std::ostream& os, const RsaKeyPair& pair);

/// Parsed key record; hand-written files may carry a subset of fields.
struct KeyRecord {
  std::optional<Natural> n, e, d, p, q, phi;

  /// Field by name, or throws InvalidArgument naming the missing field.
  const Natural& require(const char* name) const;
};

KeyRecord read_key_file(std::istream& is);

}  // namespace factorkit
