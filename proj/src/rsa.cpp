#include "factorkit/rsa.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "factorkit/primality.hpp"

namespace factorkit {

namespace {

Natural largest_prime_below(const Natural& limit) {  // pre: limit > 3
  Natural candidate = limit - 1;
  if (candidate.is_even()) {
    candidate -= 1;
  }
  while (!is_prime(candidate).is_prime) {
    candidate -= 2;
  }
  return candidate;
}

}  // namespace

RsaKeyPair keygen_from_primes(const Natural& p, const Natural& q,
                              const Natural& e) {
  if (!is_prime(p).is_prime) {
    throw Error(ErrorCode::NotPrime, "p = " + p.to_decimal() + " is not prime");
  }
  if (!is_prime(q).is_prime) {
    throw Error(ErrorCode::NotPrime, "q = " + q.to_decimal() + " is not prime");
  }
  if (p == q) {
    throw Error(ErrorCode::DegenerateModulus, "p and q must be distinct");
  }
  const Natural n = p * q;
  const Natural phi = (p - 1) * (q - 1);
  if (e <= 1 || e >= phi) {
    throw Error(ErrorCode::BadExponent,
                "public exponent must satisfy 1 < e < phi");
  }
  if (gcd(e, phi) != 1) {
    throw Error(ErrorCode::BadExponent,
                "gcd(e, phi) != 1 for e = " + e.to_decimal());
  }
  const Natural d = mod_inverse(e, phi);
  return {{n, e}, {n, d}, p, q, phi};
}

RsaKeyPair keygen_random(std::size_t bits, const Natural& e,
                         std::mt19937_64& rng) {
  if (bits < 8) {
    throw Error(ErrorCode::InvalidArgument,
                "keygen_random requires bits >= 8 per prime");
  }
  if (e < 3 || e.is_even()) {
    throw Error(ErrorCode::BadExponent,
                "public exponent must be odd and >= 3");
  }
  // Every bits-sized pair has phi >= 2^(2*bits-2). Exponents at or above
  // that floor might exceed phi for every pair, which would turn the retry
  // loop into a spin; check feasibility against the largest attainable phi.
  if (e >= Natural(1) << (2 * bits - 2)) {
    const Natural p1 = largest_prime_below(Natural(1) << bits);
    const Natural p2 = largest_prime_below(p1);
    if (e >= (p1 - 1) * (p2 - 1)) {
      throw Error(ErrorCode::BadExponent,
                  "public exponent " + e.to_decimal() +
                      " cannot be below phi for " + std::to_string(bits) +
                      "-bit primes");
    }
  }
  while (true) {
    const Natural p = gen_prime(bits, rng);
    const Natural q = gen_prime(bits, rng);
    if (p == q) {
      continue;
    }
    const Natural phi = (p - 1) * (q - 1);
    if (e >= phi || gcd(e, phi) != 1) {
      continue;
    }
    return keygen_from_primes(p, q, e);
  }
}

RsaKeyPair keygen_random(std::size_t bits, std::mt19937_64& rng) {
  return keygen_random(bits, Natural(65537), rng);
}

Natural encrypt(const Natural& m, const RsaPublicKey& key) {
  if (m >= key.n) {
    throw Error(ErrorCode::MessageOutOfRange,
                "message must be below the modulus");
  }
  return mod_pow(m, key.e, key.n);
}

Natural decrypt(const Natural& c, const RsaPrivateKey& key) {
  if (c >= key.n) {
    throw Error(ErrorCode::CiphertextOutOfRange,
                "ciphertext must be below the modulus");
  }
  return mod_pow(c, key.d, key.n);
}

CrackResult crack(const RsaPublicKey& key, FactorMethod method) {
  FactorReport report = method == FactorMethod::Trial
                            ? trial_division(key.n)
                            : knj_factorize(key.n);
  if (report.outcome != FactorOutcome::Factored) {
    throw Error(ErrorCode::NotASemiprime,
                report.outcome == FactorOutcome::Prime
                    ? "modulus is prime; no factorization exists"
                    : "modulus is outside the factorizer's domain");
  }
  if (report.p == report.q || !is_prime(report.q).is_prime) {
    throw Error(ErrorCode::NotASemiprime,
                "modulus is not a product of two distinct primes");
  }
  RsaKeyPair pair = keygen_from_primes(report.p, report.q, key.e);
  return {std::move(pair), std::move(report)};
}

void write_key_file(std::ostream& os, const RsaKeyPair& pair) {
  os << "n=" << pair.public_key.n << '\n'
     << "e=" << pair.public_key.e << '\n'
     << "d=" << pair.private_key.d << '\n'
     << "p=" << pair.p << '\n'
     << "q=" << pair.q << '\n'
     << "phi=" << pair.phi << '\n';
}

const Natural& KeyRecord::require(const char* name) const {
  const std::optional<Natural>* field = nullptr;
  const std::string_view key(name);
  if (key == "n") field = &n;
  else if (key == "e") field = &e;
  else if (key == "d") field = &d;
  else if (key == "p") field = &p;
  else if (key == "q") field = &q;
  else if (key == "phi") field = &phi;
  if (field == nullptr || !field->has_value()) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("key file is missing field \"") + name + "\"");
  }
  return **field;
}

KeyRecord read_key_file(std::istream& is) {
  KeyRecord record;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument,
                  "malformed key file line: \"" + line + "\"");
    }
    const std::string name = line.substr(0, eq);
    const Natural value = Natural::from_decimal(line.substr(eq + 1));
    if (name == "n") record.n = value;
    else if (name == "e") record.e = value;
    else if (name == "d") record.d = value;
    else if (name == "p") record.p = value;
    else if (name == "q") record.q = value;
    else if (name == "phi") record.phi = value;
    else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown key file field \"" + name + "\"");
    }
  }
  return record;
}

}  // namespace factorkit
