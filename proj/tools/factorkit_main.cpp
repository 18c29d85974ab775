#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "factorkit/bench.hpp"
#include "factorkit/factorize.hpp"
#include "factorkit/primality.hpp"
#include "factorkit/rsa.hpp"

namespace {

using namespace factorkit;

// Exit codes: 0 success, 1 usage error, 2 invalid numeric input,
// 3 input proven prime (no factorization exists).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPrime = 3;

int print_factor_report(const FactorReport& report) {
  switch (report.outcome) {
    case FactorOutcome::Factored:
      std::cout << "p=" << report.p << " q=" << report.q
                << " iterations=" << report.iterations << '\n';
      return kExitOk;
    case FactorOutcome::Prime:
      std::cout << "prime iterations=" << report.iterations << '\n';
      return kExitPrime;
    case FactorOutcome::Invalid:
      std::cerr << "error: "
                << (report.method == FactorMethod::Trial
                        ? "trial division requires n >= 2"
                        : "knj requires an odd n >= 3")
                << '\n';
      return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

void print_trace(const FactorReport& report) {
  if (!report.trace) {
    return;
  }
  for (const auto& entry : *report.trace) {
    std::cout << "x=" << entry.x << " prime=" << (entry.x_prime ? 'y' : 'n');
    if (entry.x_prime) {
      std::cout << " divides=" << (entry.y_integral ? 'y' : 'n');
    }
    std::cout << '\n';
  }
}

int run_trial(const std::string& n_text) {
  return print_factor_report(trial_division(Natural::from_decimal(n_text)));
}

int run_knj(const std::string& n_text, bool trace) {
  const FactorReport report =
      knj_factorize(Natural::from_decimal(n_text), trace);
  print_trace(report);
  return print_factor_report(report);
}

int run_bench(const std::string& input_path, const std::string& format_name,
              bool no_timing, bool serial) {
  std::ifstream input(input_path);
  if (!input) {
    std::cerr << "error: cannot open input file \"" << input_path << "\"\n";
    return kExitUsage;
  }
  const std::vector<Natural> corpus = read_corpus(input);
  const std::vector<BenchOutcome> outcomes = run_benchmark(corpus, !serial);
  for (const auto& outcome : outcomes) {
    if (!outcome.record) {
      std::cerr << "n=" << outcome.n << ": " << outcome.error << '\n';
    }
  }
  std::vector<BenchRecord> records = collect_records(outcomes);
  if (no_timing) {
    zero_timings(records);
  }
  BenchFormat format = BenchFormat::Csv;
  if (format_name == "json") {
    format = BenchFormat::Json;
  } else if (format_name == "md") {
    format = BenchFormat::Markdown;
  }
  std::cout << render(records, format);
  return kExitOk;
}

std::mt19937_64 seeded_rng() {
  std::random_device rd;
  return std::mt19937_64((std::uint64_t(rd()) << 32) ^ rd());
}

int run_keygen(const std::string& p_text, const std::string& q_text,
               unsigned bits, const std::string& e_text,
               const std::string& out_path) {
  const Natural e = Natural::from_decimal(e_text);
  RsaKeyPair pair;
  if (!p_text.empty()) {
    pair = keygen_from_primes(Natural::from_decimal(p_text),
                              Natural::from_decimal(q_text), e);
  } else {
    auto rng = seeded_rng();
    pair = keygen_random(bits, e, rng);
  }
  if (out_path.empty()) {
    write_key_file(std::cout, pair);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write key file \"" << out_path << "\"\n";
      return kExitUsage;
    }
    write_key_file(out, pair);
  }
  return kExitOk;
}

KeyRecord load_key(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot open key file \"" + path + "\"");
  }
  return read_key_file(in);
}

int run_encrypt(const std::string& key_path, const std::string& m_text) {
  const KeyRecord key = load_key(key_path);
  const RsaPublicKey pub{key.require("n"), key.require("e")};
  std::cout << encrypt(Natural::from_decimal(m_text), pub) << '\n';
  return kExitOk;
}

int run_decrypt(const std::string& key_path, const std::string& c_text) {
  const KeyRecord key = load_key(key_path);
  const RsaPrivateKey priv{key.require("n"), key.require("d")};
  std::cout << decrypt(Natural::from_decimal(c_text), priv) << '\n';
  return kExitOk;
}

int run_crack(const std::string& n_text, const std::string& e_text,
              const std::string& method_name) {
  const Natural n = Natural::from_decimal(n_text);
  const Natural e = Natural::from_decimal(e_text);
  const FactorMethod method =
      method_name == "trial" ? FactorMethod::Trial : FactorMethod::Knj;
  try {
    const CrackResult result = crack({n, e}, method);
    write_key_file(std::cout, result.key);
    std::cout << "method=" << method_name << '\n'
              << "iterations=" << result.factorization.iterations << '\n';
    return kExitOk;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotASemiprime && is_prime(n).is_prime) {
      std::cerr << "error: " << err.what() << '\n';
      return kExitPrime;
    }
    throw;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "factorkit: integer factorization toolkit (trial division and the "
      "knj square-root descent), textbook RSA, and an iteration-count "
      "benchmark"};
  app.require_subcommand(1);

  std::string n_text;
  bool trace = false;
  auto* trial_cmd = app.add_subcommand("trial", "factor N by trial division");
  trial_cmd->add_option("N", n_text, "modulus, decimal")->required();

  auto* knj_cmd =
      app.add_subcommand("knj", "factor odd N by prime descent from sqrt(N)");
  knj_cmd->add_option("N", n_text, "odd modulus, decimal")->required();
  knj_cmd->add_flag("--trace", trace, "print every candidate examined");

  std::string input_path;
  std::string format_name = "csv";
  bool no_timing = false;
  bool serial = false;
  auto* bench_cmd = app.add_subcommand(
      "bench", "run both engines over a corpus and compare iteration counts");
  bench_cmd->add_option("--input", input_path, "corpus file, one modulus per line")
      ->required();
  bench_cmd->add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"csv", "json", "md"}));
  bench_cmd->add_flag("--no-timing", no_timing,
                      "zero the wall-time columns for reproducible output");
  bench_cmd->add_flag("--serial", serial, "run rows sequentially");

  auto* rsa_cmd = app.add_subcommand("rsa", "textbook RSA operations");
  rsa_cmd->require_subcommand(1);

  std::string p_text, q_text, e_text = "65537", out_path;
  unsigned bits = 0;
  auto* keygen_cmd = rsa_cmd->add_subcommand("keygen", "generate a key pair");
  auto* p_opt = keygen_cmd->add_option("--p", p_text, "first prime, decimal");
  auto* q_opt = keygen_cmd->add_option("--q", q_text, "second prime, decimal");
  auto* bits_opt =
      keygen_cmd->add_option("--bits", bits, "bits per random prime");
  keygen_cmd->add_option("--e", e_text, "public exponent (default 65537)");
  keygen_cmd->add_option("--out", out_path, "write the key file here");
  p_opt->needs(q_opt);
  q_opt->needs(p_opt);
  bits_opt->excludes(p_opt);

  std::string key_path, m_text, c_text;
  auto* encrypt_cmd = rsa_cmd->add_subcommand("encrypt", "c = m^e mod n");
  encrypt_cmd->add_option("--key", key_path, "key file")->required();
  encrypt_cmd->add_option("--m", m_text, "message, decimal")->required();

  auto* decrypt_cmd = rsa_cmd->add_subcommand("decrypt", "m = c^d mod n");
  decrypt_cmd->add_option("--key", key_path, "key file")->required();
  decrypt_cmd->add_option("--c", c_text, "ciphertext, decimal")->required();

  std::string method_name = "knj";
  auto* crack_cmd = rsa_cmd->add_subcommand(
      "crack", "recover the private key by factoring the modulus");
  crack_cmd->add_option("--n", n_text, "modulus, decimal")->required();
  crack_cmd->add_option("--e", e_text, "public exponent, decimal")->required();
  crack_cmd->add_option("--method", method_name, "factorization engine")
      ->check(CLI::IsMember({"trial", "knj"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*trial_cmd) {
      return run_trial(n_text);
    }
    if (*knj_cmd) {
      return run_knj(n_text, trace);
    }
    if (*bench_cmd) {
      return run_bench(input_path, format_name, no_timing, serial);
    }
    if (*keygen_cmd) {
      if (p_text.empty() && bits == 0) {
        std::cerr << "error: rsa keygen needs either --p/--q or --bits\n";
        return kExitUsage;
      }
      return run_keygen(p_text, q_text, bits, e_text, out_path);
    }
    if (*encrypt_cmd) {
      return run_encrypt(key_path, m_text);
    }
    if (*decrypt_cmd) {
      return run_decrypt(key_path, c_text);
    }
    if (*crack_cmd) {
      return run_crack(n_text, e_text, method_name);
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitUsage;
}
