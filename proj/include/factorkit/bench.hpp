#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorkit/natural.hpp"

namespace factorkit {

/// One modulus's side-by-side engine comparison. Timing covers the engine
/// call only (no parsing or io) and is the lone non-deterministic part.
struct BenchRecord {
  std::size_t digits = 0;  // decimal digits of n
  Natural n;
  std::uint64_t trial_iterations = 0;
  std::uint64_t knj_iterations = 0;
  std::uint64_t trial_ns = 0;
  std::uint64_t knj_ns = 0;
  Natural p;
  Natural q;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// A corpus row: either a completed record or the reason it was skipped
/// (even modulus, out-of-domain value, prime input, engine disagreement).
struct BenchOutcome {
  Natural n;
  std::optional<BenchRecord> record;
  std::string error;  // nonempty iff !record
};

enum class BenchFormat {
  Csv,
  Json,
  Markdown,
};

inline constexpr std::string_view kBenchCsvHeader =
    "digits,n,trial_iterations,knj_iterations,trial_ns,knj_ns,p,q";

/// Runs both engines over each input, preserving input order. Rows may be
/// executed concurrently across inputs; each row's two timed engine calls
/// stay sequential on one thread so the timings remain honest.
std::vector<BenchOutcome> run_benchmark(const std::vector<Natural>& inputs,
                                        bool parallel = true);

/// The successfully benchmarked rows, in input order.
std::vector<BenchRecord> collect_records(
    const std::vector<BenchOutcome>& outcomes);

/// Clears the wall-time columns so output is fully deterministic.
void zero_timings(std::vector<BenchRecord>& records);

/// Csv: exact kBenchCsvHeader plus one line per record.
/// Markdown: the four iteration-comparison columns (digits, n, trial, knj).
/// Json: array of objects with the csv field names; n, p, q as decimal
/// strings so arbitrary-size moduli survive any parser.
std::string render(const std::vector<BenchRecord>& records,
                   BenchFormat format);

/// Inverse of render(records, Csv); render(parse_csv(text), Csv) == text.
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Corpus file: one decimal modulus per line; blank lines and '#' comments
/// are ignored.
std::vector<Natural> read_corpus(std::istream& is);

}  // namespace factorkit
