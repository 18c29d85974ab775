#include "factorkit/bench.hpp"

#include <chrono>
#include <istream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "factorkit/factorize.hpp"

namespace factorkit {

namespace {

using Clock = std::chrono::steady_clock;

std::pair<FactorReport, std::uint64_t> timed_run(const Natural& n,
                                                 FactorMethod method) {
  const auto begin = Clock::now();
  FactorReport report = method == FactorMethod::Trial ? trial_division(n)
                                                      : knj_factorize(n);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                           begin);
  return {std::move(report), static_cast<std::uint64_t>(elapsed.count())};
}

BenchOutcome bench_one(const Natural& n) {
  BenchOutcome outcome{.n = n};
  if (n < 3 || n.is_even()) {
    outcome.error = "modulus must be odd and >= 3";
    return outcome;
  }
  auto [trial, trial_ns] = timed_run(n, FactorMethod::Trial);
  auto [knj, knj_ns] = timed_run(n, FactorMethod::Knj);
  if (trial.outcome == FactorOutcome::Prime) {
    outcome.error = "modulus is prime; nothing to factor";
    return outcome;
  }
  if (knj.outcome != FactorOutcome::Factored ||
      trial.outcome != FactorOutcome::Factored) {
    outcome.error = "engine returned no factorization";
    return outcome;
  }
  if (trial.p != knj.p || trial.q != knj.q) {
    // happens for odd composites with three or more prime factors
    outcome.error = "engines disagree on the factors; not a semiprime";
    return outcome;
  }
  outcome.record = BenchRecord{
      .digits = n.to_decimal().size(),
      .n = n,
      .trial_iterations = trial.iterations,
      .knj_iterations = knj.iterations,
      .trial_ns = trial_ns,
      .knj_ns = knj_ns,
      .p = trial.p,
      .q = trial.q,
  };
  return outcome;
}

}  // namespace

std::vector<BenchOutcome> run_benchmark(const std::vector<Natural>& inputs,
                                        bool parallel) {
  std::vector<BenchOutcome> outcomes(inputs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      outcomes[i] = bench_one(inputs[i]);
    }
  } else {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      outcomes[i] = bench_one(inputs[i]);
    }
  }
  return outcomes;
}

std::vector<BenchRecord> collect_records(
    const std::vector<BenchOutcome>& outcomes) {
  std::vector<BenchRecord> records;
  records.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    if (outcome.record) {
      records.push_back(*outcome.record);
    }
  }
  return records;
}

void zero_timings(std::vector<BenchRecord>& records) {
  for (auto& record : records) {
    record.trial_ns = 0;
    record.knj_ns = 0;
  }
}

std::string render(const std::vector<BenchRecord>& records,
                   BenchFormat format) {
  switch (format) {
    case BenchFormat::Csv: {
      std::string out(kBenchCsvHeader);
      out += '\n';
      for (const auto& r : records) {
        out += std::to_string(r.digits);
        out += ',';
        out += r.n.to_decimal();
        out += ',';
        out += std::to_string(r.trial_iterations);
        out += ',';
        out += std::to_string(r.knj_iterations);
        out += ',';
        out += std::to_string(r.trial_ns);
        out += ',';
        out += std::to_string(r.knj_ns);
        out += ',';
        out += r.p.to_decimal();
        out += ',';
        out += r.q.to_decimal();
        out += '\n';
      }
      return out;
    }
    case BenchFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        rows.push_back({
            {"digits", r.digits},
            {"n", r.n.to_decimal()},
            {"trial_iterations", r.trial_iterations},
            {"knj_iterations", r.knj_iterations},
            {"trial_ns", r.trial_ns},
            {"knj_ns", r.knj_ns},
            {"p", r.p.to_decimal()},
            {"q", r.q.to_decimal()},
        });
      }
      return rows.dump(2) + "\n";
    }
    case BenchFormat::Markdown: {
      std::string out =
          "| digits | n | trial_iterations | knj_iterations |\n"
          "| ---: | ---: | ---: | ---: |\n";
      for (const auto& r : records) {
        out += "| " + std::to_string(r.digits) + " | " + r.n.to_decimal() +
               " | " + std::to_string(r.trial_iterations) + " | " +
               std::to_string(r.knj_iterations) + " |\n";
      }
      return out;
    }
  }
  return {};
}

namespace {

std::uint64_t parse_count(std::string_view field) {
  return Natural::from_decimal(field).to_u64();
}

}  // namespace

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) {
      continue;
    }
    if (!saw_header) {
      if (line != kBenchCsvHeader) {
        throw Error(ErrorCode::InvalidArgument,
                    "unexpected csv header: \"" + std::string(line) + "\"");
      }
      saw_header = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t field_pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', field_pos);
      if (comma == std::string_view::npos) {
        fields.push_back(line.substr(field_pos));
        break;
      }
      fields.push_back(line.substr(field_pos, comma - field_pos));
      field_pos = comma + 1;
    }
    if (fields.size() != 8) {
      throw Error(ErrorCode::InvalidArgument,
                  "csv row must have 8 fields: \"" + std::string(line) + "\"");
    }
    records.push_back(BenchRecord{
        .digits = static_cast<std::size_t>(parse_count(fields[0])),
        .n = Natural::from_decimal(fields[1]),
        .trial_iterations = parse_count(fields[2]),
        .knj_iterations = parse_count(fields[3]),
        .trial_ns = parse_count(fields[4]),
        .knj_ns = parse_count(fields[5]),
        .p = Natural::from_decimal(fields[6]),
        .q = Natural::from_decimal(fields[7]),
    });
  }
  if (!saw_header) {
    throw Error(ErrorCode::InvalidArgument, "csv input is missing the header");
  }
  return records;
}

std::vector<Natural> read_corpus(std::istream& is) {
  std::vector<Natural> inputs;
  std::string line;
  while (std::getline(is, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const std::size_t last = line.find_last_not_of(" \t\r");
    inputs.push_back(
        Natural::from_decimal(line.substr(first, last - first + 1)));
  }
  return inputs;
}

}  // namespace factorkit
