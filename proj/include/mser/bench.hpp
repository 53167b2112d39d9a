#pragma once

// Benchmark harness: every (ontology, query) pair is run `repeat` times, each
// run in a fresh child process under a wall-clock limit.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mser/model.hpp"

namespace mser {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct BenchConfig {
  std::vector<std::string> ontologies;
  std::vector<std::string> queries;
  double timeout_s = 60;
  int repeat = 3;
  bool demand_mode = false;
  std::string output_csv;
  unsigned parallel = 1;
  unsigned threads = 1;
};

/// `key = value` lines with `#` comments. Keys: ontology, query (repeatable,
/// or comma-separated lists under ontologies/queries), timeout, repeat,
/// demand, output, parallel, threads. Relative paths resolve against base_dir.
BenchConfig parse_bench_config(std::string_view text, const std::string& base_dir = ".");

enum class RunStatus { OK, OOT, ERROR };
std::string_view status_name(RunStatus s);

struct BenchRow {
  std::string dataset, query;  // file stems; aggregates use "<query>@median"
  std::optional<double> load_ms, translate_ms, saturate_ms, answer_ms;
  std::optional<std::size_t> answers;
  RunStatus status = RunStatus::ERROR;
};

/// Runs `argv` and waits at most timeout_s. Returns the child's stdout, or
/// OOT after killing it, or ERROR on a nonzero or abnormal exit.
struct ChildResult {
  RunStatus status = RunStatus::ERROR;
  std::string out;
  int exit_code = -1;
};
ChildResult run_child(const std::vector<std::string>& argv, double timeout_s);

/// One run of `exe query <ontology> <query> --report-time ...` parsed into a row.
BenchRow bench_once(const std::string& exe, const std::string& ontology, const std::string& query,
                    const BenchConfig& cfg);

/// All run rows (pair order, then repeat) followed by one median row per pair.
std::vector<BenchRow> run_bench(const BenchConfig& cfg, const std::string& exe);

/// Median over OK runs; status OK only if every run was OK.
BenchRow aggregate(const std::vector<BenchRow>& runs);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);
inline constexpr std::string_view kCsvHeader =
    "dataset,query,load_ms,translate_ms,saturate_ms,answer_ms,answers,status";

}  // namespace mser
