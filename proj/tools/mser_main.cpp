// mser: MSER meta-query answering over OWL 2 QL ontologies via Datalog.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "mser/bench.hpp"
#include "mser/datalog_text.hpp"
#include "mser/oracle.hpp"
#include "mser/pipeline.hpp"
#include "mser/rulebase.hpp"
#include "mser/translator.hpp"

namespace fs = std::filesystem;
using namespace mser;

namespace {

// exit codes
constexpr int kOk = 0, kFailure = 1, kUsage = 2, kTimeout = 124;

bool require_file(const std::string& path) {
  if (fs::is_regular_file(path)) return true;
  std::cerr << "mser: no such file: " << path << "\n";
  return false;
}

// Output goes to `path`, or stdout when empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) file_.open(path, std::ios::binary);
  }
  bool ok() const { return !file_.is_open() || file_.good(); }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void arm_timeout(double seconds) {
  if (seconds <= 0) return;
  std::signal(SIGALRM, [](int) {
    const char msg[] = "mser: OOT\n";
    [[maybe_unused]] auto n = write(STDERR_FILENO, msg, sizeof msg - 1);
    _exit(kTimeout);
  });
  alarm(static_cast<unsigned>(seconds + 0.999));
}

std::string query_text(const std::string& path, const std::string& inline_text) {
  return inline_text.empty() ? read_file(path) : inline_text;
}

int run_translate(const std::string& in, const std::string& out) {
  if (!require_file(in)) return kUsage;
  auto o = load_ontology(in);
  auto n = normalize_ontology(o);
  auto fb = translate_ontology(n);
  Sink sink(out);
  write_facts(sink.os(), fb.all());
  if (!sink.ok()) throw Error("cannot write " + out);
  std::cerr << "axioms=" << o.size() << " normalized=" << n.size() << " tbox_facts=" << fb.tbox_facts.size()
            << " abox_facts=" << fb.abox_facts.size() << "\n";
  return kOk;
}

int run_rules(bool stats, bool consistency, const std::string& out) {
  const auto& cat = builtin_rules(consistency);
  if (stats) {
    std::cout << "rules=" << cat.size() << "\n";
    for (auto f : {RuleFamily::TBoxChainAtomic, RuleFamily::TBoxChainExist, RuleFamily::TBoxFiller,
                   RuleFamily::TBoxRoleLift, RuleFamily::RoleTrans, RuleFamily::DisjSym, RuleFamily::DisjDown,
                   RuleFamily::ABoxClass, RuleFamily::ABoxRole, RuleFamily::ABoxRefl, RuleFamily::AuxNamed,
                   RuleFamily::Violation})
      std::cout << family_tag(f) << "=" << cat.count(f) << "\n";
    return kOk;
  }
  Sink sink(out);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (i == 0 || cat.families[i] != cat.families[i - 1]) sink.os() << "% " << family_tag(cat.families[i]) << "\n";
    sink.os() << format_rule(cat.rules[i]) << "\n";
  }
  return sink.ok() ? kOk : kFailure;
}

struct QueryFlags {
  std::string ontology, query_file, query_string, output, dump_model;
  bool demand = false, consistency = false, report_time = false, summary = false, named_only = false;
  unsigned threads = 1;
  double timeout = 0;
};

int run_query(const QueryFlags& f) {
  if (!require_file(f.ontology)) return kUsage;
  if (f.query_string.empty() && !require_file(f.query_file)) return kUsage;
  arm_timeout(f.timeout);
  PipelineOptions opts{f.demand, f.consistency, f.threads};
  auto r = run_pipeline_files(f.ontology, query_text(f.query_file, f.query_string), opts);

  Sink sink(f.output);
  if (!f.summary) sink.os() << format_answers(r.answers);
  if (f.report_time) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "# load_ms=%.3f translate_ms=%.3f saturate_ms=%.3f answer_ms=%.3f total_ms=%.3f answers=%zu\n",
                  r.times.load_ms, r.times.translate_ms, r.times.saturate_ms, r.times.answer_ms, r.times.total(),
                  r.answers.size());
    sink.os() << line;
  }
  sink.os().flush();
  std::cerr << "answers=" << r.answers.size() << " axioms=" << r.axioms << " facts=" << r.facts << " "
            << r.stats.to_string() << (f.consistency ? (r.violation ? " consistency=violated" : " consistency=ok") : "")
            << "\n";

  if (!f.dump_model.empty()) {
    FactStore store;
    saturate_into(store, load_normalized(f.ontology), opts);
    std::ofstream out(f.dump_model, std::ios::binary);
    store.dump(out);
    if (!out) throw Error("cannot write " + f.dump_model);
  }
  return sink.ok() ? kOk : kFailure;
}

int run_oracle(const QueryFlags& f) {
  if (!require_file(f.ontology)) return kUsage;
  if (f.query_string.empty() && !require_file(f.query_file)) return kUsage;
  arm_timeout(f.timeout);
  auto o = load_normalized(f.ontology);
  auto tq = translate_query(parse_query(query_text(f.query_file, f.query_string)));
  auto ans = certain_answers_oracle(o, tq.cq, f.named_only ? WitnessScope::Named : WitnessScope::Nulls);
  Sink sink(f.output);
  sink.os() << format_answers(ans);
  std::cerr << "answers=" << ans.size() << "\n";
  return sink.ok() ? kOk : kFailure;
}

int run_bench_cmd(const std::string& config, const std::string& output, unsigned parallel, double timeout,
                  bool demand, const std::string& self) {
  if (!require_file(config)) return kUsage;
  BenchConfig cfg;
  try {
    cfg = parse_bench_config(read_file(config), fs::path(config).parent_path().string());
  } catch (const ConfigError& e) {
    std::cerr << "mser: " << config << ": " << e.what() << "\n";
    return kUsage;
  }
  if (!output.empty()) cfg.output_csv = output;
  if (parallel) cfg.parallel = parallel;
  if (timeout > 0) cfg.timeout_s = timeout;
  if (demand) cfg.demand_mode = true;
  for (const auto& p : cfg.ontologies)
    if (!require_file(p)) return kUsage;
  for (const auto& p : cfg.queries)
    if (!require_file(p)) return kUsage;

  auto rows = run_bench(cfg, self);
  Sink sink(cfg.output_csv);
  write_csv(sink.os(), rows);
  std::size_t bad = 0;
  for (const auto& r : rows) bad += r.status != RunStatus::OK;
  std::cerr << "runs=" << rows.size() << " not_ok=" << bad << "\n";
  return sink.ok() ? kOk : kFailure;
}

int run_extend(const std::string& base, const std::string& ext, const std::string& out) {
  if (!require_file(base) || !require_file(ext)) return kUsage;
  auto merged = load_ontology(base);
  auto extra = load_ontology(ext);
  std::size_t before = merged.size();
  for (const auto& a : extra.tbox) merged.add(a);
  for (const auto& a : extra.abox) merged.add(a);
  for (const auto& [k, v] : extra.prefixes) merged.prefixes.emplace(k, v);
  Sink sink(out);
  sink.os() << write_ontology(merged);
  std::cerr << "axioms=" << merged.size() << " added=" << merged.size() - before << "\n";
  return sink.ok() ? kOk : kFailure;
}

std::string self_path(const char* argv0) {
  std::error_code ec;
  auto p = fs::read_symlink("/proc/self/exe", ec);
  return ec ? fs::absolute(argv0).string() : p.string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meta-query answering over OWL 2 QL ontologies by reduction to Datalog"};
  app.require_subcommand(1);

  std::string in, out;
  auto* translate = app.add_subcommand("translate", "Encode an ontology as Datalog facts");
  translate->add_option("ontology", in, "Input .ofn file")->required();
  translate->add_option("-o,--output", out, "Facts file (default: stdout)");

  bool stats = false, consistency = false;
  auto* rules = app.add_subcommand("rules", "Print the built-in rule catalogue");
  rules->add_flag("--stats", stats, "Print rule counts per family");
  rules->add_flag("--check-consistency", consistency, "Include the violation rules");
  rules->add_option("-o,--output", out, "Rules file (default: stdout)");

  QueryFlags qf;
  auto add_query_flags = [&](CLI::App* c) {
    c->add_option("ontology", qf.ontology, "Input .ofn file")->required();
    c->add_option("query", qf.query_file, "SPARQL .rq file");
    c->add_option("--query-string", qf.query_string, "Inline SPARQL query");
    c->add_option("-o,--output", qf.output, "Answer file (default: stdout)");
    c->add_option("--timeout", qf.timeout, "Give up after this many seconds (exit 124)");
  };
  auto* query = app.add_subcommand("query", "Answer a SPARQL query");
  add_query_flags(query);
  query->add_flag("--demand", qf.demand, "Goal-directed evaluation with magic sets");
  query->add_flag("--check-consistency", qf.consistency, "Report disjointness/irreflexivity violations");
  query->add_flag("--report-time", qf.report_time, "Append a '# ..._ms=' timing line");
  query->add_flag("--summary", qf.summary, "Omit answer rows");
  query->add_option("--threads", qf.threads, "Evaluation threads")->check(CLI::PositiveNumber);
  query->add_option("--dump-model", qf.dump_model, "Also write the saturated model to this file");

  auto* oracle = app.add_subcommand("oracle", "Answer a query with the reference chase semantics");
  add_query_flags(oracle);
  oracle->add_flag("--named-only", qf.named_only, "Existential variables range over named elements only");

  std::string config;
  unsigned parallel = 0;
  double bench_timeout = 0;
  bool bench_demand = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("config", config, "key = value configuration file")->required();
  bench->add_option("-o,--output", out, "CSV file (overrides the config)");
  bench->add_option("--parallel", parallel, "Concurrent runs");
  bench->add_option("--timeout", bench_timeout, "Per-run limit in seconds (overrides the config)");
  bench->add_flag("--demand", bench_demand, "Run every query in demand mode");

  std::string base, ext;
  auto* extend = app.add_subcommand("extend", "Merge an extension ontology into a base ontology");
  extend->add_option("base", base, "Base .ofn file")->required();
  extend->add_option("extension", ext, "Extension .ofn file")->required();
  extend->add_option("-o,--output", out, "Merged file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*translate) return run_translate(in, out);
    if (*rules) return run_rules(stats, consistency, out);
    if (*query || *oracle) {
      if (qf.query_file.empty() && qf.query_string.empty()) {
        std::cerr << "mser: give a query file or --query-string\n";
        return kUsage;
      }
      return *query ? run_query(qf) : run_oracle(qf);
    }
    if (*bench) return run_bench_cmd(config, out, parallel, bench_timeout, bench_demand, self_path(argv[0]));
    if (*extend) return run_extend(base, ext, out);
  } catch (const std::exception& e) {
    std::cerr << "mser: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
