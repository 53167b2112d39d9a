#include "mser/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "mser/rulebase.hpp"
#include "mser/translator.hpp"

namespace mser {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ontology load_normalized(const std::string& path) { return normalize_ontology(load_ontology(path)); }

void saturate_into(FactStore& store, const Ontology& ontology, const PipelineOptions& opts, EvalStats* stats) {
  auto facts = translate_ontology(ontology).all();
  store.assert_facts(facts);
  auto s = evaluate_fixpoint(store, builtin_rules(opts.check_consistency).rules, {opts.threads});
  if (stats) *stats = s;
}

PipelineResult run_pipeline(const Ontology& ontology, const SparqlQuery& query, const PipelineOptions& opts) {
  PipelineResult r;
  r.axioms = ontology.size();
  r.answer_vars = query.answer_vars;
  const auto& rules = builtin_rules(opts.check_consistency).rules;

  auto t = Clock::now();
  auto cq = translate_query(query).cq;
  auto facts = translate_ontology(ontology).all();
  r.facts = facts.size();
  FactStore store;
  store.assert_facts(facts);
  r.times.translate_ms = since(t);

  if (opts.demand) {
    // the magic program interleaves saturation and answering
    t = Clock::now();
    r.answers = answer_with_demand(store, rules, cq, {opts.threads}, &r.stats);
    r.times.saturate_ms = since(t);
    if (opts.check_consistency) {
      ConjunctiveQuery v{{}, {Atom("violation", {})}};
      FactStore fresh;
      fresh.assert_facts(facts);
      r.violation = !answer_with_demand(fresh, rules, v, {opts.threads}).empty();
    }
    return r;
  }

  t = Clock::now();
  r.stats = evaluate_fixpoint(store, rules, {opts.threads});
  r.times.saturate_ms = since(t);

  t = Clock::now();
  r.answers = answer_conjunctive_query(store, cq);
  r.times.answer_ms = since(t);
  if (opts.check_consistency) r.violation = store.relation(*store.find_predicate("violation")).size() > 0;
  return r;
}

PipelineResult run_pipeline_files(const std::string& ontology_path, const std::string& query_text,
                                  const PipelineOptions& opts) {
  auto t = Clock::now();
  auto o = load_normalized(ontology_path);
  auto q = parse_query(query_text);
  double load = since(t);
  auto r = run_pipeline(o, q, opts);
  r.times.load_ms = load;
  return r;
}

std::string format_answers(const std::vector<AnswerTuple>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += owl_spelling(Entity(row[i]));
    }
    out += '\n';
  }
  return out;
}

}  // namespace mser
