#pragma once

// End-to-end query answering: load an ontology, translate it, saturate with
// the rule catalogue and answer a SPARQL query, timing every stage.

#include <string>
#include <vector>

#include "mser/engine.hpp"
#include "mser/ontology.hpp"
#include "mser/sparql.hpp"

namespace mser {

struct PipelineOptions {
  bool demand = false;             // magic-set evaluation instead of full saturation
  bool check_consistency = false;  // add the VIOLATION rules
  unsigned threads = 1;
};

struct StageTimes {
  double load_ms = 0, translate_ms = 0, saturate_ms = 0, answer_ms = 0;
  double total() const { return load_ms + translate_ms + saturate_ms + answer_ms; }
};

struct PipelineResult {
  std::vector<AnswerTuple> answers;
  std::vector<std::string> answer_vars;  // SPARQL names
  StageTimes times;
  EvalStats stats;
  std::size_t axioms = 0, facts = 0;
  bool violation = false;  // only meaningful with check_consistency
};

/// Parses and normalizes an ontology file. Throws on unreadable files and
/// parse errors.
Ontology load_normalized(const std::string& path);

PipelineResult run_pipeline(const Ontology& ontology, const SparqlQuery& query,
                            const PipelineOptions& opts = {});

/// Same, reading the ontology file; parsing both inputs counts as load time.
PipelineResult run_pipeline_files(const std::string& ontology_path, const std::string& query_text,
                                  const PipelineOptions& opts = {});

/// Saturates the ontology and returns the store (for model dumps).
void saturate_into(FactStore& store, const Ontology& ontology, const PipelineOptions& opts,
                   EvalStats* stats = nullptr);

std::string read_file(const std::string& path);

/// Tab-separated answer rows, one per line, IRIs in OWL spelling.
std::string format_answers(const std::vector<AnswerTuple>& rows);

}  // namespace mser
