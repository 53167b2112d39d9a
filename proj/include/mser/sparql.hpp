#pragma once

// Conjunctive SPARQL SELECT queries (basic graph patterns only) and their
// translation to a Datalog rule plus an atomic query.

#include <string>
#include <string_view>
#include <vector>

#include "mser/model.hpp"
#include "mser/ontology.hpp"

namespace mser {

class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(std::string feature, std::size_t line);
  const std::string& feature() const { return feature_; }

 private:
  std::string feature_;
};

struct SparqlTerm {
  enum class Kind { Variable, Iri };
  Kind kind = Kind::Iri;
  std::string value;  // variable name without '?', or the expanded IRI

  static SparqlTerm variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  static SparqlTerm iri(std::string i) { return {Kind::Iri, std::move(i)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  auto operator<=>(const SparqlTerm&) const = default;
};

struct TriplePattern {
  SparqlTerm s, p, o;
  auto operator<=>(const TriplePattern&) const = default;
};

struct SparqlQuery {
  PrefixMap prefixes;
  std::vector<std::string> answer_vars;  // '*' already expanded
  std::vector<TriplePattern> patterns;
};

/// PREFIX declarations, then SELECT [DISTINCT] (vars | *) WHERE { BGP }.
/// `a` is rdf:type; `;` and `,` abbreviate shared subjects and predicates.
SparqlQuery parse_query(std::string_view text);

struct TranslatedQuery {
  Rule rule;         // q(V1..Vn) :- body
  Atom query;        // q(V1..Vn)
  ConjunctiveQuery cq;  // the same, ready for answer_conjunctive_query
};

/// One atom per pattern. rdf:type, rdfs:subClassOf, rdfs:subPropertyOf,
/// owl:disjointWith, owl:propertyDisjointWith and owl:differentFrom map to
/// instc, isacCC, isarRR, disjcCC, disjrRR and diff; every other predicate p
/// gives instr(p, s, o). Variables are upper-cased on their first letter.
TranslatedQuery translate_query(const SparqlQuery& q);

/// Datalog variable name for a SPARQL variable (without renaming on clashes).
std::string datalog_variable(std::string_view sparql_name);

}  // namespace mser
