#pragma once

// OWL 2 QL ontologies in functional-style syntax.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "mser/model.hpp"

namespace mser {

struct Ontology {
  std::string iri;  // may be empty
  PrefixMap prefixes;
  std::set<Axiom> tbox;
  std::set<Axiom> abox;

  /// Routes to tbox or abox by axiom kind.
  void add(Axiom a);
  std::size_t size() const { return tbox.size() + abox.size(); }

  bool operator==(const Ontology& o) const { return tbox == o.tbox && abox == o.abox; }
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

class UnsupportedAxiom : public Error {
 public:
  UnsupportedAxiom(std::string keyword, std::size_t line, const std::string& detail = {});
  const std::string& keyword() const { return keyword_; }

 private:
  std::string keyword_;
};

/// Parses the OWL 2 QL fragment of functional-style syntax. Sugar
/// (equivalences, domains, ranges, inverses, n-ary disjointness) is expanded
/// into the core axiom forms; declarations and annotations are dropped.
Ontology parse_ontology(std::string_view text);

Ontology load_ontology(const std::string& path);

/// Adds ca ⊑ ⊤ / ra ⊑ ⊤ for ABox symbols that never occur in the TBox, and
/// puts disjointness and property axioms into the orientation the encoding
/// expects. Idempotent.
Ontology normalize_ontology(Ontology o);

/// True when the axiom is in the shape tau() accepts.
bool is_normalized(const Axiom& a);

/// Functional-style syntax using full IRIs; parse_ontology() reads it back to
/// an equal ontology.
std::string write_ontology(const Ontology& o);

}  // namespace mser
