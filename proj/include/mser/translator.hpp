#pragma once

// Encoding of OWL 2 QL axioms as ground facts over the fixed signature.

#include <vector>

#include "mser/model.hpp"
#include "mser/ontology.hpp"

namespace mser {

class NonNormalizedAxiom : public Error {
 public:
  explicit NonNormalizedAxiom(const Axiom& a);
};

struct FactBase {
  std::vector<Atom> tbox_facts;  // sorted, unique
  std::vector<Atom> abox_facts;  // sorted, unique

  std::size_t size() const { return tbox_facts.size() + abox_facts.size(); }
  std::vector<Atom> all() const;
};

/// One fact per axiom: isac*/isar*/disj*/refl/irrefl for the TBox and
/// instc(class, individual), instr(prop, subject, object), diff(x, y) for
/// the ABox.
Atom tau(const Axiom& axiom);

/// Reconstructs the axiom a fact encodes; throws Error for atoms outside the
/// encoding signature or with variables.
Axiom untau(const Atom& fact);

/// Requires a normalized ontology (see normalize_ontology).
FactBase translate_ontology(const Ontology& o);

/// Facts sort by predicate name, then by argument IRIs.
bool fact_less(const Atom& a, const Atom& b);

}  // namespace mser
