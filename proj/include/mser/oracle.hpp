#pragma once

// Reference semantics for testing: saturation of the TBox computed directly
// over concept expressions, a chase-built canonical model, and certain answers
// by exhaustive substitution. Shares no code with the rule catalogue.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mser/engine.hpp"
#include "mser/model.hpp"
#include "mser/ontology.hpp"

namespace mser {

class CyclicTBox : public Error {
 public:
  using Error::Error;
};

/// Entailed inclusions and disjointness between basic concepts and property
/// expressions. Trivial consequences (B ⊑ B, B ⊑ ⊤) are not included unless
/// they follow from told axioms.
struct TBoxClosure {
  // lhs basic concept, rhs atomic class or ∃p.a
  std::set<std::pair<ClassExpr, ClassExpr>> inclusions;
  std::set<std::pair<PropExpr, PropExpr>> role_inclusions;
  // both orders are stored
  std::set<std::pair<ClassExpr, ClassExpr>> disjoint;
  // both orders and both inverse spellings are stored
  std::set<std::pair<PropExpr, PropExpr>> role_disjoint;
  std::set<Entity> reflexive, irreflexive;

  bool entails(const ClassExpr& sub, const ClassExpr& super) const {
    return inclusions.count({sub, super}) > 0;
  }
  bool entails(const PropExpr& sub, const PropExpr& super) const {
    return role_inclusions.count({sub, super}) > 0;
  }

  /// The closure written over the encoding signature, sorted.
  std::vector<Atom> facts() const;
};

TBoxClosure tbox_closure(const Ontology& o);

struct CanonicalModel {
  std::vector<std::string> elements;  // named individuals (sorted), then nulls
  std::set<std::string> named;
  std::map<std::string, std::set<std::string>> class_ext;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> prop_ext;
  std::size_t depth = 0;  // deepest null

  bool is_null(const std::string& e) const { return e.rfind("_:", 0) == 0; }
};

/// Label of the k-th null (1-based) in creation order.
std::string null_label(std::size_t k);

/// Oblivious chase over the told positive axioms. Throws CyclicTBox when the
/// existential dependencies loop or the chase would go past max_depth.
CanonicalModel chase(const Ontology& o, std::size_t max_depth = 32);

/// Facts true in the canonical model: the encoded closure, instc/instr over
/// model elements and the told diff facts. With named_only, tuples touching a
/// null are dropped.
std::vector<Atom> model_facts(const TBoxClosure& c, const CanonicalModel& m, const Ontology& o,
                              bool named_only);

enum class WitnessScope {
  Named,  // every variable ranges over named elements and vocabulary
  Nulls,  // non-answer variables may also bind to nulls
};

/// Answer tuples of named elements, sorted. Meta-level atoms are checked
/// against the closure, instc/instr against the chase.
std::vector<AnswerTuple> certain_answers_oracle(const Ontology& o, const ConjunctiveQuery& q,
                                                WitnessScope scope = WitnessScope::Nulls);

}  // namespace mser
