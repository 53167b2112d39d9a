#pragma once

// The fixed positive program that saturates encoded OWL 2 QL axioms and
// derives instance facts. Rules are generated family by family over the
// concept-kind alphabet {C = atomic class, R = ∃r, I = ∃r⁻}.

#include <string_view>
#include <vector>

#include "mser/model.hpp"

namespace mser {

enum class RuleFamily {
  TBoxChainAtomic,
  TBoxChainExist,
  TBoxFiller,
  TBoxRoleLift,
  RoleTrans,
  DisjSym,
  DisjDown,
  ABoxClass,
  ABoxRole,
  ABoxRefl,
  AuxNamed,
  Violation,
};

std::string_view family_tag(RuleFamily f);

struct RuleCatalogue {
  std::vector<Rule> rules;
  std::vector<RuleFamily> families;  // parallel to rules

  std::size_t size() const { return rules.size(); }
  std::size_t count(RuleFamily f) const;
};

/// Returns the cached catalogue. The VIOLATION family (deriving the 0-ary
/// `violation` from ABox facts that clash with disjointness or irreflexivity)
/// is only present when requested.
const RuleCatalogue& builtin_rules(bool with_violation = false);

/// Renames variables to V0, V1, ... in first-occurrence order (head first).
Rule canonical_variables(const Rule& r);

}  // namespace mser
