#pragma once

// Compiled atoms and index-backed nested-loop join plans shared by rule
// evaluation and query answering.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mser/engine.hpp"

namespace mser::detail {

struct Slot {
  bool is_const = false;
  std::uint32_t value = 0;  // SymbolId or variable number
};

struct CompiledAtom {
  PredId pred = 0;
  std::vector<Slot> args;
};

struct VarNames {
  std::vector<std::string> names;
  std::uint32_t number(const std::string& n);
};

/// Interns constants into the store. For read-only use pass intern = false;
/// an unknown constant then yields std::nullopt.
std::optional<CompiledAtom> compile_atom(const Atom& a, FactStore& store, VarNames& vars);
std::optional<CompiledAtom> compile_atom_readonly(const Atom& a, const FactStore& store, VarNames& vars);

enum class Range { Full, Old, Delta };

struct Step {
  const Relation* rel = nullptr;
  Range range = Range::Full;
  const Index* index = nullptr;                                 // null: scan
  std::vector<std::pair<std::uint8_t, Slot>> keys;              // bound columns
  std::vector<std::pair<std::uint8_t, std::uint32_t>> binds;    // column -> new variable
  std::vector<std::pair<std::uint8_t, std::uint8_t>> repeats;   // column must equal column
};

struct Plan {
  std::vector<Step> steps;
  std::size_t num_vars = 0;
};

/// Orders `atoms` greedily: `first` (if set) leads, then at each step the atom
/// with the most bound columns, ties broken by smaller relation, then
/// predicate name, then position. `range_of(i)` gives the row range atom i
/// reads.
Plan make_plan(const FactStore& store, const std::vector<CompiledAtom>& atoms, std::size_t num_vars,
               std::optional<std::size_t> first, const std::function<Range(std::size_t)>& range_of);

/// Enumerates all bindings satisfying the plan; calls `emit` with the
/// variable array for each.
void execute(const Plan& plan, const std::function<void(std::span<const SymbolId>)>& emit);

}  // namespace mser::detail
