#include <algorithm>
#include <set>

#include "join.hpp"
#include "mser/engine.hpp"

namespace mser {

std::vector<AnswerTuple> answer_conjunctive_query(const FactStore& store, const ConjunctiveQuery& q) {
  check_query(q);
  detail::VarNames vars;
  std::vector<detail::CompiledAtom> atoms;
  bool satisfiable = true;
  for (const auto& a : q.body) {
    auto c = detail::compile_atom_readonly(a, store, vars);
    if (!c) {
      satisfiable = false;  // a constant the store has never seen
      continue;
    }
    atoms.push_back(std::move(*c));
  }
  if (!satisfiable) return {};

  std::vector<std::uint32_t> answer_slots;
  for (const auto& v : q.answer_vars) answer_slots.push_back(vars.number(v));

  auto plan = detail::make_plan(store, atoms, vars.names.size(), std::nullopt,
                                [](std::size_t) { return detail::Range::Full; });
  std::set<std::vector<SymbolId>> distinct;
  std::vector<SymbolId> t(answer_slots.size());
  detail::execute(plan, [&](std::span<const SymbolId> b) {
    for (std::size_t i = 0; i < answer_slots.size(); ++i) t[i] = b[answer_slots[i]];
    distinct.insert(t);
  });

  std::vector<AnswerTuple> out;
  out.reserve(distinct.size());
  for (const auto& ids : distinct) {
    AnswerTuple row;
    for (auto id : ids) row.push_back(store.symbols().name(id));
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mser
