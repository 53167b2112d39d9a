#include <chrono>
#include <map>

#include "mser/datalog_text.hpp"
#include "mser/engine.hpp"

namespace mser {

namespace {

// Plain backtracking matcher over whole relations, no indexes and no plan.
struct NaiveMatcher {
  const FactStore& store;
  const std::vector<const Relation*>& rels;
  const Rule& rule;
  std::map<std::string, SymbolId> binding;
  std::vector<std::vector<SymbolId>>& out;

  void match(std::size_t i) {
    if (i == rule.body.size()) {
      std::vector<SymbolId> t;
      for (const auto& a : rule.head.args)
        t.push_back(a.is_variable() ? binding.at(a.value) : *store.symbols().find(a.value));
      out.push_back(std::move(t));
      return;
    }
    const Relation& rel = *rels[i];
    const Atom& atom = rule.body[i];
    for (std::size_t r = 0; r < rel.size(); ++r) {
      auto row = rel.row(r);
      auto saved = binding;
      bool ok = true;
      for (std::size_t c = 0; c < atom.args.size() && ok; ++c) {
        const Term& t = atom.args[c];
        if (t.is_constant()) {
          auto id = store.symbols().find(t.value);
          ok = id && *id == row[c];
        } else if (auto it = binding.find(t.value); it != binding.end()) {
          ok = it->second == row[c];
        } else {
          binding.emplace(t.value, row[c]);
        }
      }
      if (ok) match(i + 1);
      binding = std::move(saved);
    }
  }
};

}  // namespace

EvalStats naive_evaluate(FactStore& store, const std::vector<Rule>& rules) {
  auto start = std::chrono::steady_clock::now();
  EvalStats stats;
  std::vector<std::vector<const Relation*>> rels;
  std::vector<PredId> heads;
  for (const auto& r : rules) {
    if (!is_safe(r)) throw Error("unsafe rule: " + format_rule(r));
    for (const auto& t : r.head.args)
      if (t.is_constant()) store.symbols().intern(t.value);
    heads.push_back(store.predicate(r.head.pred, r.head.args.size()));
    std::vector<const Relation*> body;
    for (const auto& b : r.body) body.push_back(&store.relation(store.predicate(b.pred, b.args.size())));
    rels.push_back(std::move(body));
  }
  for (;;) {
    ++stats.rounds;
    std::vector<std::pair<PredId, std::vector<SymbolId>>> found;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<std::vector<SymbolId>> out;
      NaiveMatcher m{store, rels[i], rules[i], {}, out};
      m.match(0);
      for (auto& t : out) found.emplace_back(heads[i], std::move(t));
    }
    std::size_t derived = 0;
    for (const auto& [p, t] : found)
      if (store.relation(p).insert(t)) {
        ++derived;
        ++stats.facts_derived[store.relation(p).name()];
      }
    stats.derived_per_round.push_back(derived);
    if (derived == 0) break;
  }
  stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

}  // namespace mser
