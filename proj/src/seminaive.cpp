#include <atomic>
#include <chrono>
#include <thread>

#include "join.hpp"
#include "mser/datalog_text.hpp"
#include "mser/engine.hpp"

namespace mser {

namespace {

struct CompiledRule {
  detail::CompiledAtom head;
  std::vector<detail::CompiledAtom> body;
  std::size_t num_vars = 0;
};

std::vector<CompiledRule> compile_rules(FactStore& store, const std::vector<Rule>& rules) {
  std::vector<CompiledRule> out;
  for (const auto& r : rules) {
    if (!is_safe(r)) throw Error("unsafe rule: " + format_rule(r));
    detail::VarNames vars;
    CompiledRule c;
    for (const auto& b : r.body) c.body.push_back(*detail::compile_atom(b, store, vars));
    c.head = *detail::compile_atom(r.head, store, vars);
    c.num_vars = vars.names.size();
    out.push_back(std::move(c));
  }
  return out;
}

struct Task {
  const CompiledRule* rule;
  std::size_t delta_pos;
  detail::Plan plan;
  std::vector<SymbolId> out;  // flattened head tuples
  std::size_t emitted = 0;
};

void run_task(const FactStore& store, Task& task) {
  const auto& head = task.rule->head;
  const Relation& target = store.relation(head.pred);
  std::vector<SymbolId> tuple(head.args.size());
  detail::execute(task.plan, [&](std::span<const SymbolId> vars) {
    for (std::size_t i = 0; i < head.args.size(); ++i)
      tuple[i] = head.args[i].is_const ? head.args[i].value : vars[head.args[i].value];
    if (target.contains(tuple)) return;
    task.out.insert(task.out.end(), tuple.begin(), tuple.end());
    ++task.emitted;
  });
}

}  // namespace

EvalStats evaluate_fixpoint(FactStore& store, const std::vector<Rule>& rules, EvalOptions opts) {
  auto start = std::chrono::steady_clock::now();
  EvalStats stats;
  auto compiled = compile_rules(store, rules);

  for (PredId p = 0; p < store.num_predicates(); ++p) store.relation(p).set_delta_begin(0);
  for (const auto& r : compiled) {
    if (!r.body.empty()) continue;
    std::vector<SymbolId> t;
    for (const auto& s : r.head.args) t.push_back(s.value);
    if (store.relation(r.head.pred).insert(t)) ++stats.facts_derived[store.relation(r.head.pred).name()];
  }

  unsigned threads = std::max(1u, opts.threads);
  for (;;) {
    ++stats.rounds;
    std::vector<Task> tasks;
    for (const auto& r : compiled) {
      for (std::size_t d = 0; d < r.body.size(); ++d) {
        const auto& rel = store.relation(r.body[d].pred);
        if (rel.delta_begin() == rel.size()) continue;
        // Atoms before the delta position read old rows only, so each new
        // combination is produced by exactly one delta position.
        auto range_of = [d](std::size_t i) {
          return i == d ? detail::Range::Delta : i < d ? detail::Range::Old : detail::Range::Full;
        };
        tasks.push_back({&r, d, detail::make_plan(store, r.body, r.num_vars, d, range_of), {}});
      }
    }

    if (threads == 1 || tasks.size() < 2) {
      for (auto& t : tasks) run_task(store, t);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(threads, tasks.size()); ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run_task(store, tasks[i]);
        });
      for (auto& th : pool) th.join();
    }

    // barrier: previous deltas become old, this round's output becomes the delta
    for (PredId p = 0; p < store.num_predicates(); ++p) store.relation(p).set_delta_begin(store.relation(p).size());
    std::size_t derived = 0;
    for (auto& t : tasks) {
      auto& rel = store.relation(t.rule->head.pred);
      std::size_t w = rel.arity();
      for (std::size_t i = 0; i < t.emitted; ++i) {
        std::span<const SymbolId> tuple(t.out.data() + i * w, w);
        if (rel.insert(tuple)) {
          ++derived;
          ++stats.facts_derived[rel.name()];
        }
      }
    }
    stats.derived_per_round.push_back(derived);
    if (derived == 0) break;
  }
  stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

}  // namespace mser
