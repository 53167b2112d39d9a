#include "join.hpp"

#include <algorithm>

namespace mser::detail {

std::uint32_t VarNames::number(const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it != names.end()) return static_cast<std::uint32_t>(it - names.begin());
  names.push_back(n);
  return static_cast<std::uint32_t>(names.size() - 1);
}

namespace {

template <class Store, class ConstFn>
std::optional<CompiledAtom> compile_with(const Atom& a, Store& store, VarNames& vars, ConstFn constant) {
  CompiledAtom c;
  auto p = store.find_predicate(a.pred);
  if (!p) throw UnknownPredicate("unknown predicate " + a.pred);
  if (store.relation(*p).arity() != a.args.size())
    throw ArityMismatch("predicate " + a.pred + " has arity " + std::to_string(store.relation(*p).arity()));
  c.pred = *p;
  for (const auto& t : a.args) {
    if (t.is_variable()) {
      c.args.push_back({false, vars.number(t.value)});
    } else {
      auto id = constant(t.value);
      if (!id) return std::nullopt;
      c.args.push_back({true, *id});
    }
  }
  return c;
}

}  // namespace

std::optional<CompiledAtom> compile_atom(const Atom& a, FactStore& store, VarNames& vars) {
  if (!store.find_predicate(a.pred)) store.predicate(a.pred, a.args.size());
  return compile_with(a, store, vars,
                      [&](const std::string& s) -> std::optional<SymbolId> { return store.symbols().intern(s); });
}

std::optional<CompiledAtom> compile_atom_readonly(const Atom& a, const FactStore& store, VarNames& vars) {
  return compile_with(a, store, vars, [&](const std::string& s) { return store.symbols().find(s); });
}

namespace {

std::size_t range_size(const Relation& r, Range range) {
  switch (range) {
    case Range::Full: return r.size();
    case Range::Old: return r.delta_begin();
    case Range::Delta: return r.size() - r.delta_begin();
  }
  return 0;
}

}  // namespace

Plan make_plan(const FactStore& store, const std::vector<CompiledAtom>& atoms, std::size_t num_vars,
               std::optional<std::size_t> first, const std::function<Range(std::size_t)>& range_of) {
  Plan plan;
  plan.num_vars = num_vars;
  std::vector<bool> bound(num_vars, false), used(atoms.size(), false);

  auto bound_count = [&](const CompiledAtom& a) {
    std::size_t n = 0;
    for (const auto& s : a.args)
      if (s.is_const || bound[s.value]) ++n;
    return n;
  };

  for (std::size_t step = 0; step < atoms.size(); ++step) {
    std::size_t pick = atoms.size();
    if (step == 0 && first) {
      pick = *first;
    } else {
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (used[i]) continue;
        if (pick == atoms.size()) {
          pick = i;
          continue;
        }
        const auto& a = atoms[i];
        const auto& b = atoms[pick];
        bool a_full = bound_count(a) == a.args.size(), b_full = bound_count(b) == b.args.size();
        if (a_full != b_full) {
          if (a_full) pick = i;
          continue;
        }
        auto ba = bound_count(a), bb = bound_count(b);
        if (ba != bb) {
          if (ba > bb) pick = i;
          continue;
        }
        auto sa = range_size(store.relation(a.pred), range_of(i));
        auto sb = range_size(store.relation(b.pred), range_of(pick));
        if (sa != sb) {
          if (sa < sb) pick = i;
          continue;
        }
        const auto& na = store.relation(a.pred).name();
        const auto& nb = store.relation(b.pred).name();
        if (na < nb) pick = i;
      }
    }
    used[pick] = true;
    const auto& a = atoms[pick];
    Step s;
    s.rel = &store.relation(a.pred);
    s.range = range_of(pick);
    std::uint32_t mask = 0;
    std::vector<std::pair<std::uint32_t, std::uint8_t>> local;  // variable -> first column in this atom
    for (std::size_t c = 0; c < a.args.size(); ++c) {
      const auto& slot = a.args[c];
      auto col = static_cast<std::uint8_t>(c);
      if (slot.is_const || bound[slot.value]) {
        s.keys.push_back({col, slot});
        mask |= 1u << c;
        continue;
      }
      auto it = std::find_if(local.begin(), local.end(), [&](const auto& p) { return p.first == slot.value; });
      if (it != local.end()) {
        s.repeats.push_back({col, it->second});
      } else {
        local.push_back({slot.value, col});
        s.binds.push_back({col, slot.value});
      }
    }
    for (const auto& [v, c] : local) bound[v] = true;
    if (mask) s.index = &s.rel->index(mask);
    plan.steps.push_back(std::move(s));
  }
  return plan;
}

namespace {

struct Runner {
  const Plan& plan;
  const std::function<void(std::span<const SymbolId>)>& emit;
  std::vector<SymbolId> vars;

  bool matches(const Step& s, std::span<const SymbolId> t) const {
    for (const auto& [c, slot] : s.keys)
      if (t[c] != (slot.is_const ? slot.value : vars[slot.value])) return false;
    for (const auto& [c, other] : s.repeats)
      if (t[c] != t[other]) return false;
    return true;
  }

  void visit(const Step& s, std::size_t depth, std::size_t row) {
    auto t = s.rel->row(row);
    if (!matches(s, t)) return;
    for (const auto& [c, v] : s.binds) vars[v] = t[c];
    run(depth + 1);
  }

  void run(std::size_t depth) {
    if (depth == plan.steps.size()) {
      emit(vars);
      return;
    }
    const Step& s = plan.steps[depth];
    std::size_t lo = 0, hi = s.rel->size();
    if (s.range == Range::Old) hi = s.rel->delta_begin();
    if (s.range == Range::Delta) lo = s.rel->delta_begin();
    if (lo >= hi) return;
    if (s.index) {
      std::uint64_t key = 0;
      for (const auto& [c, slot] : s.keys) key = Index::combine(key, slot.is_const ? slot.value : vars[slot.value]);
      auto bucket = s.index->lookup(key);
      auto it = std::lower_bound(bucket.begin(), bucket.end(), static_cast<std::uint32_t>(lo));
      for (; it != bucket.end() && *it < hi; ++it) visit(s, depth, *it);
    } else {
      for (std::size_t r = lo; r < hi; ++r) visit(s, depth, r);
    }
  }
};

}  // namespace

void execute(const Plan& plan, const std::function<void(std::span<const SymbolId>)>& emit) {
  Runner r{plan, emit, std::vector<SymbolId>(plan.num_vars, 0)};
  r.run(0);
}

}  // namespace mser::detail
