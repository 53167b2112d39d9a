#include <algorithm>
#include <cassert>
#include <sstream>

#include "mser/datalog_text.hpp"
#include "mser/engine.hpp"
#include "mser/translator.hpp"

namespace mser {

SymbolId SymbolTable::intern(std::string_view s) {
  if (auto it = ids_.find(s); it != ids_.end()) return it->second;
  auto id = static_cast<SymbolId>(names_.size());
  names_.emplace_back(s);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view s) const {
  if (auto it = ids_.find(s); it != ids_.end()) return it->second;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Index::Index(std::uint32_t mask, std::size_t arity) : mask_(mask) {
  for (std::size_t i = 0; i < arity; ++i)
    if (mask & (1u << i)) cols_.push_back(static_cast<std::uint8_t>(i));
}

std::uint64_t Index::combine(std::uint64_t h, SymbolId v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

std::uint64_t Index::key_of(std::span<const SymbolId> tuple) const {
  std::uint64_t h = 0;
  for (auto c : cols_) h = combine(h, tuple[c]);
  return h;
}

std::span<const std::uint32_t> Index::lookup(std::uint64_t key) const {
  auto it = buckets_.find(key);
  if (it == buckets_.end()) return {};
  return it->second;
}

// ---------------------------------------------------------------------------

Relation::Relation(std::string name, std::size_t arity) : name_(std::move(name)), arity_(arity) {
  if (arity > 31) throw ArityMismatch("arity " + std::to_string(arity) + " is too large for " + name_);
  slots_.assign(16, kEmpty);
}

std::uint64_t Relation::hash_tuple(std::span<const SymbolId> t) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (auto v : t) h = Index::combine(h, v);
  return h;
}

std::size_t Relation::find_slot(std::span<const SymbolId> t, std::uint64_t h) const {
  std::size_t mask = slots_.size() - 1;
  for (std::size_t i = h & mask;; i = (i + 1) & mask) {
    auto r = slots_[i];
    if (r == kEmpty) return i;
    auto existing = row(r);
    if (std::equal(existing.begin(), existing.end(), t.begin(), t.end())) return i;
  }
}

void Relation::grow() {
  std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
  old.swap(slots_);
  std::size_t mask = slots_.size() - 1;
  for (auto r : old) {
    if (r == kEmpty) continue;
    std::size_t i = hash_tuple(row(r)) & mask;
    while (slots_[i] != kEmpty) i = (i + 1) & mask;
    slots_[i] = r;
  }
}

bool Relation::contains(std::span<const SymbolId> t) const {
  assert(t.size() == arity_);
  return slots_[find_slot(t, hash_tuple(t))] != kEmpty;
}

bool Relation::insert(std::span<const SymbolId> t) {
  if (t.size() != arity_) throw ArityMismatch("wrong tuple width for " + name_);
  auto h = hash_tuple(t);
  auto slot = find_slot(t, h);
  if (slots_[slot] != kEmpty) return false;
  auto r = static_cast<std::uint32_t>(rows_);
  data_.insert(data_.end(), t.begin(), t.end());
  ++rows_;
  slots_[slot] = r;
  if (rows_ * 2 > slots_.size()) grow();
  for (auto& [mask, idx] : indexes_) idx->add(idx->key_of(t), r);
  return true;
}

const Index& Relation::index(std::uint32_t mask) const {
  std::lock_guard lock(index_mu_);
  auto& slot = indexes_[mask];
  if (!slot) {
    auto idx = std::make_unique<Index>(mask, arity_);
    for (std::size_t r = 0; r < rows_; ++r) idx->add(idx->key_of(row(r)), static_cast<std::uint32_t>(r));
    slot = std::move(idx);
  }
  return *slot;
}

bool Relation::indexes_consistent() const {
  std::lock_guard lock(index_mu_);
  for (const auto& [mask, idx] : indexes_) {
    std::size_t seen = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      auto bucket = idx->lookup(idx->key_of(row(r)));
      if (!std::binary_search(bucket.begin(), bucket.end(), static_cast<std::uint32_t>(r))) return false;
      ++seen;
    }
    if (seen != rows_) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FactStore::FactStore() {
  for (const auto& p : encoding_signature()) predicate(p.name, p.arity);
  predicate(pred::named, 1);
  predicate(pred::violation, 0);
}

PredId FactStore::predicate(std::string_view name, std::size_t arity) {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) {
    if (relations_[it->second]->arity() != arity)
      throw ArityMismatch("predicate " + std::string(name) + " has arity " +
                          std::to_string(relations_[it->second]->arity()) + ", used with " + std::to_string(arity));
    return it->second;
  }
  auto id = static_cast<PredId>(relations_.size());
  relations_.push_back(std::make_unique<Relation>(std::string(name), arity));
  by_name_.emplace(std::string(name), id);
  return id;
}

std::optional<PredId> FactStore::find_predicate(std::string_view name) const {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) return it->second;
  return std::nullopt;
}

std::size_t FactStore::assert_facts(std::span<const Atom> facts) {
  std::size_t added = 0;
  std::vector<SymbolId> t;
  for (const auto& f : facts) {
    if (!f.is_ground()) throw Error("fact is not ground: " + format_atom(f));
    auto p = predicate(f.pred, f.args.size());
    t.clear();
    for (const auto& a : f.args) t.push_back(symbols_.intern(a.value));
    if (relations_[p]->insert(t)) ++added;
  }
  return added;
}

bool FactStore::contains(const Atom& fact) const {
  auto p = find_predicate(fact.pred);
  if (!p || relations_[*p]->arity() != fact.args.size()) return false;
  std::vector<SymbolId> t;
  for (const auto& a : fact.args) {
    if (a.is_variable()) return false;
    auto id = symbols_.find(a.value);
    if (!id) return false;
    t.push_back(*id);
  }
  return relations_[*p]->contains(t);
}

std::size_t FactStore::size() const {
  std::size_t n = 0;
  for (const auto& r : relations_) n += r->size();
  return n;
}

std::vector<Atom> FactStore::facts(std::string_view pred) const {
  std::vector<Atom> out;
  auto p = find_predicate(pred);
  if (!p) return out;
  const auto& rel = *relations_[*p];
  out.reserve(rel.size());
  for (std::size_t r = 0; r < rel.size(); ++r) {
    Atom a;
    a.pred = rel.name();
    for (auto v : rel.row(r)) a.args.push_back(Term::constant(symbols_.name(v)));
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), fact_less);
  return out;
}

std::vector<Atom> FactStore::facts() const {
  std::vector<std::string> names;
  for (const auto& r : relations_) names.push_back(r->name());
  std::sort(names.begin(), names.end());
  std::vector<Atom> out;
  for (const auto& n : names) {
    auto part = facts(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

void FactStore::dump(std::ostream& os) const { write_facts(os, facts()); }

std::size_t EvalStats::total_derived() const {
  std::size_t n = 0;
  for (const auto& [p, c] : facts_derived) n += c;
  return n;
}

std::string EvalStats::to_string() const {
  std::ostringstream os;
  os << "rounds=" << rounds << " derived=" << total_derived() << " wall_ms=" << wall_ms;
  for (const auto& [p, c] : facts_derived)
    if (c) os << " " << p << "=" << c;
  return os.str();
}

}  // namespace mser
