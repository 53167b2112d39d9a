#pragma once

// Bottom-up Datalog evaluation over interned symbols.

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mser/model.hpp"

namespace mser {

using SymbolId = std::uint32_t;
using PredId = std::uint32_t;

class UnknownPredicate : public Error {
 public:
  using Error::Error;
};

class SymbolTable {
 public:
  SymbolId intern(std::string_view s);
  std::optional<SymbolId> find(std::string_view s) const;
  const std::string& name(SymbolId id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::deque<std::string> names_;
  std::unordered_map<std::string_view, SymbolId> ids_;
};

/// Rows matching a fixed set of bound columns. Buckets are keyed by a hash of
/// the bound values; callers re-check the columns.
class Index {
 public:
  Index(std::uint32_t mask, std::size_t arity);

  std::uint32_t mask() const { return mask_; }
  const std::vector<std::uint8_t>& columns() const { return cols_; }

  std::uint64_t key_of(std::span<const SymbolId> tuple) const;
  static std::uint64_t combine(std::uint64_t h, SymbolId v);

  /// Row ids in ascending order.
  std::span<const std::uint32_t> lookup(std::uint64_t key) const;
  void add(std::uint64_t key, std::uint32_t row) { buckets_[key].push_back(row); }

 private:
  std::uint32_t mask_;
  std::vector<std::uint8_t> cols_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

class Relation {
 public:
  Relation(std::string name, std::size_t arity);
  Relation(const Relation&) = delete;
  Relation& operator=(const Relation&) = delete;

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return rows_; }
  bool empty() const { return rows_ == 0; }

  std::span<const SymbolId> row(std::size_t i) const {
    return {data_.data() + i * arity_, arity_};
  }

  bool contains(std::span<const SymbolId> t) const;
  /// Appends the tuple unless present; keeps every built index current.
  bool insert(std::span<const SymbolId> t);

  /// Index over the columns in `mask` (bit i = column i), built on first use.
  /// Safe to call from concurrent readers.
  const Index& index(std::uint32_t mask) const;

  // Rows [delta_begin, size) are the ones added by the latest round.
  std::size_t delta_begin() const { return delta_begin_; }
  void set_delta_begin(std::size_t r) { delta_begin_ = r; }

  /// Full rescan check that every index agrees with the stored rows.
  bool indexes_consistent() const;

 private:
  static std::uint64_t hash_tuple(std::span<const SymbolId> t);
  std::size_t find_slot(std::span<const SymbolId> t, std::uint64_t h) const;
  void grow();

  std::string name_;
  std::size_t arity_;
  std::size_t rows_ = 0;
  std::size_t delta_begin_ = 0;
  std::vector<SymbolId> data_;
  // open-addressing set of row ids; kEmpty marks a free slot
  static constexpr std::uint32_t kEmpty = ~std::uint32_t{0};
  std::vector<std::uint32_t> slots_;
  mutable std::mutex index_mu_;
  mutable std::map<std::uint32_t, std::unique_ptr<Index>> indexes_;
};

/// Per-predicate relations over one symbol table. The encoding signature and
/// the auxiliaries named/violation are always registered.
class FactStore {
 public:
  FactStore();
  FactStore(const FactStore&) = delete;
  FactStore& operator=(const FactStore&) = delete;

  SymbolTable& symbols() { return symbols_; }
  const SymbolTable& symbols() const { return symbols_; }

  /// Registers the predicate or returns the existing id; ArityMismatch when
  /// it exists with another arity.
  PredId predicate(std::string_view name, std::size_t arity);
  std::optional<PredId> find_predicate(std::string_view name) const;

  Relation& relation(PredId p) { return *relations_[p]; }
  const Relation& relation(PredId p) const { return *relations_[p]; }
  std::size_t num_predicates() const { return relations_.size(); }

  /// Inserts ground facts; returns how many were new.
  std::size_t assert_facts(std::span<const Atom> facts);
  bool contains(const Atom& fact) const;

  std::size_t size() const;

  /// All tuples as atoms, sorted by predicate then argument IRIs.
  std::vector<Atom> facts() const;
  /// Same as facts() restricted to one predicate.
  std::vector<Atom> facts(std::string_view pred) const;

  /// Canonical `.dl` dump.
  void dump(std::ostream& os) const;

 private:
  SymbolTable symbols_;
  std::vector<std::unique_ptr<Relation>> relations_;
  std::unordered_map<std::string, PredId> by_name_;
};

struct EvalOptions {
  unsigned threads = 1;
};

struct EvalStats {
  std::size_t rounds = 0;
  std::map<std::string, std::size_t> facts_derived;  // per predicate
  std::vector<std::size_t> derived_per_round;
  double wall_ms = 0;

  std::size_t total_derived() const;
  /// Single-line key=value rendering.
  std::string to_string() const;
};

/// Semi-naive fixpoint: every round joins each rule with at least one body
/// atom restricted to the previous round's new tuples. Rules must be safe.
EvalStats evaluate_fixpoint(FactStore& store, const std::vector<Rule>& rules, EvalOptions opts = {});

/// Re-evaluates every rule over the whole store until nothing changes.
/// Reference implementation for differential testing.
EvalStats naive_evaluate(FactStore& store, const std::vector<Rule>& rules);

using AnswerTuple = std::vector<std::string>;

/// Distinct bindings of q.answer_vars, sorted lexicographically by IRI.
std::vector<AnswerTuple> answer_conjunctive_query(const FactStore& store, const ConjunctiveQuery& q);

/// Goal-directed answering: rewrites rules and query with magic-set
/// predicates seeded by the query's constants, evaluates semi-naively over
/// the store's asserted facts, and reads off the answers. Adds auxiliary
/// relations (names containing '@') to the store.
std::vector<AnswerTuple> answer_with_demand(FactStore& store, const std::vector<Rule>& rules,
                                            const ConjunctiveQuery& q, EvalOptions opts = {},
                                            EvalStats* stats = nullptr);

/// The rewritten program used by answer_with_demand, exposed for inspection.
struct DemandProgram {
  std::vector<Rule> rules;
  Atom seed;          // ground magic fact for the query
  std::string answer_pred;
};
DemandProgram magic_transform(const std::vector<Rule>& rules, const ConjunctiveQuery& q);

}  // namespace mser
