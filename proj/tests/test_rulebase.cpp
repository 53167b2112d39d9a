#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mser/datalog_text.hpp"
#include "mser/engine.hpp"
#include "mser/oracle.hpp"
#include "mser/rulebase.hpp"
#include "mser/translator.hpp"
#include "support/random_instances.hpp"

using namespace mser;

namespace {

// True when the catalogue holds `want` up to variable renaming and body order.
bool contains_rule(const RuleCatalogue& cat, Rule want) {
  std::sort(want.body.begin(), want.body.end());
  do {
    auto canon = canonical_variables(want);
    for (const auto& r : cat.rules)
      if (canonical_variables(r) == canon) return true;
  } while (std::next_permutation(want.body.begin(), want.body.end()));
  return false;
}

Rule rule(const char* text) { return parse_program(text).at(0); }

std::vector<Atom> evaluate(const std::vector<Atom>& facts, const std::vector<Rule>& rules) {
  FactStore s;
  s.assert_facts(facts);
  evaluate_fixpoint(s, rules);
  return s.facts();
}

}  // namespace

TEST(Catalogue, AnchorRulePresent) {
  EXPECT_TRUE(contains_rule(builtin_rules(), rule("isacCR(C1, R2, C2) :- isacCC(C1, C3), isacCR(C3, R2, C2).")));
}

TEST(Catalogue, InstanceRulePresent) {
  EXPECT_TRUE(contains_rule(builtin_rules(), rule("instc(C2, X) :- instc(C1, X), isacCC(C1, C2).")));
}

TEST(Catalogue, AllRulesSafeAndOverSignature) {
  for (bool v : {false, true}) {
    for (const auto& r : builtin_rules(v).rules) {
      EXPECT_TRUE(is_safe(r)) << format_rule(r);
      EXPECT_FALSE(r.body.empty()) << format_rule(r);
      EXPECT_TRUE(builtin_arity(r.head.pred).has_value()) << format_rule(r);
      for (const auto& b : r.body) EXPECT_TRUE(builtin_arity(b.pred).has_value()) << format_rule(r);
    }
  }
}

TEST(Catalogue, FamilySizes) {
  const auto& cat = builtin_rules();
  EXPECT_EQ(cat.size(), 129u);
  EXPECT_EQ(cat.count(RuleFamily::TBoxChainAtomic), 9u);
  EXPECT_EQ(cat.count(RuleFamily::TBoxChainExist), 18u);
  EXPECT_EQ(cat.count(RuleFamily::TBoxFiller), 6u);
  EXPECT_EQ(cat.count(RuleFamily::RoleTrans), 4u);
  EXPECT_EQ(cat.count(RuleFamily::ABoxClass), 3u);
  EXPECT_EQ(cat.count(RuleFamily::ABoxRole), 2u);
  EXPECT_EQ(cat.count(RuleFamily::ABoxRefl), 1u);
  EXPECT_EQ(cat.count(RuleFamily::Violation), 0u);
  EXPECT_GT(builtin_rules(true).count(RuleFamily::Violation), 0u);
}

TEST(Catalogue, NoDuplicateRules) {
  std::set<Rule> seen;
  for (const auto& r : builtin_rules(true).rules) EXPECT_TRUE(seen.insert(canonical_variables(r)).second) << format_rule(r);
}

TEST(Catalogue, Cached) { EXPECT_EQ(&builtin_rules(), &builtin_rules()); }

TEST(Catalogue, TwoStepChain) {
  auto facts = parse_program(R"(isacCC("a", "b"). isacCC("b", "c").)");
  std::vector<Atom> in;
  for (const auto& f : facts) in.push_back(f.head);
  auto out = evaluate(in, builtin_rules().rules);
  EXPECT_TRUE(std::count(out.begin(), out.end(), parse_program(R"(isacCC("a", "c").)")[0].head));
}

// isacCC over random DAGs equals the transitive closure of the edge graph.
TEST(Catalogue, InclusionChainsMatchTransitiveClosure) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + rng() % 10;
    std::set<std::pair<int, int>> edges;
    for (int k = 0; k < n * 2; ++k) {
      int a = rng() % n, b = rng() % n;
      if (a != b) edges.insert({a, b});
    }
    auto name = [](int k) { return "http://ex/c" + std::to_string(k); };
    std::vector<Atom> facts;
    for (auto [a, b] : edges) facts.push_back(Atom("isacCC", {Term::constant(name(a)), Term::constant(name(b))}));

    std::set<std::pair<int, int>> tc = edges;
    for (int m = 0; m < n; ++m)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (tc.count({a, m}) && tc.count({m, b})) tc.insert({a, b});

    std::set<std::pair<std::string, std::string>> want, got;
    for (auto [a, b] : tc) want.insert({name(a), name(b)});
    FactStore s;
    s.assert_facts(facts);
    evaluate_fixpoint(s, builtin_rules().rules);
    for (const auto& f : s.facts("isacCC")) got.insert({f.args[0].value, f.args[1].value});
    ASSERT_EQ(got, want) << "instance " << i;
  }
}

TEST(Violation, ReportsClashes) {
  auto run = [](const char* text) {
    std::vector<Atom> in;
    for (const auto& f : parse_program(text)) in.push_back(f.head);
    FactStore s;
    s.assert_facts(in);
    evaluate_fixpoint(s, builtin_rules(true).rules);
    return !s.facts("violation").empty();
  };
  EXPECT_TRUE(run(R"(disjcCC("a", "b"). instc("a", "x"). instc("b", "x").)"));
  EXPECT_TRUE(run(R"(irrefl("r"). instr("r", "x", "x").)"));
  EXPECT_TRUE(run(R"(disjrRR("r", "s"). instr("r", "x", "y"). instr("s", "x", "y").)"));
  EXPECT_FALSE(run(R"(disjcCC("a", "b"). instc("a", "x"). instc("b", "y").)"));
}

// Dropping any single rule changes the model of at least one random instance,
// so every rule in the catalogue is needed.
TEST(Catalogue, EveryRuleIsNecessary) {
  const auto& rules = builtin_rules().rules;
  std::mt19937_64 rng(20240611);
  struct Instance {
    std::vector<Atom> facts, model;
  };
  std::vector<Instance> pool;
  auto instance = [&](std::size_t k) -> const Instance& {
    while (pool.size() <= k) {
      auto o = testkit::random_ontology(rng);
      Instance in{translate_ontology(o).all(), {}};
      in.model = model_facts(tbox_closure(o), chase(o), o, true);
      pool.push_back(std::move(in));
    }
    return pool[k];
  };

  std::vector<std::string> undetected;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    auto without = rules;
    without.erase(without.begin() + i);
    bool detected = false;
    for (std::size_t k = 0; k < 4000 && !detected; ++k) {
      const auto& in = instance(k);
      detected = evaluate(in.facts, without) != in.model;
    }
    if (!detected) undetected.push_back(format_rule(rules[i]));
  }
  for (const auto& r : undetected) ADD_FAILURE() << "rule never needed: " << r;
}

TEST(Catalogue, Monotone) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto o = testkit::random_ontology(rng);
    auto facts = translate_ontology(o).all();
    auto full = evaluate(facts, builtin_rules().rules);
    facts.resize(facts.size() / 2);
    auto part = evaluate(facts, builtin_rules().rules);
    EXPECT_TRUE(std::includes(full.begin(), full.end(), part.begin(), part.end(), fact_less));
  }
}
