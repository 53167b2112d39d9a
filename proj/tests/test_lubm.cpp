#include <gtest/gtest.h>

#include <set>

#include "mser/lubm.hpp"
#include "mser/oracle.hpp"
#include "mser/pipeline.hpp"

using namespace mser;

namespace {

struct Suite {
  LubmBundle bundle;
  Ontology merged;
};

const Suite& small() {
  static const Suite s = [] {
    Suite out;
    out.bundle = generate_lubm({1, 1, 5});
    out.merged = parse_ontology(out.bundle.ontology);
    for (const auto& a : parse_ontology(out.bundle.extension).tbox) out.merged.add(a);
    for (const auto& a : parse_ontology(out.bundle.extension).abox) out.merged.add(a);
    out.merged = normalize_ontology(out.merged);
    return out;
  }();
  return s;
}

const std::string& special(const std::string& name) {
  for (const auto& q : small().bundle.special)
    if (q.name == name) return q.text;
  throw std::runtime_error("no query " + name);
}

std::string ub(const std::string& local) { return std::string(kUbNamespace) + local; }

}  // namespace

TEST(Lubm, DefaultSizeReachesTenThousandAxioms) {
  auto b = generate_lubm();
  EXPECT_GE(parse_ontology(b.ontology).size(), 10334u);
  EXPECT_EQ(b.standard.size(), 14u);
  EXPECT_EQ(b.meta.size(), 4u);
  EXPECT_EQ(b.special.size(), 2u);
}

TEST(Lubm, Deterministic) {
  EXPECT_EQ(generate_lubm({1, 2, 3}).ontology, generate_lubm({1, 2, 3}).ontology);
  EXPECT_NE(generate_lubm({1, 2, 3}).ontology, generate_lubm({1, 2, 4}).ontology);
}

TEST(Lubm, ExtensionShape) {
  auto ext = parse_ontology(small().bundle.extension);
  std::size_t types = 0, disj = 0;
  for (const auto& a : ext.abox)
    if (auto* x = std::get_if<ax::ClassAssertion>(&a)) types += x->cls.iri == ub("TypeOfProfessor");
  for (const auto& a : ext.tbox) disj += std::holds_alternative<ax::ClassDisjoint>(a);
  EXPECT_EQ(types, 3u);
  EXPECT_EQ(disj, 3u);
}

TEST(Lubm, AcyclicForTheOracle) {
  EXPECT_NO_THROW(chase(small().merged));
}

// sq1 pairs every professor with their rank; oracle and generator agree.
TEST(Lubm, SpecialQuery1) {
  auto tq = translate_query(parse_query(special("sq1")));
  auto oracle = certain_answers_oracle(small().merged, tq.cq);
  std::set<AnswerTuple> truth;
  for (const auto& [prof, rank] : small().bundle.professors) truth.insert({prof, rank});
  ASSERT_FALSE(truth.empty());
  EXPECT_EQ(std::set<AnswerTuple>(oracle.begin(), oracle.end()), truth);
  for (bool demand : {false, true}) {
    auto got = run_pipeline(small().merged, parse_query(special("sq1")), {demand, false, 1}).answers;
    EXPECT_EQ(got, oracle) << "demand=" << demand;
  }
}

TEST(Lubm, SpecialQuery2) {
  auto tq = translate_query(parse_query(special("sq2")));
  auto oracle = certain_answers_oracle(small().merged, tq.cq);
  EXPECT_EQ(oracle.size(), 6u);
  auto got = run_pipeline(small().merged, parse_query(special("sq2"))).answers;
  EXPECT_EQ(got, oracle);
}

TEST(Lubm, MetaQueriesMatchOracle) {
  for (const auto& q : small().bundle.meta) {
    auto tq = translate_query(parse_query(q.text));
    auto got = run_pipeline(small().merged, parse_query(q.text)).answers;
    EXPECT_EQ(got, certain_answers_oracle(small().merged, tq.cq, WitnessScope::Named)) << q.name;
    EXPECT_FALSE(got.empty()) << q.name;
  }
}
