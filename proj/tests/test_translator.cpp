#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mser/datalog_text.hpp"
#include "mser/ontology.hpp"
#include "mser/translator.hpp"
#include "support/random_instances.hpp"
#include "support/tau_table.hpp"

using namespace mser;

using testkit::tau_table;
using namespace testkit::tau_names;

TEST(Tau, EveryTableRow) {
  auto rows = tau_table();
  ASSERT_EQ(rows.size(), 26u);
  std::set<std::string> preds;
  for (const auto& row : rows) {
    auto f = tau(row.axiom);
    EXPECT_EQ(format_atom(f), row.fact) << to_string(row.axiom);
    preds.insert(f.pred);
  }
  EXPECT_EQ(preds.size(), 26u);
  for (const auto& info : encoding_signature()) EXPECT_TRUE(preds.count(std::string(info.name))) << info.name;
}

TEST(Tau, UnqualifiedExistentialUsesTopFiller) {
  auto f = tau(ax::ClassInclusion{A(c1), R(r2)});
  EXPECT_EQ(f.pred, "isacCR");
  EXPECT_EQ(f.args[2].value, top_class().iri);
}

TEST(Tau, RejectsNonNormalized) {
  EXPECT_THROW(tau(ax::ClassInclusion{RQ(r1, c1), A(c2)}), NonNormalizedAxiom);
  EXPECT_THROW(tau(ax::ClassDisjoint{A(c1), R(r1)}), NonNormalizedAxiom);
  EXPECT_THROW(tau(ax::PropInclusion{N(r1), D(r2)}), NonNormalizedAxiom);
}

TEST(Tau, PaperExamples) {
  Entity golden("http://ex/z#GoldenEagle"), harry("http://ex/z#Harry");
  auto f = tau(ax::ClassAssertion{golden, harry});
  EXPECT_EQ(f.pred, "instc");
  EXPECT_EQ(f.args[0].value, golden.iri);
  EXPECT_EQ(f.args[1].value, harry.iri);
}

TEST(Untau, InvertsEveryRow) {
  for (const auto& row : tau_table()) EXPECT_EQ(untau(tau(row.axiom)), row.axiom) << row.fact;
  EXPECT_THROW(untau(Atom("named", {Term::constant(x)})), Error);
  EXPECT_THROW(untau(Atom("instc", {Term::variable("X"), Term::constant(x)})), Error);
}

TEST(Untau, InjectiveOnRandomOntologies) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto o = testkit::random_ontology(rng);
    auto fb = translate_ontology(o);
    EXPECT_EQ(fb.size(), o.size());
    Ontology back;
    for (const auto& f : fb.all()) back.add(untau(f));
    EXPECT_EQ(back, o);
  }
}

TEST(TranslateOntology, Example1) {
  auto o = normalize_ontology(parse_ontology(R"(
    Prefix(:=<http://ex/z#>)
    Ontology(
      SubClassOf(:GoldenEagle :Eagle)
      SubClassOf(:Eagle :Birds)
      ClassAssertion(:GoldenEagle :Harry)
      ClassAssertion(:EndangeredSpecies :GoldenEagle))
  )"));
  auto fb = translate_ontology(o);
  std::vector<std::string> got;
  for (const auto& f : fb.all()) got.push_back(format_atom(f));
  std::vector<std::string> want{
      "isacCC(\"http://ex/z#Eagle\",\"http://ex/z#Birds\")",
      "isacCC(\"http://ex/z#EndangeredSpecies\",\"urn:mser:top-class\")",
      "isacCC(\"http://ex/z#GoldenEagle\",\"http://ex/z#Eagle\")",
      "instc(\"http://ex/z#EndangeredSpecies\",\"http://ex/z#GoldenEagle\")",
      "instc(\"http://ex/z#GoldenEagle\",\"http://ex/z#Harry\")",
  };
  EXPECT_EQ(got, want);
}

TEST(TranslateOntology, Empty) {
  EXPECT_EQ(translate_ontology(Ontology{}).size(), 0u);
}

TEST(TranslateOntology, SortedAndDeterministic) {
  std::mt19937_64 rng(9);
  auto o = testkit::random_ontology(rng);
  auto a = translate_ontology(o), b = translate_ontology(o);
  EXPECT_EQ(a.all(), b.all());
  EXPECT_TRUE(std::is_sorted(a.tbox_facts.begin(), a.tbox_facts.end(), fact_less));
  EXPECT_TRUE(std::is_sorted(a.abox_facts.begin(), a.abox_facts.end(), fact_less));
}
