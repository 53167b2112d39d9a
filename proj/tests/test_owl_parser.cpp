#include <gtest/gtest.h>

#include <random>

#include "mser/ontology.hpp"
#include "mser/oracle.hpp"
#include "support/random_instances.hpp"

using namespace mser;

namespace {

Entity z(const std::string& local) { return Entity("http://ex/z#" + local); }
ClassExpr C(const std::string& l) { return ClassExpr::atomic(z(l)); }
PropExpr P(const std::string& l) { return PropExpr::direct(z(l)); }

Ontology parse_body(const std::string& body) {
  return parse_ontology("Prefix(:=<http://ex/z#>)\nOntology(<http://ex/z>\n" + body + "\n)\n");
}

bool has(const Ontology& o, const Axiom& a) { return o.tbox.count(a) || o.abox.count(a); }

}  // namespace

TEST(Parse, SubClassOf) {
  auto o = parse_body("SubClassOf(:Eagle :Birds)");
  ASSERT_EQ(o.size(), 1u);
  EXPECT_TRUE(has(o, ax::ClassInclusion{C("Eagle"), C("Birds")}));
}

TEST(Parse, ClassAssertionGoesToAbox) {
  auto o = parse_body("ClassAssertion(:EndangeredSpecies :GoldenEagle)");
  ASSERT_EQ(o.abox.size(), 1u);
  EXPECT_TRUE(o.tbox.empty());
  EXPECT_TRUE(has(o, ax::ClassAssertion{z("EndangeredSpecies"), z("GoldenEagle")}));
}

TEST(Parse, EmptyOntology) {
  EXPECT_EQ(parse_ontology("Ontology()").size(), 0u);
}

TEST(Parse, SugarExpansion) {
  auto o = parse_body(R"(
    Declaration(Class(:A))
    EquivalentClasses(:A :B)
    ObjectPropertyDomain(:r :A)
    ObjectPropertyRange(:r :B)
    InverseObjectProperties(:r :s)
    DisjointClasses(:A :C :D)
    EquivalentObjectProperties(:r :t)
    DifferentIndividuals(:a :b :c)
    SubClassOf(:A ObjectSomeValuesFrom(ObjectInverseOf(:r) owl:Thing))
  )");
  EXPECT_TRUE(has(o, ax::ClassInclusion{C("A"), C("B")}));
  EXPECT_TRUE(has(o, ax::ClassInclusion{C("B"), C("A")}));
  EXPECT_TRUE(has(o, ax::ClassInclusion{ClassExpr::exists(P("r")), C("A")}));
  EXPECT_TRUE(has(o, ax::ClassInclusion{ClassExpr::exists(P("r").inverted()), C("B")}));
  EXPECT_TRUE(has(o, ax::PropInclusion{P("r"), P("s").inverted()}));
  EXPECT_TRUE(has(o, ax::PropInclusion{P("s"), P("r").inverted()}));
  EXPECT_TRUE(has(o, ax::PropInclusion{P("r"), P("t")}));
  EXPECT_TRUE(has(o, ax::PropInclusion{P("t"), P("r")}));
  EXPECT_TRUE(has(o, ax::ClassInclusion{C("A"), ClassExpr::exists(P("r").inverted())}));
  std::size_t disj = 0, diff = 0;
  for (const auto& a : o.tbox) disj += std::holds_alternative<ax::ClassDisjoint>(a);
  for (const auto& a : o.abox) diff += std::holds_alternative<ax::DifferentIndividuals>(a);
  EXPECT_EQ(disj, 3u);
  EXPECT_EQ(diff, 3u);
}

TEST(Parse, DoubleInverseNormalized) {
  auto o = parse_body("SubObjectPropertyOf(ObjectInverseOf(ObjectInverseOf(:r)) :s)");
  EXPECT_TRUE(has(o, ax::PropInclusion{P("r"), P("s")}));
}

TEST(Parse, OwlThingMapsToReservedTop) {
  auto o = parse_body("SubClassOf(:A owl:Thing)");
  EXPECT_TRUE(has(o, ax::ClassInclusion{C("A"), ClassExpr::atomic(top_class())}));
}

TEST(Parse, CommentsIgnored) {
  auto o = parse_body("# a comment\nSubClassOf(:A :B) # trailing");
  EXPECT_EQ(o.size(), 1u);
}

TEST(ParseErrors, SyntaxErrorCarriesLine) {
  try {
    parse_ontology("Prefix(:=<http://ex/z#>)\nOntology(\nSubClassOf(:A\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_GE(e.line(), 3u);
  }
}

TEST(ParseErrors, UnsupportedAxiom) {
  try {
    parse_body("SubClassOf(:A ObjectMinCardinality(2 :r))");
    FAIL();
  } catch (const UnsupportedAxiom& e) {
    EXPECT_EQ(e.keyword(), "ObjectMinCardinality");
  }
  EXPECT_THROW(parse_body("TransitiveObjectProperty(:r)"), UnsupportedAxiom);
  EXPECT_THROW(parse_ontology("Ontology(<http://ex/z> Import(<http://ex/y>))"), UnsupportedAxiom);
}

TEST(ParseErrors, UnknownPrefix) {
  EXPECT_THROW(parse_ontology("Ontology(SubClassOf(x:A x:B))"), UnknownPrefix);
}

TEST(RoundTrip, WriteThenParse) {
  auto o = parse_body(R"(
    SubClassOf(:A ObjectSomeValuesFrom(:r :B))
    SubClassOf(ObjectSomeValuesFrom(ObjectInverseOf(:r) owl:Thing) :A)
    DisjointObjectProperties(:r ObjectInverseOf(:s))
    ReflexiveObjectProperty(:r)
    IrreflexiveObjectProperty(:s)
    ObjectPropertyAssertion(:r :a :b)
    DifferentIndividuals(:a :b)
  )");
  EXPECT_EQ(parse_ontology(write_ontology(o)), o);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto r = testkit::random_ontology(rng);
    EXPECT_EQ(parse_ontology(write_ontology(r)), r);
  }
}

TEST(Normalize, AddsTopForAboxOnlySymbols) {
  auto n = normalize_ontology(parse_body("ClassAssertion(:C :a) ObjectPropertyAssertion(:r :a :b)"));
  EXPECT_TRUE(n.tbox.count(ax::ClassInclusion{C("C"), ClassExpr::atomic(top_class())}));
  EXPECT_TRUE(n.tbox.count(ax::PropInclusion{P("r"), PropExpr::direct(top_property())}));
}

TEST(Normalize, SymbolsAlreadyInTboxGetNothing) {
  auto o = parse_body("SubClassOf(:C :D) ClassAssertion(:C :a)");
  EXPECT_EQ(normalize_ontology(o).tbox, o.tbox);
}

TEST(Normalize, Idempotent) {
  auto n = normalize_ontology(parse_body(
      "ClassAssertion(:C :a) DisjointClasses(:C ObjectSomeValuesFrom(:r owl:Thing)) "
      "SubObjectPropertyOf(ObjectInverseOf(:r) :s)"));
  EXPECT_EQ(normalize_ontology(n), n);
  for (const auto& a : n.tbox) EXPECT_TRUE(is_normalized(a)) << to_string(a);
}

TEST(Normalize, DisjointnessOrientedExistentialFirst) {
  auto n = normalize_ontology(parse_body("DisjointClasses(:C ObjectSomeValuesFrom(:r owl:Thing))"));
  ASSERT_EQ(n.tbox.size(), 1u);
  EXPECT_TRUE(n.tbox.count(ax::ClassDisjoint{ClassExpr::exists(P("r")), C("C")}));
}

// Both orientations of c ⊑ ¬∃r must have the same disjointness consequences.
TEST(Normalize, OrientationPreservesDisjointnessConsequences) {
  std::mt19937_64 rng(3);
  testkit::OntologyShape shape{3, 2, 3, 6, 8, 1};
  for (int i = 0; i < 300; ++i) {
    auto base = testkit::random_ontology(rng, shape);
    std::vector<Entity> classes, props;
    for (const auto& a : base.tbox) {
      if (auto* x = std::get_if<ax::ClassInclusion>(&a)) {
        if (x->sub.is_atomic()) classes.push_back(x->sub.cls);
        else props.push_back(x->sub.prop.prop);
      } else if (auto* y = std::get_if<ax::PropInclusion>(&a)) {
        props.push_back(y->sub.prop);
      }
    }
    if (classes.empty() || props.empty()) continue;
    auto c = ClassExpr::atomic(classes[rng() % classes.size()]);
    auto r = ClassExpr::exists(PropExpr{rng() % 2 ? PropKind::Inverse : PropKind::Direct, props[rng() % props.size()]});

    auto told = base;
    told.tbox.insert(ax::ClassDisjoint{c, r});
    auto flipped = base;
    flipped.tbox.insert(ax::ClassDisjoint{r, c});
    auto normalized = normalize_ontology(told);

    auto a = tbox_closure(told).disjoint;
    EXPECT_EQ(a, tbox_closure(flipped).disjoint);
    EXPECT_EQ(a, tbox_closure(normalized).disjoint);
  }
}
