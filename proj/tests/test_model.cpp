#include <gtest/gtest.h>

#include "mser/model.hpp"

using namespace mser;

TEST(Intern, ExpandsPrefixedName) {
  PrefixMap p{{"ub", "http://ex/u#"}};
  EXPECT_EQ(intern("ub:Professor", p).iri, "http://ex/u#Professor");
}

TEST(Intern, FullIriIsIdentity) {
  EXPECT_EQ(intern("<http://ex/a>", {}).iri, "http://ex/a");
}

TEST(Intern, DefaultPrefix) {
  PrefixMap p{{"", "http://ex/z#"}};
  EXPECT_EQ(intern(":GoldenEagle", p).iri, "http://ex/z#GoldenEagle");
}

TEST(Intern, Idempotent) {
  PrefixMap p{{"ub", "http://ex/u#"}};
  auto once = intern("ub:Professor", p);
  EXPECT_EQ(intern("<" + once.iri + ">", p), once);
}

TEST(Intern, UnknownPrefix) {
  try {
    intern("nope:x", {});
    FAIL();
  } catch (const UnknownPrefix& e) {
    EXPECT_EQ(e.prefix(), "nope");
  }
}

TEST(Entity, RejectsEmptyAndWhitespace) {
  EXPECT_THROW(Entity(""), Error);
  EXPECT_THROW(Entity("http://ex/a b"), Error);
}

TEST(Entity, OwlTopAndBottomAreReserved) {
  EXPECT_EQ(canonical_entity(std::string(vocab::kOwl) + "Thing"), top_class());
  EXPECT_EQ(canonical_entity(std::string(vocab::kOwl) + "Nothing"), bottom_class());
  EXPECT_EQ(canonical_entity(std::string(vocab::kOwl) + "topObjectProperty"), top_property());
  EXPECT_EQ(canonical_entity(std::string(vocab::kOwl) + "bottomObjectProperty"), bottom_property());
  EXPECT_EQ(owl_spelling(top_class()), std::string(vocab::kOwl) + "Thing");
  EXPECT_EQ(canonical_entity("http://ex/a").iri, "http://ex/a");
}

TEST(PropExpr, DoubleInverseCancels) {
  auto r = PropExpr::direct(Entity("http://ex/r"));
  EXPECT_EQ(r.inverted().inverted(), r);
  EXPECT_TRUE(r.inverted().is_inverse());
}

TEST(Atom, ArityChecked) {
  auto c = Term::constant(std::string("http://ex/a"));
  EXPECT_NO_THROW(Atom("instc", {c, c}));
  EXPECT_THROW(Atom("instc", {c}), ArityMismatch);
  EXPECT_THROW(Atom("isacCR", {c, c}), ArityMismatch);
  EXPECT_NO_THROW(Atom("anything", {c}));
}

TEST(Signature, TwentySixPredicates) {
  const auto& sig = encoding_signature();
  ASSERT_EQ(sig.size(), 26u);
  EXPECT_EQ(builtin_arity("isacCI"), 3u);
  EXPECT_EQ(builtin_arity("isacRC"), 2u);
  EXPECT_EQ(builtin_arity("refl"), 1u);
  EXPECT_EQ(builtin_arity("named"), 1u);
  EXPECT_EQ(builtin_arity("violation"), 0u);
  EXPECT_FALSE(builtin_arity("disjcCR").has_value());
}

TEST(Rule, Safety) {
  auto X = Term::variable("X"), Y = Term::variable("Y");
  auto c = Term::constant(std::string("http://ex/c"));
  EXPECT_TRUE(is_safe(Rule{Atom("instc", {c, X}), {Atom("instc", {X, Y})}}));
  EXPECT_FALSE(is_safe(Rule{Atom("instc", {c, Y}), {Atom("named", {X})}}));
  EXPECT_TRUE(is_safe(Rule{Atom("instc", {c, c}), {}}));
  EXPECT_FALSE(is_safe(Rule{Atom("instc", {c, X}), {}}));
}

TEST(Query, CheckQuery) {
  auto X = Term::variable("X");
  auto c = Term::constant(std::string("http://ex/c"));
  EXPECT_NO_THROW(check_query({{"X"}, {Atom("instc", {c, X})}}));
  EXPECT_THROW(check_query({{"Y"}, {Atom("instc", {c, X})}}), UnsafeQuery);
  EXPECT_THROW(check_query({{}, {}}), UnsafeQuery);
}
