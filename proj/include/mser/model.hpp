#pragma once

// Shared abstract syntax: entities, OWL 2 QL expressions and axioms, the
// fixed Datalog signature, and conjunctive queries.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mser {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPrefix : public Error {
 public:
  explicit UnknownPrefix(const std::string& prefix)
      : Error("unknown prefix '" + prefix + ":'"), prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A name denoting a class, an object property, an individual, or any mix of
/// the three. Identity is byte equality of the expanded IRI.
struct Entity {
  std::string iri;

  Entity() = default;
  explicit Entity(std::string full_iri);

  auto operator<=>(const Entity&) const = default;
};

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

// Internal names of the top/bottom symbols. OWL spellings are mapped onto
// these by both frontends.
inline constexpr std::string_view kTopClass = "urn:mser:top-class";
inline constexpr std::string_view kBottomClass = "urn:mser:bottom-class";
inline constexpr std::string_view kTopProperty = "urn:mser:top-property";
inline constexpr std::string_view kBottomProperty = "urn:mser:bottom-property";
}  // namespace vocab

const Entity& top_class();
const Entity& bottom_class();
const Entity& top_property();
const Entity& bottom_property();

/// Maps owl:Thing, owl:Nothing, owl:topObjectProperty and
/// owl:bottomObjectProperty onto the reserved entities; other IRIs pass through.
Entity canonical_entity(std::string full_iri);

/// Inverse of canonical_entity for output in OWL syntaxes.
std::string owl_spelling(const Entity& e);

using PrefixMap = std::map<std::string, std::string, std::less<>>;

/// rdf, rdfs, owl and xsd.
PrefixMap standard_prefixes();

/// Expands "<iri>", "pfx:local" or ":local" to an Entity.
Entity intern(std::string_view iri_or_prefixed, const PrefixMap& prefixes);

enum class PropKind { Direct, Inverse };

struct PropExpr {
  PropKind kind = PropKind::Direct;
  Entity prop;

  static PropExpr direct(Entity p) { return {PropKind::Direct, std::move(p)}; }
  static PropExpr inverse(Entity p) { return {PropKind::Inverse, std::move(p)}; }

  bool is_inverse() const { return kind == PropKind::Inverse; }
  PropExpr inverted() const {
    return {is_inverse() ? PropKind::Direct : PropKind::Inverse, prop};
  }

  auto operator<=>(const PropExpr&) const = default;
};

enum class ClassKind { Atomic, Some };

/// Atomic class or ObjectSomeValuesFrom(prop, filler) with an atomic filler.
/// An unqualified existential has filler top_class().
struct ClassExpr {
  ClassKind kind = ClassKind::Atomic;
  Entity cls;  // Atomic only
  PropExpr prop;  // Some only
  Entity filler;  // Some only

  static ClassExpr atomic(Entity c);
  static ClassExpr some(PropExpr p, Entity filler);
  static ClassExpr exists(PropExpr p) { return some(std::move(p), top_class()); }

  bool is_atomic() const { return kind == ClassKind::Atomic; }
  bool is_unqualified() const { return kind == ClassKind::Some && filler == top_class(); }
  /// Atomic, ∃r or ∃r⁻.
  bool is_basic() const { return is_atomic() || is_unqualified(); }

  auto operator<=>(const ClassExpr&) const = default;
};

namespace ax {
struct ClassInclusion {
  ClassExpr sub, super;
  auto operator<=>(const ClassInclusion&) const = default;
};
struct PropInclusion {
  PropExpr sub, super;
  auto operator<=>(const PropInclusion&) const = default;
};
/// first ⊑ ¬second
struct ClassDisjoint {
  ClassExpr first, second;
  auto operator<=>(const ClassDisjoint&) const = default;
};
/// first ⊑ ¬second
struct PropDisjoint {
  PropExpr first, second;
  auto operator<=>(const PropDisjoint&) const = default;
};
struct Reflexive {
  Entity prop;
  auto operator<=>(const Reflexive&) const = default;
};
struct Irreflexive {
  Entity prop;
  auto operator<=>(const Irreflexive&) const = default;
};
struct ClassAssertion {
  Entity cls, individual;
  auto operator<=>(const ClassAssertion&) const = default;
};
struct PropAssertion {
  Entity prop, subject, object;
  auto operator<=>(const PropAssertion&) const = default;
};
struct DifferentIndividuals {
  Entity first, second;
  auto operator<=>(const DifferentIndividuals&) const = default;
};
}  // namespace ax

using Axiom = std::variant<ax::ClassInclusion, ax::PropInclusion, ax::ClassDisjoint,
                           ax::PropDisjoint, ax::Reflexive, ax::Irreflexive,
                           ax::ClassAssertion, ax::PropAssertion, ax::DifferentIndividuals>;

bool is_abox(const Axiom& a);

std::string to_string(const PropExpr& p);
std::string to_string(const ClassExpr& c);
std::string to_string(const Axiom& a);

// ---------------------------------------------------------------------------
// Datalog layer

/// Predicate names of the fixed signature.
namespace pred {
inline constexpr std::string_view isacCC = "isacCC", isacCI = "isacCI", isacCR = "isacCR";
inline constexpr std::string_view isacRC = "isacRC", isacRR = "isacRR", isacRI = "isacRI";
inline constexpr std::string_view isacIC = "isacIC", isacIR = "isacIR", isacII = "isacII";
inline constexpr std::string_view isarRR = "isarRR", isarRI = "isarRI";
inline constexpr std::string_view refl = "refl", irrefl = "irrefl";
inline constexpr std::string_view disjrRR = "disjrRR", disjrRI = "disjrRI";
inline constexpr std::string_view disjcCC = "disjcCC", disjcCI = "disjcCI";
inline constexpr std::string_view disjcRC = "disjcRC", disjcRR = "disjcRR", disjcRI = "disjcRI";
inline constexpr std::string_view disjcIC = "disjcIC", disjcIR = "disjcIR", disjcII = "disjcII";
inline constexpr std::string_view instc = "instc", instr = "instr", diff = "diff";
inline constexpr std::string_view named = "named", violation = "violation";
}  // namespace pred

struct PredicateInfo {
  std::string_view name;
  std::size_t arity;
};

/// The 26 predicates produced by the axiom encoding, in a fixed order.
const std::vector<PredicateInfo>& encoding_signature();

/// Arity of a predicate of the fixed signature or of the auxiliaries
/// named/1 and violation/0; nullopt for anything else.
std::optional<std::size_t> builtin_arity(std::string_view name);

struct Term {
  enum class Kind { Constant, Variable };
  Kind kind = Kind::Constant;
  std::string value;  // IRI for constants, name for variables

  static Term constant(std::string iri) { return {Kind::Constant, std::move(iri)}; }
  static Term constant(const Entity& e) { return {Kind::Constant, e.iri}; }
  static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_constant() const { return kind == Kind::Constant; }

  auto operator<=>(const Term&) const = default;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  Atom() = default;
  /// Checks the arity against the builtin signature when the predicate is
  /// part of it; auxiliary predicates take any arity.
  Atom(std::string pred, std::vector<Term> args);

  bool is_ground() const;
  auto operator<=>(const Atom&) const = default;
};

struct Rule {
  Atom head;
  std::vector<Atom> body;

  bool is_fact() const { return body.empty(); }
  auto operator<=>(const Rule&) const = default;
};

/// Every head variable occurs in the body; facts are ground.
bool is_safe(const Rule& r);

/// Variables in first-occurrence order.
std::vector<std::string> variables_of(const std::vector<Atom>& atoms);

struct ConjunctiveQuery {
  std::vector<std::string> answer_vars;
  std::vector<Atom> body;
};

class UnsafeQuery : public Error {
 public:
  using Error::Error;
};

/// Throws UnsafeQuery unless the body is non-empty and covers answer_vars.
void check_query(const ConjunctiveQuery& q);

}  // namespace mser
