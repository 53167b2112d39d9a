#include "mser/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mser {

Entity::Entity(std::string full_iri) : iri(std::move(full_iri)) {
  if (iri.empty()) throw Error("empty IRI");
  if (std::any_of(iri.begin(), iri.end(),
                  [](unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }))
    throw Error("IRI contains whitespace: '" + iri + "'");
}

const Entity& top_class() {
  static const Entity e{std::string(vocab::kTopClass)};
  return e;
}
const Entity& bottom_class() {
  static const Entity e{std::string(vocab::kBottomClass)};
  return e;
}
const Entity& top_property() {
  static const Entity e{std::string(vocab::kTopProperty)};
  return e;
}
const Entity& bottom_property() {
  static const Entity e{std::string(vocab::kBottomProperty)};
  return e;
}

namespace {
struct Reserved {
  std::string_view local;
  const Entity& (*entity)();
};
constexpr Reserved kReserved[] = {
    {"Thing", &top_class},
    {"Nothing", &bottom_class},
    {"topObjectProperty", &top_property},
    {"bottomObjectProperty", &bottom_property},
};
}  // namespace

Entity canonical_entity(std::string full_iri) {
  std::string_view v(full_iri);
  if (v.starts_with(vocab::kOwl)) {
    auto local = v.substr(vocab::kOwl.size());
    for (const auto& r : kReserved)
      if (local == r.local) return r.entity();
  }
  return Entity(std::move(full_iri));
}

std::string owl_spelling(const Entity& e) {
  for (const auto& r : kReserved)
    if (e == r.entity()) return std::string(vocab::kOwl) + std::string(r.local);
  return e.iri;
}

PrefixMap standard_prefixes() {
  return {{"rdf", std::string(vocab::kRdf)},
          {"rdfs", std::string(vocab::kRdfs)},
          {"owl", std::string(vocab::kOwl)},
          {"xsd", std::string(vocab::kXsd)}};
}

Entity intern(std::string_view text, const PrefixMap& prefixes) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>')
    return canonical_entity(std::string(text.substr(1, text.size() - 2)));
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("not an IRI or prefixed name: '" + std::string(text) + "'");
  auto prefix = text.substr(0, colon);
  auto it = prefixes.find(prefix);
  if (it == prefixes.end()) throw UnknownPrefix(std::string(prefix));
  return canonical_entity(it->second + std::string(text.substr(colon + 1)));
}

ClassExpr ClassExpr::atomic(Entity c) {
  ClassExpr e;
  e.kind = ClassKind::Atomic;
  e.cls = std::move(c);
  return e;
}

ClassExpr ClassExpr::some(PropExpr p, Entity filler) {
  ClassExpr e;
  e.kind = ClassKind::Some;
  e.prop = std::move(p);
  e.filler = std::move(filler);
  return e;
}

bool is_abox(const Axiom& a) {
  return std::holds_alternative<ax::ClassAssertion>(a) ||
         std::holds_alternative<ax::PropAssertion>(a) ||
         std::holds_alternative<ax::DifferentIndividuals>(a);
}

std::string to_string(const PropExpr& p) {
  return p.is_inverse() ? "inv(" + p.prop.iri + ")" : p.prop.iri;
}

std::string to_string(const ClassExpr& c) {
  if (c.is_atomic()) return c.cls.iri;
  if (c.is_unqualified()) return "some(" + to_string(c.prop) + ")";
  return "some(" + to_string(c.prop) + ", " + c.filler.iri + ")";
}

std::string to_string(const Axiom& a) {
  struct V {
    std::string operator()(const ax::ClassInclusion& x) const {
      return to_string(x.sub) + " SubClassOf " + to_string(x.super);
    }
    std::string operator()(const ax::PropInclusion& x) const {
      return to_string(x.sub) + " SubPropertyOf " + to_string(x.super);
    }
    std::string operator()(const ax::ClassDisjoint& x) const {
      return to_string(x.first) + " DisjointWith " + to_string(x.second);
    }
    std::string operator()(const ax::PropDisjoint& x) const {
      return to_string(x.first) + " PropertyDisjointWith " + to_string(x.second);
    }
    std::string operator()(const ax::Reflexive& x) const { return "Reflexive(" + x.prop.iri + ")"; }
    std::string operator()(const ax::Irreflexive& x) const { return "Irreflexive(" + x.prop.iri + ")"; }
    std::string operator()(const ax::ClassAssertion& x) const {
      return x.cls.iri + "(" + x.individual.iri + ")";
    }
    std::string operator()(const ax::PropAssertion& x) const {
      return x.prop.iri + "(" + x.subject.iri + ", " + x.object.iri + ")";
    }
    std::string operator()(const ax::DifferentIndividuals& x) const {
      return x.first.iri + " != " + x.second.iri;
    }
  };
  return std::visit(V{}, a);
}

const std::vector<PredicateInfo>& encoding_signature() {
  static const std::vector<PredicateInfo> sig = {
      {pred::isacCC, 2}, {pred::isacCI, 3}, {pred::isacRR, 3}, {pred::isacIC, 2},
      {pred::isacIR, 3}, {pred::isacII, 3}, {pred::isarRR, 2}, {pred::isarRI, 2},
      {pred::isacCR, 3}, {pred::isacRC, 2}, {pred::isacRI, 3}, {pred::refl, 1},
      {pred::disjrRR, 2}, {pred::disjcCC, 2}, {pred::disjcCI, 2}, {pred::disjcRC, 2},
      {pred::disjcRR, 2}, {pred::disjcRI, 2}, {pred::disjcIC, 2}, {pred::disjcIR, 2},
      {pred::disjcII, 2}, {pred::disjrRI, 2}, {pred::irrefl, 1}, {pred::instc, 2},
      {pred::instr, 3}, {pred::diff, 2},
  };
  return sig;
}

std::optional<std::size_t> builtin_arity(std::string_view name) {
  for (const auto& p : encoding_signature())
    if (p.name == name) return p.arity;
  if (name == pred::named) return 1;
  if (name == pred::violation) return 0;
  return std::nullopt;
}

Atom::Atom(std::string p, std::vector<Term> a) : pred(std::move(p)), args(std::move(a)) {
  if (pred.empty()) throw Error("empty predicate name");
  if (auto n = builtin_arity(pred); n && *n != args.size()) {
    std::ostringstream os;
    os << "predicate " << pred << " has arity " << *n << ", got " << args.size() << " arguments";
    throw ArityMismatch(os.str());
  }
}

bool Atom::is_ground() const {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

std::vector<std::string> variables_of(const std::vector<Atom>& atoms) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& a : atoms)
    for (const auto& t : a.args)
      if (t.is_variable() && seen.insert(t.value).second) out.push_back(t.value);
  return out;
}

bool is_safe(const Rule& r) {
  if (r.is_fact()) return r.head.is_ground();
  auto vars = variables_of(r.body);
  std::set<std::string> bound(vars.begin(), vars.end());
  for (const auto& t : r.head.args)
    if (t.is_variable() && !bound.count(t.value)) return false;
  return true;
}

void check_query(const ConjunctiveQuery& q) {
  if (q.body.empty()) throw UnsafeQuery("query body is empty");
  auto vars = variables_of(q.body);
  for (const auto& v : q.answer_vars)
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw UnsafeQuery("answer variable " + v + " does not occur in the query body");
}

}  // namespace mser
