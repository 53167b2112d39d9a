#include "mser/translator.hpp"

#include <algorithm>

namespace mser {

NonNormalizedAxiom::NonNormalizedAxiom(const Axiom& a)
    : Error("axiom is not in normalized form: " + to_string(a)) {}

std::vector<Atom> FactBase::all() const {
  std::vector<Atom> out = tbox_facts;
  out.insert(out.end(), abox_facts.begin(), abox_facts.end());
  return out;
}

namespace {

char kind_of(const ClassExpr& c) {
  if (c.is_atomic()) return 'C';
  return c.prop.is_inverse() ? 'I' : 'R';
}

// The single argument naming a basic concept: the class, or the property of ∃r / ∃r⁻.
const Entity& basic_arg(const ClassExpr& c) { return c.is_atomic() ? c.cls : c.prop.prop; }

Term k(const Entity& e) { return Term::constant(e); }

struct Encoder {
  const Axiom& whole;

  Atom operator()(const ax::ClassInclusion& x) const {
    if (!x.sub.is_basic()) throw NonNormalizedAxiom(whole);
    std::string p = std::string("isac") + kind_of(x.sub) + kind_of(x.super);
    std::vector<Term> args{k(basic_arg(x.sub))};
    if (x.super.is_atomic()) {
      args.push_back(k(x.super.cls));
    } else {
      args.push_back(k(x.super.prop.prop));
      args.push_back(k(x.super.filler));
    }
    return Atom(std::move(p), std::move(args));
  }
  Atom operator()(const ax::PropInclusion& x) const {
    if (x.sub.is_inverse()) throw NonNormalizedAxiom(whole);
    return Atom(x.super.is_inverse() ? "isarRI" : "isarRR", {k(x.sub.prop), k(x.super.prop)});
  }
  Atom operator()(const ax::ClassDisjoint& x) const {
    if (!is_normalized(whole)) throw NonNormalizedAxiom(whole);
    std::string p = std::string("disjc") + kind_of(x.first) + kind_of(x.second);
    return Atom(std::move(p), {k(basic_arg(x.first)), k(basic_arg(x.second))});
  }
  Atom operator()(const ax::PropDisjoint& x) const {
    if (x.first.is_inverse()) throw NonNormalizedAxiom(whole);
    return Atom(x.second.is_inverse() ? "disjrRI" : "disjrRR", {k(x.first.prop), k(x.second.prop)});
  }
  Atom operator()(const ax::Reflexive& x) const { return Atom("refl", {k(x.prop)}); }
  Atom operator()(const ax::Irreflexive& x) const { return Atom("irrefl", {k(x.prop)}); }
  Atom operator()(const ax::ClassAssertion& x) const { return Atom("instc", {k(x.cls), k(x.individual)}); }
  Atom operator()(const ax::PropAssertion& x) const {
    return Atom("instr", {k(x.prop), k(x.subject), k(x.object)});
  }
  Atom operator()(const ax::DifferentIndividuals& x) const {
    return Atom("diff", {k(x.first), k(x.second)});
  }
};

ClassExpr basic_of(char kind, const Entity& e) {
  switch (kind) {
    case 'C': return ClassExpr::atomic(e);
    case 'R': return ClassExpr::exists(PropExpr::direct(e));
    default: return ClassExpr::exists(PropExpr::inverse(e));
  }
}

}  // namespace

Atom tau(const Axiom& axiom) { return std::visit(Encoder{axiom}, axiom); }

Axiom untau(const Atom& f) {
  if (!f.is_ground()) throw Error("cannot decode a non-ground atom");
  auto sig = encoding_signature();
  if (std::none_of(sig.begin(), sig.end(), [&](const PredicateInfo& i) { return i.name == f.pred; }))
    throw Error("predicate " + f.pred + " does not encode an axiom");
  std::vector<Entity> a;
  for (const auto& t : f.args) a.emplace_back(t.value);
  const auto& p = f.pred;
  if (p.size() == 6 && p.starts_with("isac")) {
    char l = p[4], r = p[5];
    auto sub = basic_of(l, a[0]);
    ClassExpr super = r == 'C' ? ClassExpr::atomic(a[1])
                               : ClassExpr::some(r == 'R' ? PropExpr::direct(a[1]) : PropExpr::inverse(a[1]), a[2]);
    return ax::ClassInclusion{sub, super};
  }
  if (p == pred::isarRR) return ax::PropInclusion{PropExpr::direct(a[0]), PropExpr::direct(a[1])};
  if (p == pred::isarRI) return ax::PropInclusion{PropExpr::direct(a[0]), PropExpr::inverse(a[1])};
  if (p.size() == 7 && p.starts_with("disjc")) return ax::ClassDisjoint{basic_of(p[5], a[0]), basic_of(p[6], a[1])};
  if (p == pred::disjrRR) return ax::PropDisjoint{PropExpr::direct(a[0]), PropExpr::direct(a[1])};
  if (p == pred::disjrRI) return ax::PropDisjoint{PropExpr::direct(a[0]), PropExpr::inverse(a[1])};
  if (p == pred::refl) return ax::Reflexive{a[0]};
  if (p == pred::irrefl) return ax::Irreflexive{a[0]};
  if (p == pred::instc) return ax::ClassAssertion{a[0], a[1]};
  if (p == pred::instr) return ax::PropAssertion{a[0], a[1], a[2]};
  if (p == pred::diff) return ax::DifferentIndividuals{a[0], a[1]};
  throw Error("predicate " + p + " does not encode an axiom");
}

bool fact_less(const Atom& a, const Atom& b) {
  if (a.pred != b.pred) return a.pred < b.pred;
  return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(),
                                      [](const Term& x, const Term& y) { return x.value < y.value; });
}

FactBase translate_ontology(const Ontology& o) {
  FactBase fb;
  for (const auto& a : o.tbox) fb.tbox_facts.push_back(tau(a));
  for (const auto& a : o.abox) fb.abox_facts.push_back(tau(a));
  for (auto* v : {&fb.tbox_facts, &fb.abox_facts}) {
    std::sort(v->begin(), v->end(), fact_less);
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return fb;
}

}  // namespace mser
