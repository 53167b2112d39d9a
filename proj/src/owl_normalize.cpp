#include <set>
#include <sstream>

#include "mser/ontology.hpp"

namespace mser {

namespace {

Axiom orient(const Axiom& a) {
  if (auto* p = std::get_if<ax::PropInclusion>(&a); p && p->sub.is_inverse())
    return ax::PropInclusion{p->sub.inverted(), p->super.inverted()};
  if (auto* p = std::get_if<ax::PropDisjoint>(&a); p && p->first.is_inverse())
    return ax::PropDisjoint{p->first.inverted(), p->second.inverted()};
  // c ⊑ ¬∃r has no encoding of its own; ∃r ⊑ ¬c says the same thing.
  if (auto* d = std::get_if<ax::ClassDisjoint>(&a);
      d && d->first.is_atomic() && !d->second.is_atomic() && !d->second.prop.is_inverse())
    return ax::ClassDisjoint{d->second, d->first};
  return a;
}

struct TBoxSymbols {
  std::set<Entity> classes, props;

  void cls(const ClassExpr& c) {
    if (c.is_atomic()) {
      classes.insert(c.cls);
    } else {
      props.insert(c.prop.prop);
      classes.insert(c.filler);
    }
  }

  void add(const Axiom& a) {
    if (auto* x = std::get_if<ax::ClassInclusion>(&a)) {
      cls(x->sub);
      cls(x->super);
    } else if (auto* x = std::get_if<ax::ClassDisjoint>(&a)) {
      cls(x->first);
      cls(x->second);
    } else if (auto* x = std::get_if<ax::PropInclusion>(&a)) {
      props.insert(x->sub.prop);
      props.insert(x->super.prop);
    } else if (auto* x = std::get_if<ax::PropDisjoint>(&a)) {
      props.insert(x->first.prop);
      props.insert(x->second.prop);
    } else if (auto* x = std::get_if<ax::Reflexive>(&a)) {
      props.insert(x->prop);
    } else if (auto* x = std::get_if<ax::Irreflexive>(&a)) {
      props.insert(x->prop);
    }
  }
};

}  // namespace

bool is_normalized(const Axiom& a) {
  if (auto* x = std::get_if<ax::ClassInclusion>(&a)) return x->sub.is_basic();
  if (auto* x = std::get_if<ax::PropInclusion>(&a)) return !x->sub.is_inverse();
  if (auto* x = std::get_if<ax::PropDisjoint>(&a)) return !x->first.is_inverse();
  if (auto* x = std::get_if<ax::ClassDisjoint>(&a)) {
    if (!x->first.is_basic() || !x->second.is_basic()) return false;
    return !(x->first.is_atomic() && !x->second.is_atomic() && !x->second.prop.is_inverse());
  }
  return true;
}

Ontology normalize_ontology(Ontology o) {
  std::set<Axiom> tbox;
  TBoxSymbols seen;
  for (const auto& a : o.tbox) {
    auto n = orient(a);
    seen.add(n);
    tbox.insert(std::move(n));
  }
  for (const auto& a : o.abox) {
    if (auto* x = std::get_if<ax::ClassAssertion>(&a); x && !seen.classes.count(x->cls)) {
      tbox.insert(ax::ClassInclusion{ClassExpr::atomic(x->cls), ClassExpr::atomic(top_class())});
      seen.classes.insert(x->cls);
    } else if (auto* x = std::get_if<ax::PropAssertion>(&a); x && !seen.props.count(x->prop)) {
      tbox.insert(ax::PropInclusion{PropExpr::direct(x->prop), PropExpr::direct(top_property())});
      seen.props.insert(x->prop);
    }
  }
  o.tbox = std::move(tbox);
  return o;
}

namespace {

std::string iri(const Entity& e) { return "<" + owl_spelling(e) + ">"; }

std::string prop_text(const PropExpr& p) {
  return p.is_inverse() ? "ObjectInverseOf(" + iri(p.prop) + ")" : iri(p.prop);
}

std::string class_text(const ClassExpr& c) {
  if (c.is_atomic()) return iri(c.cls);
  return "ObjectSomeValuesFrom(" + prop_text(c.prop) + " " + iri(c.filler) + ")";
}

struct Writer {
  std::string operator()(const ax::ClassInclusion& x) const {
    return "SubClassOf(" + class_text(x.sub) + " " + class_text(x.super) + ")";
  }
  std::string operator()(const ax::PropInclusion& x) const {
    return "SubObjectPropertyOf(" + prop_text(x.sub) + " " + prop_text(x.super) + ")";
  }
  std::string operator()(const ax::ClassDisjoint& x) const {
    return "DisjointClasses(" + class_text(x.first) + " " + class_text(x.second) + ")";
  }
  std::string operator()(const ax::PropDisjoint& x) const {
    return "DisjointObjectProperties(" + prop_text(x.first) + " " + prop_text(x.second) + ")";
  }
  std::string operator()(const ax::Reflexive& x) const { return "ReflexiveObjectProperty(" + iri(x.prop) + ")"; }
  std::string operator()(const ax::Irreflexive& x) const {
    return "IrreflexiveObjectProperty(" + iri(x.prop) + ")";
  }
  std::string operator()(const ax::ClassAssertion& x) const {
    return "ClassAssertion(" + iri(x.cls) + " " + iri(x.individual) + ")";
  }
  std::string operator()(const ax::PropAssertion& x) const {
    return "ObjectPropertyAssertion(" + iri(x.prop) + " " + iri(x.subject) + " " + iri(x.object) + ")";
  }
  std::string operator()(const ax::DifferentIndividuals& x) const {
    return "DifferentIndividuals(" + iri(x.first) + " " + iri(x.second) + ")";
  }
};

}  // namespace

std::string write_ontology(const Ontology& o) {
  std::ostringstream os;
  auto std_prefixes = standard_prefixes();
  for (const auto& [name, ns] : o.prefixes)
    if (!std_prefixes.count(name)) os << "Prefix(" << name << ":=<" << ns << ">)\n";
  os << "Ontology(";
  if (!o.iri.empty()) os << "<" << o.iri << ">";
  os << "\n";
  for (const auto& a : o.tbox) os << std::visit(Writer{}, a) << "\n";
  for (const auto& a : o.abox) os << std::visit(Writer{}, a) << "\n";
  os << ")\n";
  return os.str();
}

}  // namespace mser
