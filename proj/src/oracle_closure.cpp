#include <algorithm>

#include "mser/oracle.hpp"
#include "mser/translator.hpp"

namespace mser {

namespace {

using Pairs = std::map<ClassExpr, std::set<ClassExpr>>;

ClassExpr exists_of(const PropExpr& p) { return ClassExpr::exists(p); }

char kind_letter(const ClassExpr& c) {
  if (c.is_atomic()) return 'C';
  return c.prop.is_inverse() ? 'I' : 'R';
}

std::vector<Term> args_of(const ClassExpr& c, bool as_rhs) {
  if (c.is_atomic()) return {Term::constant(c.cls)};
  if (as_rhs) return {Term::constant(c.prop.prop), Term::constant(c.filler)};
  return {Term::constant(c.prop.prop)};
}

Atom inclusion_atom(const ClassExpr& b, const ClassExpr& x) {
  std::vector<Term> args = args_of(b, false);
  auto r = args_of(x, true);
  args.insert(args.end(), r.begin(), r.end());
  return Atom(std::string("isac") + kind_letter(b) + kind_letter(x), args);
}

Atom disjoint_atom(const ClassExpr& a, const ClassExpr& b) {
  char l = kind_letter(a), k = kind_letter(b);
  if (l == 'C' && k == 'R') return Atom("disjcRC", {args_of(b, false)[0], args_of(a, false)[0]});
  return Atom(std::string("disjc") + l + k, {args_of(a, false)[0], args_of(b, false)[0]});
}

void close_roles(std::set<std::pair<PropExpr, PropExpr>>& roles) {
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::pair<PropExpr, PropExpr>> add;
    for (const auto& [p, q] : roles)
      for (auto it = roles.lower_bound({q, PropExpr{}}); it != roles.end() && it->first == q; ++it)
        if (!roles.count({p, it->second})) add.emplace_back(p, it->second);
    for (auto& e : add) grew |= roles.insert(e).second;
  }
}

// Saturates concept inclusions. Premises and conclusions are (lhs, rhs) pairs:
//   B ⊑ A,       A ⊑ X          ⇒ B ⊑ X
//   B ⊑ ∃P.F,    ∃P ⊑ X         ⇒ B ⊑ X
//   B ⊑ ∃P.F,    F ⊑ G (atomic) ⇒ B ⊑ ∃P.G
//   B ⊑ ∃P.F,    P ⊑ Q          ⇒ B ⊑ ∃Q.F
//   P ⊑ Q,       ∃Q ⊑ X         ⇒ ∃P ⊑ X
void close_inclusions(Pairs& out, const std::set<std::pair<PropExpr, PropExpr>>& roles) {
  std::map<PropExpr, std::vector<PropExpr>> up, down;
  for (const auto& [p, q] : roles) {
    up[p].push_back(q);
    down[q].push_back(p);
  }
  auto succ = [&](const ClassExpr& c) -> const std::set<ClassExpr>* {
    auto it = out.find(c);
    return it == out.end() ? nullptr : &it->second;
  };
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::pair<ClassExpr, ClassExpr>> add;
    for (const auto& [b, xs] : out) {
      for (const auto& x : xs) {
        if (x.is_atomic()) {
          if (auto s = succ(x))
            for (const auto& y : *s) add.emplace_back(b, y);
          continue;
        }
        if (auto s = succ(exists_of(x.prop)))
          for (const auto& y : *s) add.emplace_back(b, y);
        if (auto s = succ(ClassExpr::atomic(x.filler)))
          for (const auto& g : *s)
            if (g.is_atomic()) add.emplace_back(b, ClassExpr::some(x.prop, g.cls));
        if (auto it = up.find(x.prop); it != up.end())
          for (const auto& q : it->second) add.emplace_back(b, ClassExpr::some(q, x.filler));
      }
      if (!b.is_atomic())
        if (auto it = down.find(b.prop); it != down.end())
          for (const auto& p : it->second)
            for (const auto& x : xs) add.emplace_back(exists_of(p), x);
    }
    for (auto& [l, r] : add) grew |= out[l].insert(r).second;
  }
}

// All basic concepts L with L ⊑ b, b excluded.
std::set<ClassExpr> below(const ClassExpr& b, const Pairs& incl,
                          const std::set<std::pair<PropExpr, PropExpr>>& roles) {
  std::set<ClassExpr> out;
  for (const auto& [l, xs] : incl)
    for (const auto& x : xs) {
      if (b.is_atomic() ? x == b : (!x.is_atomic() && x.prop == b.prop)) out.insert(l);
    }
  if (!b.is_atomic())
    for (const auto& [p, q] : roles)
      if (q == b.prop) out.insert(exists_of(p));
  return out;
}

void add_role_disjoint(std::set<std::pair<PropExpr, PropExpr>>& rd, const PropExpr& p, const PropExpr& q) {
  rd.insert({p, q});
  rd.insert({q, p});
  rd.insert({p.inverted(), q.inverted()});
  rd.insert({q.inverted(), p.inverted()});
}

}  // namespace

TBoxClosure tbox_closure(const Ontology& o) {
  TBoxClosure c;
  Pairs incl;
  for (const auto& a : o.tbox) {
    if (auto* ci = std::get_if<ax::ClassInclusion>(&a)) {
      incl[ci->sub].insert(ci->super);
    } else if (auto* pi = std::get_if<ax::PropInclusion>(&a)) {
      c.role_inclusions.insert({pi->sub, pi->super});
      c.role_inclusions.insert({pi->sub.inverted(), pi->super.inverted()});
    } else if (auto* cd = std::get_if<ax::ClassDisjoint>(&a)) {
      c.disjoint.insert({cd->first, cd->second});
      c.disjoint.insert({cd->second, cd->first});
    } else if (auto* pd = std::get_if<ax::PropDisjoint>(&a)) {
      add_role_disjoint(c.role_disjoint, pd->first, pd->second);
    } else if (auto* r = std::get_if<ax::Reflexive>(&a)) {
      c.reflexive.insert(r->prop);
    } else if (auto* ir = std::get_if<ax::Irreflexive>(&a)) {
      c.irreflexive.insert(ir->prop);
    }
  }

  close_roles(c.role_inclusions);
  close_inclusions(incl, c.role_inclusions);
  for (const auto& [l, xs] : incl)
    for (const auto& x : xs) c.inclusions.insert({l, x});

  std::map<ClassExpr, std::set<ClassExpr>> below_cache;
  auto below_of = [&](const ClassExpr& b) -> const std::set<ClassExpr>& {
    auto it = below_cache.find(b);
    if (it == below_cache.end()) it = below_cache.emplace(b, below(b, incl, c.role_inclusions)).first;
    return it->second;
  };
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::pair<ClassExpr, ClassExpr>> add;
    for (const auto& [a, b] : c.disjoint)
      for (const auto& l : below_of(a)) {
        add.emplace_back(l, b);
        add.emplace_back(b, l);
      }
    for (auto& e : add) grew |= c.disjoint.insert(e).second;
  }

  for (bool grew = true; grew;) {
    auto before = c.role_disjoint.size();
    auto snapshot = c.role_disjoint;
    for (const auto& [p, q] : snapshot)
      for (const auto& [sub, super] : c.role_inclusions)
        if (super == p) add_role_disjoint(c.role_disjoint, sub, q);
    grew = c.role_disjoint.size() != before;
  }

  for (bool grew = true; grew;) {
    auto before = c.reflexive.size() + c.irreflexive.size();
    for (const auto& [p, q] : c.role_inclusions) {
      if (c.reflexive.count(p.prop)) c.reflexive.insert(q.prop);
      if (c.irreflexive.count(q.prop)) c.irreflexive.insert(p.prop);
    }
    grew = c.reflexive.size() + c.irreflexive.size() != before;
  }
  return c;
}

std::vector<Atom> TBoxClosure::facts() const {
  std::vector<Atom> out;
  for (const auto& [b, x] : inclusions) out.push_back(inclusion_atom(b, x));
  for (const auto& [p, q] : role_inclusions)
    if (!p.is_inverse())
      out.push_back(Atom(q.is_inverse() ? "isarRI" : "isarRR", {Term::constant(p.prop), Term::constant(q.prop)}));
  for (const auto& [a, b] : disjoint) out.push_back(disjoint_atom(a, b));
  for (const auto& [p, q] : role_disjoint)
    if (!p.is_inverse())
      out.push_back(Atom(q.is_inverse() ? "disjrRI" : "disjrRR", {Term::constant(p.prop), Term::constant(q.prop)}));
  for (const auto& r : reflexive) out.push_back(Atom("refl", {Term::constant(r)}));
  for (const auto& r : irreflexive) out.push_back(Atom("irrefl", {Term::constant(r)}));
  std::sort(out.begin(), out.end(), fact_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mser
