#include "mser/rulebase.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mser {

std::string_view family_tag(RuleFamily f) {
  switch (f) {
    case RuleFamily::TBoxChainAtomic: return "TBOX-CHAIN-ATOMIC";
    case RuleFamily::TBoxChainExist: return "TBOX-CHAIN-EXIST";
    case RuleFamily::TBoxFiller: return "TBOX-FILLER";
    case RuleFamily::TBoxRoleLift: return "TBOX-ROLE-LIFT";
    case RuleFamily::RoleTrans: return "ROLE-TRANS";
    case RuleFamily::DisjSym: return "DISJ-SYM";
    case RuleFamily::DisjDown: return "DISJ-DOWN";
    case RuleFamily::ABoxClass: return "ABOX-CLASS";
    case RuleFamily::ABoxRole: return "ABOX-ROLE";
    case RuleFamily::ABoxRefl: return "ABOX-REFL";
    case RuleFamily::AuxNamed: return "AUX-NAMED";
    case RuleFamily::Violation: return "VIOLATION";
  }
  return "?";
}

std::size_t RuleCatalogue::count(RuleFamily f) const {
  return static_cast<std::size_t>(std::count(families.begin(), families.end(), f));
}

Rule canonical_variables(const Rule& r) {
  std::map<std::string, std::string> names;
  auto rename = [&](Atom a) {
    for (auto& t : a.args)
      if (t.is_variable()) {
        auto [it, fresh] = names.try_emplace(t.value, "V" + std::to_string(names.size()));
        t.value = it->second;
      }
    return a;
  };
  Rule out;
  out.head = rename(r.head);
  for (const auto& b : r.body) out.body.push_back(rename(b));
  return out;
}

namespace {

enum class Kind { C, R, I };
constexpr Kind kKinds[] = {Kind::C, Kind::R, Kind::I};
constexpr Kind kExist[] = {Kind::R, Kind::I};

char letter(Kind k) { return k == Kind::C ? 'C' : k == Kind::R ? 'R' : 'I'; }

// Kind of ∃s reached from ∃r through a role inclusion: isarRR keeps the
// direction, isarRI flips it.
Kind flip(Kind k) { return k == Kind::R ? Kind::I : Kind::R; }

Term v(const char* name) { return Term::variable(name); }

// RHS arguments of an inclusion: (class) for C, (prop, filler) otherwise.
std::vector<Term> rhs(Kind k) {
  if (k == Kind::C) return {v("K")};
  return {v("Q"), v("F")};
}

Atom isac(Kind l, Term lhs, Kind k, std::vector<Term> r) {
  std::vector<Term> args{std::move(lhs)};
  args.insert(args.end(), r.begin(), r.end());
  return Atom(std::string("isac") + letter(l) + letter(k), std::move(args));
}

Atom isar(bool inverse, Term a, Term b) { return Atom(inverse ? "isarRI" : "isarRR", {std::move(a), std::move(b)}); }

// Disjointness of two basic concepts; the C/R orientation is stored as R/C.
Atom disj(Kind l, Term a, Kind k, Term b) {
  if (l == Kind::C && k == Kind::R) return Atom("disjcRC", {std::move(b), std::move(a)});
  return Atom(std::string("disjc") + letter(l) + letter(k), {std::move(a), std::move(b)});
}

class Generator {
 public:
  RuleCatalogue build(bool with_violation) {
    chain_atomic();
    chain_exist();
    filler();
    role_lift();
    role_trans();
    disj_sym();
    disj_down();
    abox();
    if (with_violation) violation();
    return std::move(cat_);
  }

 private:
  void add(RuleFamily f, Atom head, std::vector<Atom> body) {
    Rule r{std::move(head), std::move(body)};
    if (!seen_.insert(canonical_variables(r)).second) return;
    cat_.rules.push_back(std::move(r));
    cat_.families.push_back(f);
  }

  // l ⊑ c, c ⊑ k  ⇒  l ⊑ k
  void chain_atomic() {
    for (Kind l : kKinds)
      for (Kind k : kKinds)
        add(RuleFamily::TBoxChainAtomic, isac(l, v("L"), k, rhs(k)),
            {isac(l, v("L"), Kind::C, {v("M")}), isac(Kind::C, v("M"), k, rhs(k))});
  }

  // l ⊑ ∃p.d, ∃p ⊑ k  ⇒  l ⊑ k   (and the ∃p⁻ variant)
  void chain_exist() {
    for (Kind l : kKinds)
      for (Kind m : kExist)
        for (Kind k : kKinds)
          add(RuleFamily::TBoxChainExist, isac(l, v("L"), k, rhs(k)),
              {isac(l, v("L"), m, {v("P"), v("D")}), isac(m, v("P"), k, rhs(k))});
  }

  // l ⊑ ∃p.f, f ⊑ g  ⇒  l ⊑ ∃p.g
  void filler() {
    for (Kind l : kKinds)
      for (Kind m : kExist)
        add(RuleFamily::TBoxFiller, isac(l, v("L"), m, {v("P"), v("G")}),
            {isac(l, v("L"), m, {v("P"), v("F")}), isac(Kind::C, v("F"), Kind::C, {v("G")})});
  }

  void role_lift() {
    // l ⊑ ∃p.f, p ⊑ s  ⇒  l ⊑ ∃s.f
    for (Kind l : kKinds)
      for (Kind m : kExist)
        for (bool inv : {false, true})
          add(RuleFamily::TBoxRoleLift, isac(l, v("L"), inv ? flip(m) : m, {v("S"), v("F")}),
              {isac(l, v("L"), m, {v("P"), v("F")}), isar(inv, v("P"), v("S"))});
    // p ⊑ s, ∃s ⊑ k  ⇒  ∃p ⊑ k
    for (Kind k : kKinds)
      for (Kind m : kExist)
        for (bool inv : {false, true})
          add(RuleFamily::TBoxRoleLift, isac(m, v("P"), k, rhs(k)),
              {isar(inv, v("P"), v("S")), isac(inv ? flip(m) : m, v("S"), k, rhs(k))});
    for (bool inv : {false, true})
      add(RuleFamily::TBoxRoleLift, Atom("refl", {v("S")}), {Atom("refl", {v("P")}), isar(inv, v("P"), v("S"))});
  }

  void role_trans() {
    // r1 ⊑ r2 ⊑ r3; an inverse on either step flips the result.
    for (bool first : {false, true})
      for (bool second : {false, true})
        add(RuleFamily::RoleTrans, isar(first != second, v("P1"), v("P3")),
            {isar(first, v("P1"), v("P2")), isar(second, v("P2"), v("P3"))});
  }

  void disj_sym() {
    for (Kind l : kKinds)
      for (Kind k : kKinds) {
        if ((l == Kind::C && k == Kind::R) || (l == Kind::R && k == Kind::C)) continue;
        add(RuleFamily::DisjSym, disj(k, v("B"), l, v("A")), {disj(l, v("A"), k, v("B"))});
      }
    add(RuleFamily::DisjSym, Atom("disjrRR", {v("S"), v("P")}), {Atom("disjrRR", {v("P"), v("S")})});
    add(RuleFamily::DisjSym, Atom("disjrRI", {v("S"), v("P")}), {Atom("disjrRI", {v("P"), v("S")})});
  }

  // b3 ⊑ b1, b1 disjoint from b2  ⇒  b3 disjoint from b2
  void disj_down() {
    for (Kind l : kKinds)
      for (Kind k : kKinds)
        add(RuleFamily::DisjDown, disj(l, v("L"), k, v("B")),
            {isac(l, v("L"), Kind::C, {v("M")}), disj(Kind::C, v("M"), k, v("B"))});
    for (Kind l : kKinds)
      for (Kind m : kExist)
        for (Kind k : kKinds)
          add(RuleFamily::DisjDown, disj(l, v("L"), k, v("B")),
              {isac(l, v("L"), m, {v("P"), v("D")}), disj(m, v("P"), k, v("B"))});
    for (Kind m : kExist)
      for (bool inv : {false, true})
        for (Kind k : kKinds)
          add(RuleFamily::DisjDown, disj(m, v("P"), k, v("B")),
              {isar(inv, v("P"), v("S")), disj(inv ? flip(m) : m, v("S"), k, v("B"))});
    // role disjointness: p ⊑ s, s disjoint from q  ⇒  p disjoint from q
    for (bool inv : {false, true})
      for (bool target_inv : {false, true})
        add(RuleFamily::DisjDown, Atom(inv != target_inv ? "disjrRI" : "disjrRR", {v("P"), v("Q")}),
            {isar(inv, v("P"), v("S")), Atom(target_inv ? "disjrRI" : "disjrRR", {v("S"), v("Q")})});
    for (bool inv : {false, true})
      add(RuleFamily::DisjDown, Atom("irrefl", {v("P")}), {isar(inv, v("P"), v("S")), Atom("irrefl", {v("S")})});
  }

  void abox() {
    add(RuleFamily::ABoxClass, Atom("instc", {v("C2"), v("X")}),
        {Atom("instc", {v("C1"), v("X")}), isac(Kind::C, v("C1"), Kind::C, {v("C2")})});
    add(RuleFamily::ABoxClass, Atom("instc", {v("C"), v("X")}),
        {Atom("instr", {v("R"), v("X"), v("Y")}), isac(Kind::R, v("R"), Kind::C, {v("C")})});
    add(RuleFamily::ABoxClass, Atom("instc", {v("C"), v("Y")}),
        {Atom("instr", {v("R"), v("X"), v("Y")}), isac(Kind::I, v("R"), Kind::C, {v("C")})});

    add(RuleFamily::ABoxRole, Atom("instr", {v("S"), v("X"), v("Y")}),
        {Atom("instr", {v("R"), v("X"), v("Y")}), isar(false, v("R"), v("S"))});
    add(RuleFamily::ABoxRole, Atom("instr", {v("S"), v("Y"), v("X")}),
        {Atom("instr", {v("R"), v("X"), v("Y")}), isar(true, v("R"), v("S"))});

    add(RuleFamily::AuxNamed, Atom("named", {v("X")}), {Atom("instc", {v("C"), v("X")})});
    add(RuleFamily::AuxNamed, Atom("named", {v("X")}), {Atom("instr", {v("R"), v("X"), v("Y")})});
    add(RuleFamily::AuxNamed, Atom("named", {v("Y")}), {Atom("instr", {v("R"), v("X"), v("Y")})});
    add(RuleFamily::AuxNamed, Atom("named", {v("X")}), {Atom("diff", {v("X"), v("Y")})});
    add(RuleFamily::AuxNamed, Atom("named", {v("Y")}), {Atom("diff", {v("X"), v("Y")})});
    add(RuleFamily::AuxNamed, Atom("instc", {Term::constant(top_class()), v("X")}), {Atom("named", {v("X")})});

    add(RuleFamily::ABoxRefl, Atom("instr", {v("R"), v("X"), v("X")}),
        {Atom("refl", {v("R")}), Atom("named", {v("X")})});
  }

  // Membership of X in a basic concept of the given kind named by `name`.
  static Atom member(Kind k, const char* name, const char* witness) {
    switch (k) {
      case Kind::C: return Atom("instc", {v(name), v("X")});
      case Kind::R: return Atom("instr", {v(name), v("X"), v(witness)});
      default: return Atom("instr", {v(name), v(witness), v("X")});
    }
  }

  void violation() {
    const Atom head("violation", {});
    for (Kind l : kKinds)
      for (Kind k : kKinds) {
        if (l == Kind::C && k == Kind::R) continue;
        add(RuleFamily::Violation, head,
            {member(l, "A", "Y1"), member(k, "B", "Y2"), disj(l, v("A"), k, v("B"))});
      }
    add(RuleFamily::Violation, head,
        {Atom("instr", {v("R"), v("X"), v("Y")}), Atom("instr", {v("S"), v("X"), v("Y")}),
         Atom("disjrRR", {v("R"), v("S")})});
    add(RuleFamily::Violation, head,
        {Atom("instr", {v("R"), v("X"), v("Y")}), Atom("instr", {v("S"), v("Y"), v("X")}),
         Atom("disjrRI", {v("R"), v("S")})});
    add(RuleFamily::Violation, head, {Atom("instr", {v("R"), v("X"), v("X")}), Atom("irrefl", {v("R")})});
  }

  RuleCatalogue cat_;
  std::set<Rule> seen_;
};

}  // namespace

const RuleCatalogue& builtin_rules(bool with_violation) {
  static const RuleCatalogue plain = Generator().build(false);
  static const RuleCatalogue full = Generator().build(true);
  return with_violation ? full : plain;
}

}  // namespace mser
