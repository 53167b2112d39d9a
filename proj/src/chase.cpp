#include <algorithm>
#include <functional>

#include "mser/oracle.hpp"
#include "mser/translator.hpp"

namespace mser {

std::string null_label(std::size_t k) { return "_:null" + std::to_string(k); }

namespace {

struct Existential {
  ClassExpr lhs;
  PropExpr prop;
  Entity filler;
};

class Chaser {
 public:
  Chaser(const Ontology& o, std::size_t max_depth) : o_(o), max_depth_(max_depth) {}

  CanonicalModel run() {
    std::set<std::string> named;
    for (const auto& a : o_.abox) {
      if (auto* ca = std::get_if<ax::ClassAssertion>(&a)) {
        named.insert(ca->individual.iri);
      } else if (auto* pa = std::get_if<ax::PropAssertion>(&a)) {
        named.insert(pa->subject.iri);
        named.insert(pa->object.iri);
      } else if (auto* d = std::get_if<ax::DifferentIndividuals>(&a)) {
        named.insert(d->first.iri);
        named.insert(d->second.iri);
      }
    }
    for (const auto& n : named) add_element(n, 0, 0, 0);
    m_.named = std::move(named);

    for (const auto& a : o_.abox) {
      if (auto* ca = std::get_if<ax::ClassAssertion>(&a)) add_member(ca->cls.iri, ca->individual.iri);
      else if (auto* pa = std::get_if<ax::PropAssertion>(&a))
        add_edge(PropExpr::direct(pa->prop), pa->subject.iri, pa->object.iri);
    }
    for (const auto& a : o_.tbox)
      if (auto* ci = std::get_if<ax::ClassInclusion>(&a); ci && !ci->super.is_atomic())
        exist_.push_back({ci->sub, ci->super.prop, ci->super.filler});

    while (changed_) {
      changed_ = false;
      for (std::size_t e = 0; e < m_.elements.size(); ++e) apply_positive(m_.elements[e]);
      // one generation of nulls per pass keeps creation order breadth-first
      std::size_t n = m_.elements.size();
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t i = 0; i < exist_.size(); ++i) fire(e, i);
    }
    return std::move(m_);
  }

 private:
  void add_element(const std::string& name, std::size_t parent, std::size_t axiom, std::size_t depth) {
    m_.elements.push_back(name);
    parent_.push_back(parent);
    axiom_.push_back(axiom);
    depth_.push_back(depth);
    m_.depth = std::max(m_.depth, depth);
    add_member(std::string(vocab::kTopClass), name);
    changed_ = true;
  }

  void add_member(const std::string& cls, const std::string& e) {
    if (m_.class_ext[cls].insert(e).second) changed_ = true;
  }

  void add_edge(const PropExpr& p, const std::string& s, const std::string& o) {
    auto edge = p.is_inverse() ? std::make_pair(o, s) : std::make_pair(s, o);
    if (m_.prop_ext[p.prop.iri].insert(edge).second) {
      changed_ = true;
      dom_[p.prop.iri].insert(edge.first);
      rng_[p.prop.iri].insert(edge.second);
    }
  }

  bool member(const ClassExpr& b, const std::string& e) const {
    if (b.is_atomic()) {
      auto it = m_.class_ext.find(b.cls.iri);
      return it != m_.class_ext.end() && it->second.count(e);
    }
    const auto& side = b.prop.is_inverse() ? rng_ : dom_;
    auto it = side.find(b.prop.prop.iri);
    return it != side.end() && it->second.count(e);
  }

  void apply_positive(const std::string& e) {
    for (const auto& a : o_.tbox) {
      if (auto* ci = std::get_if<ax::ClassInclusion>(&a)) {
        if (ci->super.is_atomic() && member(ci->sub, e)) add_member(ci->super.cls.iri, e);
      } else if (auto* r = std::get_if<ax::Reflexive>(&a)) {
        add_edge(PropExpr::direct(r->prop), e, e);
      } else if (auto* pi = std::get_if<ax::PropInclusion>(&a)) {
        // edges leaving e in the sub-property, read in its own direction
        auto it = m_.prop_ext.find(pi->sub.prop.iri);
        if (it == m_.prop_ext.end()) continue;
        std::vector<std::pair<std::string, std::string>> found;
        for (auto p = it->second.lower_bound({e, ""}); p != it->second.end() && p->first == e; ++p)
          found.push_back(*p);
        for (const auto& [s, o] : found) {
          // sub(s,o) as written; sub⁻ reads it backwards
          auto [x, y] = pi->sub.is_inverse() ? std::make_pair(o, s) : std::make_pair(s, o);
          add_edge(pi->super, x, y);
        }
      }
    }
  }

  void fire(std::size_t e, std::size_t i) {
    const auto& ex = exist_[i];
    const std::string name = m_.elements[e];
    if (!member(ex.lhs, name) || !fired_.insert({e, i}).second) return;
    // A null re-created by the same axiom below itself has an isomorphic
    // subtree, so the chase would never stop.
    for (std::size_t a = e; m_.is_null(m_.elements[a]); a = parent_[a])
      if (axiom_[a] == i) throw CyclicTBox("existential dependency cycle through " + to_string(ClassExpr::some(ex.prop, ex.filler)));
    std::size_t depth = depth_[e] + 1;
    if (depth > max_depth_) throw CyclicTBox("chase exceeded depth " + std::to_string(max_depth_));
    std::string n = null_label(++nulls_);
    add_element(n, e, i, depth);
    add_edge(ex.prop, name, n);
    add_member(ex.filler.iri, n);
  }

  const Ontology& o_;
  std::size_t max_depth_;
  CanonicalModel m_;
  std::vector<Existential> exist_;
  std::vector<std::size_t> parent_, axiom_, depth_;
  std::map<std::string, std::set<std::string>> dom_, rng_;
  std::set<std::pair<std::size_t, std::size_t>> fired_;
  std::size_t nulls_ = 0;
  bool changed_ = true;
};

bool touches_null(const Atom& a, const CanonicalModel& m) {
  return std::any_of(a.args.begin(), a.args.end(), [&](const Term& t) { return m.is_null(t.value); });
}

}  // namespace

CanonicalModel chase(const Ontology& o, std::size_t max_depth) { return Chaser(o, max_depth).run(); }

std::vector<Atom> model_facts(const TBoxClosure& c, const CanonicalModel& m, const Ontology& o, bool named_only) {
  std::vector<Atom> out = c.facts();
  for (const auto& [cls, ext] : m.class_ext)
    for (const auto& e : ext) out.push_back(Atom("instc", {Term::constant(cls), Term::constant(e)}));
  for (const auto& [p, ext] : m.prop_ext)
    for (const auto& [s, t] : ext) out.push_back(Atom("instr", {Term::constant(p), Term::constant(s), Term::constant(t)}));
  for (const auto& a : o.abox)
    if (auto* d = std::get_if<ax::DifferentIndividuals>(&a))
      out.push_back(Atom("diff", {Term::constant(d->first), Term::constant(d->second)}));
  for (const auto& n : m.named) out.push_back(Atom("named", {Term::constant(n)}));
  if (named_only) std::erase_if(out, [&](const Atom& a) { return touches_null(a, m); });
  std::sort(out.begin(), out.end(), fact_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AnswerTuple> certain_answers_oracle(const Ontology& o, const ConjunctiveQuery& q, WitnessScope scope) {
  check_query(q);
  auto closure = tbox_closure(o);
  auto model = chase(o);
  auto facts = model_facts(closure, model, o, scope == WitnessScope::Named);

  std::map<std::string, std::vector<const Atom*>> by_pred;
  for (const auto& f : facts) by_pred[f.pred].push_back(&f);

  std::set<std::string> answer(q.answer_vars.begin(), q.answer_vars.end());
  std::map<std::string, std::string> sub;
  std::set<AnswerTuple> out;

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == q.body.size()) {
      AnswerTuple t;
      for (const auto& v : q.answer_vars) t.push_back(sub.at(v));
      out.insert(std::move(t));
      return;
    }
    const Atom& atom = q.body[i];
    auto it = by_pred.find(atom.pred);
    if (it == by_pred.end()) return;
    for (const Atom* f : it->second) {
      if (f->args.size() != atom.args.size()) continue;
      auto saved = sub;
      bool ok = true;
      for (std::size_t k = 0; k < atom.args.size() && ok; ++k) {
        const Term& t = atom.args[k];
        const std::string& val = f->args[k].value;
        if (t.is_constant()) {
          ok = t.value == val;
        } else if (auto b = sub.find(t.value); b != sub.end()) {
          ok = b->second == val;
        } else {
          ok = !(answer.count(t.value) && model.is_null(val));
          if (ok) sub.emplace(t.value, val);
        }
      }
      if (ok) search(i + 1);
      sub = std::move(saved);
    }
  };
  search(0);
  return {out.begin(), out.end()};
}

}  // namespace mser
