#include <chrono>
#include <deque>
#include <set>

#include "mser/engine.hpp"

namespace mser {

namespace {

std::string adorned_name(const std::string& pred, const std::string& adornment) { return pred + "@" + adornment; }
std::string magic_name(const std::string& pred, const std::string& adornment) { return "m@" + pred + "@" + adornment; }

class MagicRewriter {
 public:
  MagicRewriter(const std::vector<Rule>& rules) : rules_(rules) {
    for (const auto& r : rules) idb_.insert(r.head.pred);
  }

  DemandProgram run(const ConjunctiveQuery& q) {
    DemandProgram out;
    out.seed = Atom("m@query", {});
    out.answer_pred = "q@answer";
    std::vector<Term> head_args;
    for (const auto& v : q.answer_vars) head_args.push_back(Term::variable(v));
    rewrite_rule(Atom(out.answer_pred, head_args), q.body, out.seed, {});

    while (!pending_.empty()) {
      auto [pred, adornment] = pending_.front();
      pending_.pop_front();
      const Rule* sample = nullptr;
      for (const auto& r : rules_)
        if (r.head.pred == pred) sample = &r;
      std::size_t arity = sample->head.args.size();

      // stored facts of an IDB predicate still count once demanded
      std::vector<Term> xs, bound;
      for (std::size_t i = 0; i < arity; ++i) {
        xs.push_back(Term::variable("X" + std::to_string(i)));
        if (adornment[i] == 'b') bound.push_back(xs.back());
      }
      Atom magic(magic_name(pred, adornment), bound);
      emit(Rule{Atom(adorned_name(pred, adornment), xs), {magic, Atom(pred, xs)}});

      for (const auto& r : rules_) {
        if (r.head.pred != pred) continue;
        std::vector<Term> mb;
        std::set<std::string> bound_vars;
        for (std::size_t i = 0; i < arity; ++i)
          if (adornment[i] == 'b') {
            mb.push_back(r.head.args[i]);
            if (r.head.args[i].is_variable()) bound_vars.insert(r.head.args[i].value);
          }
        Atom head(adorned_name(pred, adornment), r.head.args);
        rewrite_rule(head, r.body, Atom(magic_name(pred, adornment), mb), bound_vars);
      }
    }
    out.rules = std::move(out_rules_);
    return out;
  }

 private:
  void emit(Rule r) {
    if (seen_.insert(r).second) out_rules_.push_back(std::move(r));
  }

  void demand(const std::string& pred, const std::string& adornment) {
    if (requested_.insert({pred, adornment}).second) pending_.emplace_back(pred, adornment);
  }

  // Sideways information passing left to right over a greedy order: the atom
  // with the most bound arguments goes next.
  void rewrite_rule(const Atom& head, const std::vector<Atom>& body, const Atom& guard,
                    std::set<std::string> bound) {
    std::vector<bool> used(body.size(), false);
    std::vector<Atom> prefix{guard};
    auto bound_args = [&](const Atom& a) {
      std::size_t n = 0;
      for (const auto& t : a.args)
        if (t.is_constant() || bound.count(t.value)) ++n;
      return n;
    };
    for (std::size_t step = 0; step < body.size(); ++step) {
      std::size_t pick = body.size();
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (used[i]) continue;
        if (pick == body.size() || bound_args(body[i]) > bound_args(body[pick])) pick = i;
      }
      used[pick] = true;
      const Atom& b = body[pick];
      if (idb_.count(b.pred)) {
        std::string adornment;
        std::vector<Term> bargs;
        for (const auto& t : b.args) {
          bool is_bound = t.is_constant() || bound.count(t.value);
          adornment.push_back(is_bound ? 'b' : 'f');
          if (is_bound) bargs.push_back(t);
        }
        demand(b.pred, adornment);
        emit(Rule{Atom(magic_name(b.pred, adornment), bargs), prefix});
        prefix.push_back(Atom(adorned_name(b.pred, adornment), b.args));
      } else {
        prefix.push_back(b);
      }
      for (const auto& t : b.args)
        if (t.is_variable()) bound.insert(t.value);
    }
    emit(Rule{head, prefix});
  }

  const std::vector<Rule>& rules_;
  std::set<std::string> idb_;
  std::set<std::pair<std::string, std::string>> requested_;
  std::deque<std::pair<std::string, std::string>> pending_;
  std::set<Rule> seen_;
  std::vector<Rule> out_rules_;
};

}  // namespace

DemandProgram magic_transform(const std::vector<Rule>& rules, const ConjunctiveQuery& q) {
  check_query(q);
  return MagicRewriter(rules).run(q);
}

std::vector<AnswerTuple> answer_with_demand(FactStore& store, const std::vector<Rule>& rules,
                                            const ConjunctiveQuery& q, EvalOptions opts, EvalStats* stats) {
  auto prog = magic_transform(rules, q);
  for (const auto& a : q.body)
    if (!store.find_predicate(a.pred)) throw UnknownPredicate("unknown predicate " + a.pred);
  store.predicate(prog.answer_pred, q.answer_vars.size());
  store.assert_facts(std::span<const Atom>(&prog.seed, 1));
  auto s = evaluate_fixpoint(store, prog.rules, opts);
  if (stats) *stats = s;

  const auto& rel = store.relation(*store.find_predicate(prog.answer_pred));
  std::vector<AnswerTuple> out;
  for (std::size_t r = 0; r < rel.size(); ++r) {
    AnswerTuple t;
    for (auto id : rel.row(r)) t.push_back(store.symbols().name(id));
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mser
