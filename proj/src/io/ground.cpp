#include <algorithm>
#include <map>
#include <set>

#include "hyperplan/error.hpp"
#include "hyperplan/io/pddl.hpp"

namespace hyperplan::io {

namespace {

struct When {
  std::vector<std::pair<std::string, bool>> condition;  // ground atom, polarity
  std::set<std::string> add;
  std::set<std::string> del;
};

// One outcome of a nondeterministic effect, before splitting on whens.
struct Alternative {
  std::set<std::string> add;
  std::set<std::string> del;
  std::vector<When> whens;
};

struct GroundAction {
  std::string name;
  std::set<std::string> pre;
  std::vector<Alternative> alts;
};

class Grounder {
 public:
  Grounder(const LiftedDomain& d, const ProblemInstance& p) : d_(d), p_(p) {
    for (const auto& [t, parent] : d.types) {
      if (parent != "object" && !d.types.contains(parent)) throw TypeError("unknown parent type '" + parent + "'");
    }
    for (const auto& pred : d.predicates) {
      for (const auto& param : pred.params) check_type(param.type);
      preds_[pred.name] = &pred;
    }
    for (const auto& c : d.constants) add_object(c);
    for (const auto& o : p.objects) add_object(o);
  }

  std::vector<GroundAction> candidates() {
    std::vector<GroundAction> out;
    for (const auto& s : d_.schemas) {
      std::vector<std::vector<std::string>> domains;
      std::map<std::string, std::size_t> slot;
      for (std::size_t i = 0; i < s.params.size(); ++i) {
        check_type(s.params[i].type);
        if (slot.contains(s.params[i].name)) throw TypeError("duplicate parameter " + s.params[i].name + " in " + s.name);
        slot[s.params[i].name] = i;
        domains.push_back(objects_of(s.params[i].type));
      }
      for (const auto& a : s.pre) check_atom(a, &slot);
      check_effect(s.effect, slot);
      std::vector<std::size_t> pick(domains.size(), 0);
      if (std::any_of(domains.begin(), domains.end(), [](const auto& v) { return v.empty(); })) continue;
      while (true) {
        std::vector<std::string> args;
        for (std::size_t i = 0; i < pick.size(); ++i) args.push_back(domains[i][pick[i]]);
        out.push_back(instantiate(s, slot, args));
        std::size_t i = pick.size();
        while (i > 0 && ++pick[i - 1] == domains[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
    return out;
  }

  std::string ground_atom(const PddlAtom& a, const std::map<std::string, std::size_t>* slot,
                          const std::vector<std::string>* args) const {
    if (a.args.empty()) return a.predicate;
    std::string s = a.predicate + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i > 0) s += ",";
      const auto& x = a.args[i];
      s += (slot && x.starts_with("?")) ? (*args)[slot->at(x)] : x;
    }
    return s + ")";
  }

  void check_atom(const PddlAtom& a, const std::map<std::string, std::size_t>* slot) const {
    auto it = preds_.find(a.predicate);
    if (it == preds_.end()) throw TypeError("unknown predicate '" + a.predicate + "'");
    if (it->second->params.size() != a.args.size())
      throw TypeError("predicate '" + a.predicate + "' expects " + std::to_string(it->second->params.size()) +
                      " arguments");
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      const auto& x = a.args[i];
      if (x.starts_with("?")) {
        if (!slot || !slot->contains(x)) throw TypeError("unbound variable " + x + " in " + a.predicate);
        continue;
      }
      auto obj = object_types_.find(x);
      if (obj == object_types_.end()) throw TypeError("unknown object '" + x + "'");
      if (!subtype(obj->second, it->second->params[i].type))
        throw TypeError("object '" + x + "' of type " + obj->second + " used as " + it->second->params[i].type);
    }
  }

 private:
  void check_type(const std::string& t) const {
    if (t != "object" && !d_.types.contains(t)) throw TypeError("unknown type '" + t + "'");
  }

  bool subtype(std::string t, const std::string& target) const {
    for (std::size_t guard = 0; guard <= d_.types.size() + 1; ++guard) {
      if (t == target || target == "object") return true;
      auto it = d_.types.find(t);
      if (it == d_.types.end()) return false;
      t = it->second;
    }
    return false;
  }

  void add_object(const TypedName& o) {
    check_type(o.type);
    if (object_types_.contains(o.name)) throw TypeError("duplicate object '" + o.name + "'");
    object_types_[o.name] = o.type;
    object_order_.push_back(o.name);
  }

  std::vector<std::string> objects_of(const std::string& type) const {
    std::vector<std::string> out;
    for (const auto& o : object_order_)
      if (subtype(object_types_.at(o), type)) out.push_back(o);
    return out;
  }

  void check_effect(const PddlEffect& e, const std::map<std::string, std::size_t>& slot) const {
    if (e.kind == PddlEffect::Kind::kAdd || e.kind == PddlEffect::Kind::kDel) check_atom(e.atom, &slot);
    for (const auto& l : e.condition) check_atom(l.atom, &slot);
    for (const auto& k : e.kids) check_effect(k, slot);
  }

  std::vector<Alternative> expand(const PddlEffect& e, const std::map<std::string, std::size_t>& slot,
                                  const std::vector<std::string>& args) const {
    switch (e.kind) {
      case PddlEffect::Kind::kAdd: {
        Alternative a;
        a.add.insert(ground_atom(e.atom, &slot, &args));
        return {a};
      }
      case PddlEffect::Kind::kDel: {
        Alternative a;
        a.del.insert(ground_atom(e.atom, &slot, &args));
        return {a};
      }
      case PddlEffect::Kind::kOneof: {
        std::vector<Alternative> out;
        for (const auto& k : e.kids) {
          auto part = expand(k, slot, args);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }
      case PddlEffect::Kind::kWhen: {
        auto body = expand(e.kids[0], slot, args);
        When w;
        for (const auto& l : e.condition) w.condition.emplace_back(ground_atom(l.atom, &slot, &args), l.positive);
        w.add = body[0].add;
        w.del = body[0].del;
        Alternative a;
        a.whens.push_back(std::move(w));
        return {a};
      }
      case PddlEffect::Kind::kAnd: {
        std::vector<Alternative> acc(1);
        for (const auto& k : e.kids) {
          auto part = expand(k, slot, args);
          std::vector<Alternative> next;
          for (const auto& x : acc) {
            for (const auto& y : part) {
              Alternative z = x;
              z.add.insert(y.add.begin(), y.add.end());
              z.del.insert(y.del.begin(), y.del.end());
              z.whens.insert(z.whens.end(), y.whens.begin(), y.whens.end());
              next.push_back(std::move(z));
            }
          }
          acc = std::move(next);
        }
        return acc;
      }
    }
    return {};
  }

  GroundAction instantiate(const ActionSchema& s, const std::map<std::string, std::size_t>& slot,
                           const std::vector<std::string>& args) const {
    GroundAction g;
    g.name = s.name;
    for (const auto& a : args) g.name += "_" + a;
    for (const auto& a : s.pre) g.pre.insert(ground_atom(a, &slot, &args));
    g.alts = expand(s.effect, slot, args);
    return g;
  }

  const LiftedDomain& d_;
  const ProblemInstance& p_;
  std::map<std::string, const PredicateSig*> preds_;
  std::map<std::string, std::string> object_types_;
  std::vector<std::string> object_order_;
};

std::string fresh(const std::string& base, const std::set<std::string>& taken) {
  std::string s = base;
  while (taken.contains(s)) s += "_";
  return s;
}

}  // namespace

StripsProblem ground(const LiftedDomain& d, const ProblemInstance& p, GroundStats* stats) {
  Grounder g(d, p);
  std::set<std::string> init;
  for (const auto& a : p.init) {
    g.check_atom(a, nullptr);
    init.insert(g.ground_atom(a, nullptr, nullptr));
  }
  std::vector<std::string> goal;
  for (const auto& a : p.goal) {
    g.check_atom(a, nullptr);
    goal.push_back(g.ground_atom(a, nullptr, nullptr));
  }
  auto cands = g.candidates();

  // static reachability: ignore deletes and when-conditions
  std::set<std::string> reached = init;
  std::vector<char> live(cands.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (live[i]) continue;
      if (!std::includes(reached.begin(), reached.end(), cands[i].pre.begin(), cands[i].pre.end())) continue;
      live[i] = 1;
      changed = true;
      for (const auto& alt : cands[i].alts) {
        reached.insert(alt.add.begin(), alt.add.end());
        for (const auto& w : alt.whens) reached.insert(w.add.begin(), w.add.end());
      }
    }
  }

  std::set<std::string> action_names;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (live[i]) action_names.insert(cands[i].name);
  const std::string goal_ok = fresh("goal_ok", reached);
  const std::string finish = fresh("finish", action_names);

  std::vector<std::string> props(reached.begin(), reached.end());
  props.push_back(goal_ok);
  SymbolTable table(props, "proposition");
  const std::size_t np = props.size();
  auto bits = [&](const std::set<std::string>& s) {
    Bitset b(np);
    for (const auto& x : s)
      if (auto id = table.find(x)) b.set(*id);
    return b;
  };
  auto literal = [&](const std::string& atom, bool positive) {
    auto id = table.find(atom);
    auto f = id ? BoolFormula::var(*id) : BoolFormula::falsity();
    return positive ? f : BoolFormula::negation(f);
  };

  std::vector<StripsAction> actions;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!live[i]) continue;
    const auto& c = cands[i];
    StripsAction a{c.name, bits(c.pre), {}};
    for (const auto& alt : c.alts) {
      const std::size_t w = alt.whens.size();
      if (w > 16) throw UnsupportedFeature("more than 16 conditional effects in one outcome");
      std::vector<BoolFormula> conds;
      for (const auto& wh : alt.whens) {
        std::vector<BoolFormula> lits;
        for (const auto& [atom, pos] : wh.condition) lits.push_back(literal(atom, pos));
        conds.push_back(BoolFormula::conj(lits));
      }
      for (std::size_t pattern = 0; pattern < (std::size_t{1} << w); ++pattern) {
        std::vector<BoolFormula> parts;
        auto add = alt.add;
        auto del = alt.del;
        for (std::size_t k = 0; k < w; ++k) {
          const bool on = (pattern >> k) & 1U;
          parts.push_back(on ? conds[k] : BoolFormula::negation(conds[k]));
          if (on) {
            add.insert(alt.whens[k].add.begin(), alt.whens[k].add.end());
            del.insert(alt.whens[k].del.begin(), alt.whens[k].del.end());
          }
        }
        ConditionalEffect e{BoolFormula::conj(parts), bits(add), bits(del)};
        e.del -= e.add;
        auto sat = satisfiable(e.condition, 20);
        if (sat && !*sat) continue;
        bool dup = std::any_of(a.effects.begin(), a.effects.end(), [&](const ConditionalEffect& x) {
          return x.condition == e.condition && x.add == e.add && x.del == e.del;
        });
        if (!dup) a.effects.push_back(std::move(e));
      }
    }
    if (a.effects.empty()) a.effects.push_back({BoolFormula::falsity(), Bitset(np), Bitset(np)});
    actions.push_back(std::move(a));
  }

  std::size_t candidate_count = cands.size() + 1;
  const bool goal_reachable =
      std::all_of(goal.begin(), goal.end(), [&](const std::string& x) { return reached.contains(x); });
  if (goal_reachable) {
    Bitset add(np);
    add.set(table.at(goal_ok, "proposition"));
    actions.push_back({finish, bits(std::set<std::string>(goal.begin(), goal.end())),
                       {{BoolFormula::truth(), add, Bitset(np)}}});
  }
  Bitset goals(np);
  goals.set(table.at(goal_ok, "proposition"));
  if (stats) {
    stats->candidate_actions = candidate_count;
    stats->actions = actions.size();
    stats->fluents = np;
  }
  return StripsProblem(props, bits(init), goals, std::move(actions));
}

}  // namespace hyperplan::io
