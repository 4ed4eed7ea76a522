#include "hyperplan/encode_backward.hpp"

#include <algorithm>
#include <set>

#include "hyperplan/error.hpp"

namespace hyperplan {

namespace {

std::vector<std::string> act_names(const std::vector<std::string>& actions) {
  std::vector<std::string> out;
  for (const auto& a : actions) out.push_back("act_" + a);
  return out;
}

}  // namespace

BackwardAtoms backward_atoms(const PlanningProblem& p) {
  std::vector<std::string> names;
  for (const auto& a : p.actions()) names.push_back(a.name);
  BackwardAtoms out;
  out.act_props = act_names(names);
  return out;
}

BackwardAtoms backward_atoms(const StripsProblem& p) {
  std::vector<std::string> names;
  for (const auto& a : p.actions()) names.push_back(a.name);
  BackwardAtoms out;
  out.act_props = act_names(names);
  std::set<std::string> reserved(out.act_props.begin(), out.act_props.end());
  reserved.insert(out.goal_prop);
  reserved.insert(out.err_prop);
  std::set<std::string> taken(p.props().names().begin(), p.props().names().end());
  for (const auto& prop : p.props().names()) {
    if (!reserved.contains(prop)) continue;
    std::string fresh = "p_" + prop;
    while (reserved.contains(fresh) || taken.contains(fresh)) fresh = "p_" + fresh;
    taken.insert(fresh);
    out.renamed[prop] = fresh;
  }
  return out;
}

TransitionSystem encode_ts(const PlanningProblem& p) {
  const std::size_t ns = p.num_states();
  const std::size_t na = p.num_actions();
  if (na == 0) throw ValidationError("backward encoding needs at least one action");
  const auto atoms = backward_atoms(p);

  std::string err = "#err";
  while (p.states().find(err)) err += "'";

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  for (StateId s = 0; s < ns; ++s) {
    for (ActionId a = 0; a < na; ++a) {
      names.push_back("(" + p.state_name(s) + "," + p.action_name(a) + ")");
      std::vector<std::string> ls{atoms.act_props[a]};
      if (p.is_goal(s)) ls.push_back(atoms.goal_prop);
      labels.push_back(std::move(ls));
    }
  }
  for (ActionId a = 0; a < na; ++a) {
    names.push_back("(" + err + "," + p.action_name(a) + ")");
    labels.push_back({atoms.act_props[a]});
  }

  const auto err_loc = [&](ActionId a) { return static_cast<LocationId>(ns * na + a); };
  std::vector<std::vector<LocationId>> succ(names.size());
  std::size_t degree = 0;
  for (StateId s = 0; s < ns; ++s) {
    std::vector<LocationId> out;
    for (ActionId a2 = 0; a2 < na; ++a2) {
      if (!p.applicable(s, a2)) {
        out.push_back(err_loc(a2));
        continue;
      }
      for (auto s2 : p.successors(s, a2)) out.push_back(static_cast<LocationId>(s2 * na + a2));
    }
    for (ActionId a = 0; a < na; ++a) succ[s * na + a] = out;
    degree = std::max(degree, out.size());
  }
  for (ActionId a = 0; a < na; ++a) {
    std::vector<LocationId> out;
    for (ActionId a2 = 0; a2 < na; ++a2) out.push_back(err_loc(a2));
    succ[err_loc(a)] = out;
    degree = std::max(degree, out.size());
  }

  std::vector<std::string> dirs;
  for (std::size_t d = 1; d <= degree; ++d) dirs.push_back(std::to_string(d));
  std::vector<LocationId> trans;
  for (const auto& out : succ)
    for (std::size_t d = 0; d < degree; ++d) trans.push_back(d < out.size() ? out[d] : out.front());
  return TransitionSystem(std::move(names), static_cast<LocationId>(p.init() * na), std::move(dirs),
                          std::move(trans), labels);
}

HyperFormula build_formula(const BackwardAtoms& atoms) {
  std::vector<LtlBody> differ;
  for (const auto& act : atoms.act_props)
    differ.push_back(LtlBody::negation(LtlBody::iff(LtlBody::atom(act, "p1"), LtlBody::atom(act, "p2"))));
  auto body = LtlBody::disj(LtlBody::eventually(LtlBody::atom(atoms.goal_prop, "p2")),
                            LtlBody::eventually(LtlBody::disj_all(differ)));
  return HyperFormula{{"p1"}, {"p2"}, body};
}

HyperFormula build_formula(const PlanningProblem& p) { return build_formula(backward_atoms(p)); }

SymbolicTS encode_sts(const StripsProblem& p) {
  const auto atoms = backward_atoms(p);
  const std::size_t np = p.num_props();
  const std::size_t na = p.actions().size();
  std::vector<std::string> vars;
  for (const auto& prop : p.props().names()) {
    auto it = atoms.renamed.find(prop);
    vars.push_back(it == atoms.renamed.end() ? prop : it->second);
  }
  vars.insert(vars.end(), atoms.act_props.begin(), atoms.act_props.end());
  const auto act = [&](std::size_t a) { return static_cast<std::uint32_t>(np + a); };
  const auto goal = static_cast<std::uint32_t>(np + na);
  const auto err = static_cast<std::uint32_t>(np + na + 1);
  vars.push_back(atoms.goal_prop);
  vars.push_back(atoms.err_prop);
  const std::size_t nv = vars.size();

  auto widen = [&](const Bitset& b) {
    Bitset out(nv);
    b.for_each([&](std::size_t i) { out.set(i); });
    return out;
  };
  Bitset init = widen(p.init());
  if (p.init().intersects(p.goals())) init.set(goal);

  std::vector<GuardedDirection> dirs;
  for (std::size_t a = 0; a < na; ++a) {
    const auto& action = p.actions()[a];
    std::vector<BoolFormula> pre_lits;
    action.pre.for_each([&](std::size_t i) { pre_lits.push_back(BoolFormula::var(static_cast<std::uint32_t>(i))); });
    auto pre = BoolFormula::conj(pre_lits);
    Bitset other_acts(nv);
    for (std::size_t b = 0; b < na; ++b)
      if (b != a) other_acts.set(act(b));

    std::vector<BoolFormula> conds;
    for (std::size_t i = 0; i < action.effects.size(); ++i) {
      const auto& e = action.effects[i];
      conds.push_back(e.condition);
      auto guard = BoolFormula::conj({pre, e.condition, BoolFormula::negation(BoolFormula::var(err))});
      Bitset pos = widen(e.add);
      pos.set(act(a));
      Bitset neg = widen(e.del) | other_acts;
      const std::string base = action.name + "/" + std::to_string(i);
      const Bitset survivors = p.goals() - e.del;
      if (e.add.intersects(p.goals())) {
        Bitset pg = pos;
        pg.set(goal);
        dirs.push_back({base, guard, pg, neg});
      } else if (survivors.none()) {
        Bitset ng = neg;
        ng.set(goal);
        dirs.push_back({base, guard, pos, ng});
      } else {
        std::vector<BoolFormula> alive;
        survivors.for_each([&](std::size_t g) { alive.push_back(BoolFormula::var(static_cast<std::uint32_t>(g))); });
        auto some = BoolFormula::disj(alive);
        Bitset pg = pos;
        pg.set(goal);
        Bitset ng = neg;
        ng.set(goal);
        dirs.push_back({base + "/goal", BoolFormula::conj({guard, some}), pg, neg});
        dirs.push_back({base + "/nogoal", BoolFormula::conj({guard, BoolFormula::negation(some)}), pos, ng});
      }
    }
    Bitset pos(nv);
    pos.set(act(a));
    pos.set(err);
    Bitset neg = other_acts;
    neg.set(goal);
    auto guard = BoolFormula::disj({BoolFormula::var(err),
                                    BoolFormula::negation(BoolFormula::conj({pre, BoolFormula::disj(conds)}))});
    dirs.push_back({action.name + "/err", guard, pos, neg});
  }
  return SymbolicTS(std::move(vars), std::move(init), std::move(dirs));
}

StripsProblem strips_of_explicit(const PlanningProblem& p) {
  const std::size_t ns = p.num_states();
  std::vector<std::string> props;
  for (StateId s = 0; s < ns; ++s) props.push_back("at_" + p.state_name(s));
  Bitset init(ns);
  init.set(p.init());
  std::vector<StripsAction> actions;
  for (const auto& a : p.actions()) {
    StripsAction sa{a.name, Bitset(ns), {}};
    for (StateId s = 0; s < ns; ++s) {
      for (auto s2 : a.eff[s]) {
        ConditionalEffect e{BoolFormula::var(s), Bitset(ns), Bitset(ns)};
        if (s2 != s) {
          e.add.set(s2);
          e.del.set(s);
        }
        sa.effects.push_back(std::move(e));
      }
    }
    if (sa.effects.empty()) sa.effects.push_back({BoolFormula::falsity(), Bitset(ns), Bitset(ns)});
    actions.push_back(std::move(sa));
  }
  return StripsProblem(std::move(props), std::move(init), p.goals(), std::move(actions));
}

}  // namespace hyperplan
