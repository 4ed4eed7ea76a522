#include "hyperplan/planning.hpp"

namespace hyperplan {

PlanningProblem::PlanningProblem(std::vector<std::string> state_names, StateId init, Bitset goals,
                                 std::vector<Action> actions)
    : states_(state_names, "state"),
      init_(init),
      goals_(std::move(goals)),
      actions_(std::move(actions)) {
  const std::size_t n = states_.size();
  if (n == 0) throw ValidationError("planning problem has no states");
  if (init_ >= n) throw ValidationError("initial state out of range");
  if (goals_.size() != n) throw ValidationError("goal set has wrong width");
  for (auto& a : actions_) {
    if (action_ids_.find(a.name)) throw ValidationError("duplicate action '" + a.name + "'");
    action_ids_.intern(a.name);
    if (a.pre.size() != n || a.eff.size() != n)
      throw ValidationError("action '" + a.name + "' has wrong width");
    for (StateId s = 0; s < n; ++s) {
      auto& out = a.eff[s];
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      if (a.pre.test(s) != !out.empty())
        throw ValidationError("action '" + a.name + "': effect domain differs from pre at state '" +
                              states_.name(s) + "'");
      for (auto t : out)
        if (t >= n) throw ValidationError("action '" + a.name + "': successor out of range");
    }
  }
  goals_.for_each([&](std::size_t g) {
    for (const auto& a : actions_) {
      if (!a.pre.test(g)) continue;
      for (auto t : a.eff[g]) {
        if (!goals_.test(t))
          throw ValidationError("goal closure violated: action '" + a.name + "' leads from goal '" +
                                states_.name(static_cast<StateId>(g)) + "' to non-goal '" +
                                states_.name(t) + "'");
      }
    }
  });
}

PlanningProblem PlanningProblem::from_names(const std::vector<std::string>& states,
                                            const std::string& init,
                                            const std::vector<std::string>& goals,
                                            const std::vector<ActionSpec>& actions) {
  SymbolTable table(states, "state");
  Bitset goal_set(table.size());
  for (const auto& g : goals) goal_set.set(table.at(g, "state"));
  std::vector<Action> built;
  for (const auto& spec : actions) {
    Action a{spec.name, Bitset(table.size()), std::vector<std::vector<StateId>>(table.size())};
    for (const auto& [from, tos] : spec.eff) {
      auto s = table.at(from, "state");
      if (tos.empty())
        throw ValidationError("action '" + spec.name + "': empty effect at '" + from + "'");
      a.pre.set(s);
      for (const auto& t : tos) a.eff[s].push_back(table.at(t, "state"));
    }
    built.push_back(std::move(a));
  }
  return PlanningProblem(states, table.at(init, "state"), std::move(goal_set), std::move(built));
}

ActionId PlanningProblem::action_id(const std::string& name) const {
  return action_ids_.at(name, "action");
}

std::optional<ActionId> PlanningProblem::find_action(const std::string& name) const {
  return action_ids_.find(name);
}

bool operator==(const PlanningProblem& a, const PlanningProblem& b) {
  if (!(a.states_ == b.states_) || a.init_ != b.init_ || !(a.goals_ == b.goals_) ||
      a.actions_.size() != b.actions_.size())
    return false;
  for (std::size_t i = 0; i < a.actions_.size(); ++i) {
    const auto& x = a.actions_[i];
    const auto& y = b.actions_[i];
    if (x.name != y.name || !(x.pre == y.pre) || x.eff != y.eff) return false;
  }
  return true;
}

std::vector<std::string> explicit_successors(const PlanningProblem& p, const std::string& state,
                                             const std::string& action) {
  auto s = p.state_id(state);
  auto a = p.action_id(action);
  if (!p.applicable(s, a)) throw NotApplicable(state, action);
  std::vector<std::string> out;
  for (auto t : p.successors(s, a)) out.push_back(p.state_name(t));
  return out;
}

}  // namespace hyperplan
