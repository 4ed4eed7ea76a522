#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperplan/bitset.hpp"
#include "hyperplan/error.hpp"
#include "hyperplan/symbols.hpp"

namespace hyperplan {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

/// A fixed action sequence, by name.
struct Plan {
  std::vector<std::string> actions;

  friend bool operator==(const Plan&, const Plan&) = default;
};

/// Canonically ordered, duplicate-free set of states. Ordering is the
/// state type's operator<, so equality and hashing are structural.
template <class State>
class Belief {
 public:
  Belief() = default;
  explicit Belief(std::vector<State> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<State>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const State& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  friend bool operator==(const Belief&, const Belief&) = default;

 private:
  std::vector<State> members_;
};

using BeliefState = Belief<StateId>;

/// Uniform view over explicit and STRIPS planning problems used by plan
/// execution and by the belief-space planner.
template <class S>
concept PlanningSemantics = requires(const S& sem, const typename S::State& st, ActionId a,
                                     const std::string& name) {
  typename S::State;
  { sem.initial_state() } -> std::convertible_to<typename S::State>;
  { sem.num_actions() } -> std::convertible_to<std::size_t>;
  { sem.action_name(a) } -> std::convertible_to<std::string>;
  { sem.find_action(name) } -> std::same_as<std::optional<ActionId>>;
  { sem.applicable(st, a) } -> std::same_as<bool>;
  { sem.successors(st, a) } -> std::same_as<std::vector<typename S::State>>;
  { sem.is_goal(st) } -> std::same_as<bool>;
  { sem.describe(st) } -> std::convertible_to<std::string>;
};

/// Explicit action: `eff[s]` is non-empty exactly when `s` is in `pre`.
struct Action {
  std::string name;
  Bitset pre;
  std::vector<std::vector<StateId>> eff;
};

/// Action given by state names, used to build problems from text.
struct ActionSpec {
  std::string name;
  std::map<std::string, std::vector<std::string>> eff;  // pre = key set
};

/// Explicit non-deterministic planning problem. Immutable once built; the
/// constructor enforces non-empty effects, effect range, and goal closure.
class PlanningProblem {
 public:
  using State = StateId;

  PlanningProblem(std::vector<std::string> state_names, StateId init, Bitset goals,
                  std::vector<Action> actions);

  static PlanningProblem from_names(const std::vector<std::string>& states,
                                    const std::string& init,
                                    const std::vector<std::string>& goals,
                                    const std::vector<ActionSpec>& actions);

  std::size_t num_states() const { return states_.size(); }
  const std::string& state_name(StateId s) const { return states_.name(s); }
  StateId state_id(const std::string& name) const { return states_.at(name, "state"); }
  const SymbolTable& states() const { return states_; }

  StateId init() const { return init_; }
  const Bitset& goals() const { return goals_; }
  const std::vector<Action>& actions() const { return actions_; }
  const Action& action(ActionId a) const { return actions_.at(a); }
  ActionId action_id(const std::string& name) const;

  // PlanningSemantics
  StateId initial_state() const { return init_; }
  std::size_t num_actions() const { return actions_.size(); }
  const std::string& action_name(ActionId a) const { return actions_.at(a).name; }
  std::optional<ActionId> find_action(const std::string& name) const;
  bool applicable(StateId s, ActionId a) const { return actions_[a].pre.test(s); }
  std::vector<StateId> successors(StateId s, ActionId a) const { return actions_[a].eff[s]; }
  bool is_goal(StateId s) const { return goals_.test(s); }
  std::string describe(StateId s) const { return state_name(s); }

  friend bool operator==(const PlanningProblem& a, const PlanningProblem& b);

 private:
  SymbolTable states_;
  StateId init_;
  Bitset goals_;
  std::vector<Action> actions_;
  SymbolTable action_ids_;
};

/// eff_a(s) by name. Throws NotApplicable when s is outside pre_a and
/// UnknownName for unresolved names.
std::vector<std::string> explicit_successors(const PlanningProblem& p, const std::string& state,
                                             const std::string& action);

namespace detail {

template <PlanningSemantics Sem>
std::vector<ActionId> resolve_plan(const Sem& sem, const Plan& plan) {
  std::vector<ActionId> ids;
  ids.reserve(plan.actions.size());
  for (const auto& name : plan.actions) {
    auto id = sem.find_action(name);
    if (!id) throw UnknownName("action", name);
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace detail

/// Executes `plan` from `belief`: each step requires every member to admit
/// the action and replaces the belief by the union of all successors.
/// Throws Undefined(step, state) at the first inapplicable step.
template <PlanningSemantics Sem>
Belief<typename Sem::State> exec_plan(const Sem& sem, const Belief<typename Sem::State>& belief,
                                      const Plan& plan) {
  if (belief.empty()) throw ValidationError("exec_plan requires a non-empty belief");
  auto ids = detail::resolve_plan(sem, plan);
  auto current = belief;
  for (std::size_t step = 0; step < ids.size(); ++step) {
    std::vector<typename Sem::State> next;
    for (const auto& s : current.members()) {
      if (!sem.applicable(s, ids[step])) throw Undefined(step, sem.describe(s));
      auto succ = sem.successors(s, ids[step]);
      next.insert(next.end(), succ.begin(), succ.end());
    }
    current = Belief<typename Sem::State>(std::move(next));
  }
  return current;
}

/// True iff executing `plan` from the initial state is defined and ends in
/// goal states only.
template <PlanningSemantics Sem>
bool is_conformant(const Sem& sem, const Plan& plan) {
  Belief<typename Sem::State> start(std::vector<typename Sem::State>{sem.initial_state()});
  try {
    auto end = exec_plan(sem, start, plan);
    return std::all_of(end.members().begin(), end.members().end(),
                       [&](const auto& s) { return sem.is_goal(s); });
  } catch (const Undefined&) {
    return false;
  }
}

}  // namespace hyperplan
