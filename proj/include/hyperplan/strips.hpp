#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperplan/bitset.hpp"
#include "hyperplan/bool_formula.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/symbols.hpp"

namespace hyperplan {

/// One alternative of a STRIPS action. `condition` ranges over proposition
/// ids; `add` and `del` must be disjoint.
struct ConditionalEffect {
  BoolFormula condition;
  Bitset add;
  Bitset del;
};

struct StripsAction {
  std::string name;
  Bitset pre;
  std::vector<ConditionalEffect> effects;
};

/// STRIPS problem with non-deterministic choice among conditional effects
/// and a disjunctive goal: a state is a goal state when it contains at
/// least one goal proposition.
///
/// Applying an action whose precondition holds but none of whose conditions
/// fire yields no successor. Plan execution treats that case as "not
/// applicable" rather than silently dropping the state.
class StripsProblem {
 public:
  using State = Bitset;

  StripsProblem(std::vector<std::string> props, Bitset init, Bitset goals,
                std::vector<StripsAction> actions);

  std::size_t num_props() const { return props_.size(); }
  const SymbolTable& props() const { return props_; }
  const std::string& prop_name(std::uint32_t p) const { return props_.name(p); }
  const Bitset& init() const { return init_; }
  const Bitset& goals() const { return goals_; }
  const std::vector<StripsAction>& actions() const { return actions_; }
  ActionId action_id(const std::string& name) const { return action_ids_.at(name, "action"); }

  /// Successor set of a prop-set under one action, before the applicability
  /// check. Empty when no condition fires.
  std::vector<Bitset> apply(const Bitset& s, ActionId a) const;

  /// Parses/renders a prop-set as "{a,b}".
  std::string format_state(const Bitset& s) const;
  Bitset state_from_names(const std::vector<std::string>& names) const;

  /// Actions that can hit an empty effect: some assignment satisfying pre
  /// falsifies every condition. Checked by truth table over the condition
  /// atoms; actions with more than `max_atoms` condition atoms are skipped.
  std::vector<std::string> partial_actions(std::size_t max_atoms = 16) const;

  // PlanningSemantics
  Bitset initial_state() const { return init_; }
  std::size_t num_actions() const { return actions_.size(); }
  const std::string& action_name(ActionId a) const { return actions_.at(a).name; }
  std::optional<ActionId> find_action(const std::string& name) const {
    return action_ids_.find(name);
  }
  bool applicable(const Bitset& s, ActionId a) const;
  std::vector<Bitset> successors(const Bitset& s, ActionId a) const { return apply(s, a); }
  bool is_goal(const Bitset& s) const { return s.intersects(goals_); }
  std::string describe(const Bitset& s) const { return format_state(s); }

  friend bool operator==(const StripsProblem& a, const StripsProblem& b);

 private:
  SymbolTable props_;
  Bitset init_;
  Bitset goals_;
  std::vector<StripsAction> actions_;
  SymbolTable action_ids_;
};

/// apply_a(s) with error reporting: NotApplicable when pre_a does not hold,
/// EmptyEffect when it holds but no condition fires.
std::vector<Bitset> strips_successors(const StripsProblem& p, const Bitset& s,
                                      const std::string& action);

}  // namespace hyperplan
