#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperplan/ltl.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/strips.hpp"
#include "hyperplan/transition_system.hpp"

namespace hyperplan {

/// Proposition names introduced by the backward encodings.
struct BackwardAtoms {
  std::vector<std::string> act_props;  // one per action, in action order
  std::string goal_prop = "goal";
  std::string err_prop = "err";
  /// Source propositions renamed to avoid the names above (old -> new).
  std::map<std::string, std::string> renamed;
};

BackwardAtoms backward_atoms(const PlanningProblem& p);
BackwardAtoms backward_atoms(const StripsProblem& p);

/// Execution system of an explicit problem. Location (s, a) has id
/// s * |O| + a; the error location (err, a) has id |S| * |O| + a. The
/// initial location records the first action. Directions are "1".."k".
TransitionSystem encode_ts(const PlanningProblem& p);

/// exists p1. forall p2. F goal_p2 | F (act_a(p1) <-/-> act_a(p2) for some a)
HyperFormula build_formula(const PlanningProblem& p);
HyperFormula build_formula(const BackwardAtoms& atoms);

/// Symbolic execution system of a STRIPS problem over P, act props, goal
/// and err. Effect directions whose post-state goal membership depends on
/// the pre-state are split in two; each action also gets an error
/// direction enabled when it is not applicable or err already holds.
SymbolicTS encode_sts(const StripsProblem& p);

/// One-hot STRIPS rendering of an explicit problem: proposition at_s per
/// state, one conditional effect per (s, s') pair.
StripsProblem strips_of_explicit(const PlanningProblem& p);

}  // namespace hyperplan
