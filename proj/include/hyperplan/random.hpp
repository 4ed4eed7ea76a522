#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperplan/ltl.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/strips.hpp"
#include "hyperplan/transition_system.hpp"

namespace hyperplan {

using Rng = std::mt19937_64;

/// Generator for instance `index` of a suite seeded with `seed`. Streams
/// for different indices are independent, so instances can be produced in
/// any order.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

struct TsGenOptions {
  std::size_t min_locations = 2;
  std::size_t max_locations = 4;
  std::size_t min_dirs = 1;
  std::size_t max_dirs = 3;
  std::vector<std::string> aps{"p", "q"};
};

/// Locations l0.., directions d0.., init l0, labels i.i.d. per AP.
TransitionSystem random_ts(Rng& rng, const TsGenOptions& opts = {});

struct FormulaGenOptions {
  std::size_t max_quants = 3;  // n + m, at least 1
  std::vector<std::string> aps{"p", "q"};
};

/// Prefix exists p1..pn forall p(n+1)..p(n+m) with a body drawn from the
/// template pool: F literal, F (l & l), F c | F c, X variants, l U l.
HyperFormula random_formula(Rng& rng, const FormulaGenOptions& opts = {});

struct ProblemGenOptions {
  std::size_t min_states = 2;
  std::size_t max_states = 5;
  std::size_t min_actions = 1;
  std::size_t max_actions = 3;
};

/// States s0.., actions a, b, c, ...; init s0. Effects are non-empty and
/// goal closure is enforced by intersecting goal-state effects with G
/// (falling back to a self loop).
PlanningProblem random_problem(Rng& rng, const ProblemGenOptions& opts = {});

struct SymbolicGenOptions {
  std::size_t min_vars = 1;
  std::size_t max_vars = 3;
  std::size_t min_dirs = 1;
  std::size_t max_dirs = 3;
};

/// Variables x0..; the first direction has guard true, so no deadlocks.
SymbolicTS random_sts(Rng& rng, const SymbolicGenOptions& opts = {});

/// Propositions p0..; 1 to 3 actions with 1 or 2 conditional effects.
/// Goal propositions are never deleted, which keeps the goal closed.
StripsProblem random_strips(Rng& rng, const SymbolicGenOptions& opts = {});

}  // namespace hyperplan
