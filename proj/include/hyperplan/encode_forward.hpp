#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperplan/bool_formula.hpp"
#include "hyperplan/dfa.hpp"
#include "hyperplan/ltl.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/strips.hpp"
#include "hyperplan/transition_system.hpp"

namespace hyperplan {

/// Location tuple (existential copies first) plus automaton state.
struct ProductState {
  std::vector<LocationId> locs;
  DfaState dfa_state;

  friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// One direction per existential copy.
struct DirectionVector {
  std::vector<DirectionId> dirs;

  friend bool operator==(const DirectionVector&, const DirectionVector&) = default;
};

struct ExplicitEncodingOptions {
  /// Materialize only states reachable from the initial product state.
  bool reachable_only = true;
  DfaOptions dfa;
};

/// All vectors of `arity` components over `base` values, lexicographic with
/// the first component most significant.
std::vector<std::vector<std::uint32_t>> all_vectors(std::size_t base, std::size_t arity);

/// "(d0,d1)"; "()" for the empty vector.
std::string vector_name(const std::vector<std::string>& parts);

/// Letter read from a tuple of locations: bit i holds iff atom i's
/// proposition labels the location of its path copy.
Letter product_letter(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                      const std::vector<LocationId>& locs);

/// Product planning problem: states are location tuples times automaton
/// states, actions are existential direction vectors, universal copies
/// branch over every direction vector.
PlanningProblem encode_explicit(const TransitionSystem& t, const HyperFormula& f,
                                const ExplicitEncodingOptions& opts = {});
PlanningProblem encode_explicit(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                                const ExplicitEncodingOptions& opts = {});

/// |L|^(n+m) * |Q|
std::size_t unrestricted_state_count(const TransitionSystem& t, const HyperFormula& f,
                                     const Dfa& d);

/// Renames variable x to path * num_vars + x.
BoolFormula index_formula(const BoolFormula& g, std::size_t path, std::size_t num_vars);

struct SymbolicEncodingOptions {
  bool prune_unsatisfiable = true;
  /// Reachable valuations inspected for deadlocks before encoding.
  std::size_t deadlock_check_cap = 1U << 16;
  DfaOptions dfa;
};

/// STRIPS product: propositions "x@path" for indexed variables then "q<i>"
/// for automaton states; one action per existential direction vector with
/// one conditional effect per (universal vector, q, q').
StripsProblem encode_symbolic(const SymbolicTS& t, const HyperFormula& f,
                              const SymbolicEncodingOptions& opts = {});
StripsProblem encode_symbolic(const SymbolicTS& t, const HyperFormula& f, const Dfa& d,
                              const SymbolicEncodingOptions& opts = {});

}  // namespace hyperplan
