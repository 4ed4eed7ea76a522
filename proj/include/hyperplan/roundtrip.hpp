#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperplan/ltl.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/solve.hpp"
#include "hyperplan/transition_system.hpp"

namespace hyperplan {

enum class RoundtripDirection { kForward, kBackward, kBoth };

struct RoundtripOptions {
  std::uint64_t seed = 7;
  std::size_t count = 100;
  std::size_t max_locations = 4;
  std::size_t max_dirs = 3;
  std::size_t max_quants = 3;
  std::size_t max_states = 5;
  std::size_t max_actions = 3;
  RoundtripDirection direction = RoundtripDirection::kBoth;
  SearchOptions search;
  std::size_t enum_bound = 2;
};

/// Outcome of one instance. `agree` covers the verdict comparison, plan
/// revalidation, and the enum_oracle soundness check.
struct InstanceOutcome {
  bool agree = true;
  Verdict planner = Verdict::kUnknown;
  Verdict oracle = Verdict::kUnknown;
  std::string problem;  // first failed check, empty when agree
};

/// Forward instance: conformant_search(encode_explicit(t, f)) vs mc_oracle.
InstanceOutcome check_forward(const TransitionSystem& t, const HyperFormula& f, const RoundtripOptions& opts);

/// Backward instance: conformant_search(p) vs mc_oracle(encode_ts(p), build_formula(p)).
InstanceOutcome check_backward(const PlanningProblem& p, const RoundtripOptions& opts);

/// Greedy deletion of locations and directions while check_forward still
/// disagrees.
TransitionSystem minimize_forward(const TransitionSystem& t, const HyperFormula& f, const RoundtripOptions& opts);

/// Greedy deletion of actions and states while check_backward still disagrees.
PlanningProblem minimize_backward(const PlanningProblem& p, const RoundtripOptions& opts);

struct Counterexample {
  std::size_t index = 0;
  std::string kind;     // "fwd" or "bwd"
  std::string detail;   // outcome problem
  std::string instance; // minimized instance as loadable JSON
  std::string formula;  // HyperLTL text, forward only
};

struct RoundtripReport {
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t sat = 0;
  std::vector<Counterexample> counterexamples;
};

/// Instance i uses instance_rng(seed, i). With kBoth, even indices are
/// forward and odd ones backward.
RoundtripReport run_roundtrip(const RoundtripOptions& opts);

/// "agreements=N disagreements=M"
std::string format_summary(const RoundtripReport& r);

}  // namespace hyperplan
