#pragma once

#include <string>

#include "hyperplan/planning.hpp"
#include "hyperplan/strips.hpp"
#include "hyperplan/transition_system.hpp"

namespace hyperplan::io {

/// Documents carry a "kind" field; plans are {"plan": [...]}.
enum class DocKind { kTransitionSystem, kSymbolicTS, kProblem, kStrips, kPlan };

/// Throws SchemaError when the text is not JSON or the kind is unknown.
DocKind detect_kind(const std::string& text);

// Canonical output: sorted keys, two-space indent, trailing newline.
std::string save_ts(const TransitionSystem& t);
TransitionSystem load_ts(const std::string& text);

std::string save_sts(const SymbolicTS& t);
SymbolicTS load_sts(const std::string& text);

std::string save_problem(const PlanningProblem& p);
PlanningProblem load_problem(const std::string& text);

std::string save_strips(const StripsProblem& p);
StripsProblem load_strips(const std::string& text);

std::string save_plan(const Plan& p);
Plan load_plan(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hyperplan::io
