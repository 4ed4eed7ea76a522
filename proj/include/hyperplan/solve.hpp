#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperplan/dfa.hpp"
#include "hyperplan/ltl.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/transition_system.hpp"

namespace hyperplan {

enum class Verdict { kSat, kUnsat, kUnknown };

std::string to_string(Verdict v);

struct SolveStats {
  std::size_t explored = 0;       // distinct beliefs discovered
  std::size_t frontier_peak = 0;  // largest queue size
  double wall_ms = 0.0;
};

/// Flat "beliefs=.. frontier_peak=.. wall_ms=.." block.
std::string format_stats(const SolveStats& s);

struct SolveResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Plan> plan;                                    // planner witness
  std::optional<std::vector<std::vector<std::string>>> moves;  // oracle witness
  SolveStats stats;
};

struct SearchOptions {
  std::size_t max_beliefs = 1'000'000;
};

struct OracleConfig {
  std::size_t enum_bound = 1;
};

namespace detail {

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (auto x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Breadth-first search over beliefs. Returns the shortest conformant plan,
/// ties broken by action order; UNSAT once the belief graph is exhausted.
/// Throws ResourceLimit when more than `max_beliefs` beliefs are discovered.
template <PlanningSemantics Sem>
SolveResult conformant_search(const Sem& sem, const SearchOptions& opts = {}) {
  using State = typename Sem::State;
  const auto start_time = std::chrono::steady_clock::now();
  const std::size_t na = sem.num_actions();

  // world states are interned locally; successors are cached per (state, action)
  std::vector<State> states;
  std::unordered_map<State, std::uint32_t> state_ids;
  std::vector<char> goal;
  std::vector<std::optional<std::vector<std::uint32_t>>> cache;
  auto intern = [&](const State& s) {
    auto [it, inserted] = state_ids.emplace(s, static_cast<std::uint32_t>(states.size()));
    if (inserted) {
      states.push_back(s);
      goal.push_back(sem.is_goal(s) ? 1 : 0);
      cache.resize(states.size() * na);
    }
    return it->second;
  };
  // nullopt when not applicable
  auto successors = [&](std::uint32_t s, ActionId a) -> const std::optional<std::vector<std::uint32_t>>& {
    auto& slot = cache[static_cast<std::size_t>(s) * na + a];
    if (!slot) {
      std::vector<std::uint32_t> out;
      const State st = states[s];
      if (sem.applicable(st, a)) {
        for (const auto& t : sem.successors(st, a)) out.push_back(intern(t));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
      }
      // empty list marks "not applicable" (successor sets are never empty otherwise)
      cache[static_cast<std::size_t>(s) * na + a] = std::move(out);
    }
    return cache[static_cast<std::size_t>(s) * na + a];
  };

  std::vector<std::vector<std::uint32_t>> beliefs;
  std::vector<std::pair<std::uint32_t, ActionId>> parent;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::IdVectorHash> seen;
  SolveResult result;

  auto finish = [&](std::optional<std::uint32_t> hit) {
    result.stats.explored = beliefs.size();
    result.stats.wall_ms = detail::elapsed_ms(start_time);
    if (!hit) {
      result.verdict = Verdict::kUnsat;
      return result;
    }
    std::vector<std::string> plan;
    for (auto b = *hit; b != 0; b = parent[b].first) plan.push_back(sem.action_name(parent[b].second));
    std::reverse(plan.begin(), plan.end());
    result.verdict = Verdict::kSat;
    result.plan = Plan{std::move(plan)};
    return result;
  };
  auto is_goal_belief = [&](const std::vector<std::uint32_t>& b) {
    return std::all_of(b.begin(), b.end(), [&](std::uint32_t s) { return goal[s] != 0; });
  };

  std::vector<std::uint32_t> init{intern(sem.initial_state())};
  beliefs.push_back(init);
  parent.emplace_back(0, 0);
  seen.emplace(init, 0);
  if (is_goal_belief(init)) return finish(0);

  std::deque<std::uint32_t> queue{0};
  result.stats.frontier_peak = 1;
  std::vector<std::uint32_t> next;
  while (!queue.empty()) {
    const auto b = queue.front();
    queue.pop_front();
    for (ActionId a = 0; a < na; ++a) {
      next.clear();
      bool enabled = true;
      for (auto s : beliefs[b]) {
        const auto& succ = successors(s, a);
        if (succ->empty()) {
          enabled = false;
          break;
        }
        next.insert(next.end(), succ->begin(), succ->end());
      }
      if (!enabled) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (seen.contains(next)) continue;
      const auto id = static_cast<std::uint32_t>(beliefs.size());
      if (beliefs.size() >= opts.max_beliefs) throw ResourceLimit(beliefs.size());
      seen.emplace(next, id);
      beliefs.push_back(next);
      parent.emplace_back(b, a);
      if (is_goal_belief(next)) return finish(id);
      queue.push_back(id);
      result.stats.frontier_peak = std::max(result.stats.frontier_peak, queue.size());
    }
  }
  return finish(std::nullopt);
}

/// Decides T |= f by belief search over location tuples and automaton
/// states, without building a planning problem. The witness lists one
/// existential direction vector per step.
SolveResult mc_oracle(const TransitionSystem& t, const HyperFormula& f, const SearchOptions& opts = {});
SolveResult mc_oracle(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                      const SearchOptions& opts = {});

/// Bounded one-sided check: SAT when some existential move sequence of
/// length <= K reaches acceptance on every universal continuation of the
/// same length; UNKNOWN otherwise.
SolveResult enum_oracle(const TransitionSystem& t, const HyperFormula& f, const OracleConfig& cfg);
SolveResult enum_oracle(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                        const OracleConfig& cfg);

/// Plan existence agrees between the symbolic encoding of `t` and the
/// explicit encoding of its expansion.
bool semantics_equiv_check(const SymbolicTS& t, const HyperFormula& f, const SearchOptions& opts = {});

}  // namespace hyperplan
