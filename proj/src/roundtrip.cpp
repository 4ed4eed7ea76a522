#include "hyperplan/roundtrip.hpp"

#include "hyperplan/dfa.hpp"
#include "hyperplan/encode_backward.hpp"
#include "hyperplan/encode_forward.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/io/json_io.hpp"
#include "hyperplan/random.hpp"

namespace hyperplan {

namespace {

template <class Sem>
InstanceOutcome compare(const Sem& planning_side, const TransitionSystem& t, const HyperFormula& f,
                        const RoundtripOptions& opts) {
  InstanceOutcome out;
  const Dfa dfa = compile_to_dfa(f);
  auto planned = conformant_search(planning_side, opts.search);
  out.planner = planned.verdict;
  out.oracle = mc_oracle(t, f, dfa, opts.search).verdict;
  if (planned.verdict == Verdict::kSat && !is_conformant(planning_side, *planned.plan)) {
    out.agree = false;
    out.problem = "planner witness fails revalidation";
  } else if (out.planner != out.oracle) {
    out.agree = false;
    out.problem = "planner=" + to_string(out.planner) + " oracle=" + to_string(out.oracle);
  } else if (out.oracle == Verdict::kUnsat &&
             enum_oracle(t, f, dfa, OracleConfig{opts.enum_bound}).verdict == Verdict::kSat) {
    out.agree = false;
    out.problem = "enum_oracle SAT where mc_oracle UNSAT";
  }
  return out;
}

bool still_disagrees(const TransitionSystem& t, const HyperFormula& f, const RoundtripOptions& opts) {
  try {
    return !check_forward(t, f, opts).agree;
  } catch (const Error&) {
    return false;
  }
}

bool still_disagrees(const PlanningProblem& p, const RoundtripOptions& opts) {
  try {
    return !check_backward(p, opts).agree;
  } catch (const Error&) {
    return false;
  }
}

std::optional<TransitionSystem> drop_location(const TransitionSystem& t, LocationId victim) {
  if (victim == t.init() || t.num_locations() < 2) return std::nullopt;
  const auto nd = t.num_directions();
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  std::vector<LocationId> remap(t.num_locations());
  for (LocationId l = 0; l < t.num_locations(); ++l) {
    if (l == victim) continue;
    remap[l] = static_cast<LocationId>(names.size());
    names.push_back(t.location_name(l));
    labels.push_back(t.label_names(l));
  }
  remap[victim] = remap[t.init()];
  std::vector<LocationId> trans;
  for (LocationId l = 0; l < t.num_locations(); ++l)
    if (l != victim)
      for (DirectionId d = 0; d < nd; ++d) trans.push_back(remap[t.succ(l, d)]);
  return TransitionSystem(names, remap[t.init()], t.directions().names(), trans, labels);
}

std::optional<TransitionSystem> drop_direction(const TransitionSystem& t, DirectionId victim) {
  if (t.num_directions() < 2) return std::nullopt;
  std::vector<std::string> dirs;
  for (DirectionId d = 0; d < t.num_directions(); ++d)
    if (d != victim) dirs.push_back(t.direction_name(d));
  std::vector<LocationId> trans;
  std::vector<std::vector<std::string>> labels;
  for (LocationId l = 0; l < t.num_locations(); ++l) {
    labels.push_back(t.label_names(l));
    for (DirectionId d = 0; d < t.num_directions(); ++d)
      if (d != victim) trans.push_back(t.succ(l, d));
  }
  return TransitionSystem(t.locations().names(), t.init(), dirs, trans, labels);
}

std::optional<PlanningProblem> drop_action(const PlanningProblem& p, ActionId victim) {
  if (p.num_actions() < 2) return std::nullopt;
  std::vector<Action> actions;
  for (ActionId a = 0; a < p.num_actions(); ++a)
    if (a != victim) actions.push_back(p.action(a));
  return PlanningProblem(p.states().names(), p.init(), p.goals(), std::move(actions));
}

std::optional<PlanningProblem> drop_state(const PlanningProblem& p, StateId victim) {
  if (victim == p.init() || p.num_states() < 2) return std::nullopt;
  const auto ns = p.num_states() - 1;
  auto shift = [&](StateId s) { return s > victim ? s - 1 : s; };
  std::vector<std::string> names;
  Bitset goals(ns);
  for (StateId s = 0; s < p.num_states(); ++s) {
    if (s == victim) continue;
    names.push_back(p.state_name(s));
    if (p.goals().test(s)) goals.set(shift(s));
  }
  std::vector<Action> actions;
  for (const auto& a : p.actions()) {
    Action b{a.name, Bitset(ns), std::vector<std::vector<StateId>>(ns)};
    for (StateId s = 0; s < p.num_states(); ++s) {
      if (s == victim || !a.pre.test(s)) continue;
      for (auto t : a.eff[s])
        if (t != victim) b.eff[shift(s)].push_back(shift(t));
      if (!b.eff[shift(s)].empty()) b.pre.set(shift(s));
    }
    actions.push_back(std::move(b));
  }
  return PlanningProblem(names, shift(p.init()), goals, std::move(actions));
}

}  // namespace

InstanceOutcome check_forward(const TransitionSystem& t, const HyperFormula& f, const RoundtripOptions& opts) {
  const Dfa dfa = compile_to_dfa(f);
  return compare(encode_explicit(t, f, dfa), t, f, opts);
}

InstanceOutcome check_backward(const PlanningProblem& p, const RoundtripOptions& opts) {
  return compare(p, encode_ts(p), build_formula(p), opts);
}

TransitionSystem minimize_forward(const TransitionSystem& t, const HyperFormula& f, const RoundtripOptions& opts) {
  auto cur = t;
  for (bool changed = true; changed;) {
    changed = false;
    for (LocationId l = 0; l < cur.num_locations() && !changed; ++l) {
      auto next = drop_location(cur, l);
      if (next && still_disagrees(*next, f, opts)) {
        cur = *next;
        changed = true;
      }
    }
    for (DirectionId d = 0; d < cur.num_directions() && !changed; ++d) {
      auto next = drop_direction(cur, d);
      if (next && still_disagrees(*next, f, opts)) {
        cur = *next;
        changed = true;
      }
    }
  }
  return cur;
}

PlanningProblem minimize_backward(const PlanningProblem& p, const RoundtripOptions& opts) {
  auto cur = p;
  for (bool changed = true; changed;) {
    changed = false;
    for (ActionId a = 0; a < cur.num_actions() && !changed; ++a) {
      auto next = drop_action(cur, a);
      if (next && still_disagrees(*next, opts)) {
        cur = *next;
        changed = true;
      }
    }
    for (StateId s = 0; s < cur.num_states() && !changed; ++s) {
      auto next = drop_state(cur, s);
      if (next && still_disagrees(*next, opts)) {
        cur = *next;
        changed = true;
      }
    }
  }
  return cur;
}

RoundtripReport run_roundtrip(const RoundtripOptions& opts) {
  RoundtripReport report;
  TsGenOptions ts_opts;
  ts_opts.max_locations = std::max<std::size_t>(opts.max_locations, ts_opts.min_locations);
  ts_opts.max_dirs = std::max<std::size_t>(opts.max_dirs, ts_opts.min_dirs);
  FormulaGenOptions f_opts;
  f_opts.max_quants = opts.max_quants;
  ProblemGenOptions p_opts;
  p_opts.max_states = std::max<std::size_t>(opts.max_states, p_opts.min_states);
  p_opts.max_actions = std::max<std::size_t>(opts.max_actions, p_opts.min_actions);

  for (std::size_t i = 0; i < opts.count; ++i) {
    auto rng = instance_rng(opts.seed, i);
    const bool forward = opts.direction == RoundtripDirection::kForward ||
                         (opts.direction == RoundtripDirection::kBoth && i % 2 == 0);
    Counterexample cex;
    cex.index = i;
    cex.kind = forward ? "fwd" : "bwd";
    InstanceOutcome out;
    if (forward) {
      auto t = random_ts(rng, ts_opts);
      auto f = random_formula(rng, f_opts);
      try {
        out = check_forward(t, f, opts);
      } catch (const Error& e) {
        out.agree = false;
        out.problem = e.what();
      }
      if (!out.agree) {
        cex.instance = io::save_ts(minimize_forward(t, f, opts));
        cex.formula = io::emit_hyperltl(f);
      }
    } else {
      auto p = random_problem(rng, p_opts);
      try {
        out = check_backward(p, opts);
      } catch (const Error& e) {
        out.agree = false;
        out.problem = e.what();
      }
      if (!out.agree) cex.instance = io::save_problem(minimize_backward(p, opts));
    }
    if (out.agree) {
      ++report.agreements;
      if (out.planner == Verdict::kSat) ++report.sat;
    } else {
      ++report.disagreements;
      cex.detail = out.problem;
      report.counterexamples.push_back(std::move(cex));
    }
  }
  return report;
}

std::string format_summary(const RoundtripReport& r) {
  return "agreements=" + std::to_string(r.agreements) + " disagreements=" + std::to_string(r.disagreements);
}

}  // namespace hyperplan
