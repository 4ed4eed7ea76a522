// hyperplan command-line driver.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "hyperplan/dfa.hpp"
#include "hyperplan/encode_backward.hpp"
#include "hyperplan/encode_forward.hpp"
#include "hyperplan/error.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/io/json_io.hpp"
#include "hyperplan/io/nusmv.hpp"
#include "hyperplan/io/pddl.hpp"
#include "hyperplan/roundtrip.hpp"
#include "hyperplan/solve.hpp"

namespace hp = hyperplan;
namespace io = hyperplan::io;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

struct UsageError : hp::Error {
  using hp::Error::Error;
};

struct InternalError : hp::Error {
  using hp::Error::Error;
};

struct Globals {
  std::size_t max_beliefs = 1'000'000;
  bool verbose = false;
};

std::string slurp(const std::string& path) {
  try {
    return io::read_file(path);
  } catch (const hp::Error& e) {
    throw UsageError(e.what());
  }
}

void spit(const std::string& path, const std::string& text) {
  try {
    io::write_file(path, text);
  } catch (const hp::Error& e) {
    throw UsageError(e.what());
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

int verdict_code(hp::Verdict v) { return v == hp::Verdict::kSat ? kOk : kNegative; }

// Explicit system from a TS or symbolic TS document.
hp::TransitionSystem load_explicit_system(const std::string& text) {
  switch (io::detect_kind(text)) {
    case io::DocKind::kTransitionSystem: return io::load_ts(text);
    case io::DocKind::kSymbolicTS: return hp::explicit_of_symbolic(io::load_sts(text));
    default: throw UsageError("expected a transition_system or symbolic_ts document");
  }
}

int cmd_ground(const std::string& dom, const std::string& prob, const std::string& out, const Globals& g) {
  auto [d, p] = io::parse_pddl(slurp(dom), slurp(prob));
  io::GroundStats stats;
  auto strips = io::ground(d, p, &stats);
  spit(out, io::save_strips(strips));
  std::cout << "fluents=" << stats.fluents << " actions=" << stats.actions
            << " candidates=" << stats.candidate_actions << "\n";
  if (g.verbose)
    for (const auto& a : strips.actions()) std::cout << "  " << a.name << " effects=" << a.effects.size() << "\n";
  return kOk;
}

int cmd_mc2plan(const std::string& in, const std::string& formula, const std::string& out, bool symbolic,
                const Globals& g) {
  const auto text = slurp(in);
  const auto f = io::parse_hyperltl(slurp(formula));
  if (symbolic) {
    if (io::detect_kind(text) != io::DocKind::kSymbolicTS) throw UsageError("--symbolic needs a symbolic_ts document");
    auto p = hp::encode_symbolic(io::load_sts(text), f);
    spit(out, io::save_strips(p));
    std::cout << "fluents=" << p.num_props() << " actions=" << p.num_actions() << "\n";
  } else {
    auto p = hp::encode_explicit(load_explicit_system(text), f);
    spit(out, io::save_problem(p));
    std::cout << "states=" << p.num_states() << " actions=" << p.num_actions() << "\n";
  }
  if (g.verbose) std::cout << "formula: " << io::emit_hyperltl(f) << "\n";
  return kOk;
}

template <class Sem>
hp::SolveResult solve_checked(const Sem& sem, const Globals& g) {
  auto r = hp::conformant_search(sem, hp::SearchOptions{g.max_beliefs});
  if (r.verdict == hp::Verdict::kSat && !hp::is_conformant(sem, *r.plan))
    throw InternalError("plan " + join(r.plan->actions, ",") + " failed revalidation");
  return r;
}

std::string verdict_line(const hp::SolveResult& r) {
  std::string line = "verdict=" + hp::to_string(r.verdict);
  if (r.plan) line += " plan=" + join(r.plan->actions, ",");
  if (r.moves) {
    std::vector<std::string> steps;
    for (const auto& m : *r.moves) steps.push_back("(" + join(m, ",") + ")");
    line += " moves=" + join(steps, ";");
  }
  return line + " " + hp::format_stats(r.stats);
}

// Plan existence for an explicit or STRIPS problem document.
hp::SolveResult solve_document(const std::string& text, const Globals& g) {
  switch (io::detect_kind(text)) {
    case io::DocKind::kProblem: return solve_checked(io::load_problem(text), g);
    case io::DocKind::kStrips: return solve_checked(io::load_strips(text), g);
    default: throw UsageError("expected a planning_problem or strips_problem document");
  }
}

int cmd_plan2mc(const std::string& in, const std::string& out, const std::string& formula_out, bool verify,
                const Globals& g) {
  const auto text = slurp(in);
  std::optional<hp::StripsProblem> strips;
  switch (io::detect_kind(text)) {
    case io::DocKind::kProblem: strips = hp::strips_of_explicit(io::load_problem(text)); break;
    case io::DocKind::kStrips: strips = io::load_strips(text); break;
    default: throw UsageError("expected a planning_problem or strips_problem document");
  }
  const auto sts = hp::encode_sts(*strips);
  const auto f = hp::build_formula(hp::backward_atoms(*strips));
  io::NusmvOptions nopts;
  nopts.header.push_back("source: " + in);
  nopts.header.push_back("formula: " + io::emit_hyperltl(f));
  spit(out, io::emit_nusmv(sts, nopts));
  spit(formula_out, io::emit_hyperltl(f) + "\n");
  std::cout << "vars=" << sts.num_vars() << " directions=" << sts.directions().size() << "\n";
  if (verify) {
    const auto planned = solve_checked(*strips, g);
    const auto checked = hp::mc_oracle(hp::explicit_of_symbolic(sts), f, hp::SearchOptions{g.max_beliefs});
    std::cout << "verify planner=" << hp::to_string(planned.verdict) << " checker=" << hp::to_string(checked.verdict)
              << "\n";
    if (planned.verdict != checked.verdict) throw InternalError("plan2mc --verify disagreement");
  }
  return kOk;
}

int cmd_solve(const std::string& in, const Globals& g) {
  auto r = solve_document(slurp(in), g);
  std::cout << verdict_line(r) << "\n";
  if (g.verbose && r.plan)
    for (std::size_t i = 0; i < r.plan->actions.size(); ++i) std::cout << "  " << i + 1 << ". " << r.plan->actions[i] << "\n";
  return verdict_code(r.verdict);
}

int cmd_check(const std::string& in, const std::string& formula, std::optional<std::size_t> enum_k,
              const Globals& g) {
  const auto t = load_explicit_system(slurp(in));
  const auto f = io::parse_hyperltl(slurp(formula));
  const auto d = hp::compile_to_dfa(f);
  auto r = enum_k ? hp::enum_oracle(t, f, d, hp::OracleConfig{*enum_k})
                  : hp::mc_oracle(t, f, d, hp::SearchOptions{g.max_beliefs});
  std::cout << verdict_line(r) << "\n";
  if (g.verbose) std::cout << "  dfa states=" << d.num_states() << " atoms=" << d.atoms().size() << "\n";
  return verdict_code(r.verdict);
}

int cmd_roundtrip(hp::RoundtripOptions opts, const std::string& direction, const Globals& g) {
  if (direction == "fwd") opts.direction = hp::RoundtripDirection::kForward;
  else if (direction == "bwd") opts.direction = hp::RoundtripDirection::kBackward;
  else opts.direction = hp::RoundtripDirection::kBoth;
  opts.search.max_beliefs = g.max_beliefs;
  auto report = hp::run_roundtrip(opts);
  std::cout << hp::format_summary(report) << "\n";
  if (g.verbose) std::cout << "  sat=" << report.sat << " unsat=" << report.agreements - report.sat << "\n";
  for (const auto& c : report.counterexamples) {
    std::cout << "counterexample index=" << c.index << " kind=" << c.kind << " detail=\"" << c.detail << "\"\n";
    if (!c.formula.empty()) std::cout << "formula: " << c.formula << "\n";
    std::cout << c.instance;
  }
  return report.disagreements == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperplan: conformant planning <-> exists*forall* HyperLTL translator and solvers"};
  app.require_subcommand(1, 1);
  Globals g;
  app.add_option("--max-beliefs", g.max_beliefs, "belief budget for searches")->capture_default_str();
  app.add_flag("-v,--verbose", g.verbose, "human-readable detail after the result line");

  std::string in, in2, out, formula, direction = "both";
  bool symbolic = false, verify = false;
  std::optional<std::size_t> enum_k;
  hp::RoundtripOptions rt;

  auto* ground = app.add_subcommand("ground", "ground a PDDL domain/problem pair to STRIPS JSON");
  ground->add_option("domain", in, "domain file")->required();
  ground->add_option("problem", in2, "problem file")->required();
  ground->add_option("-o,--output", out, "output JSON")->required();

  auto* mc2plan = app.add_subcommand("mc2plan", "encode a model-checking instance as a planning problem");
  mc2plan->add_option("system", in, "transition_system or symbolic_ts JSON")->required();
  mc2plan->add_option("formula", formula, "HyperLTL file")->required();
  mc2plan->add_option("-o,--output", out, "output JSON")->required();
  mc2plan->add_flag("--symbolic", symbolic, "symbolic STRIPS encoding");

  auto* plan2mc = app.add_subcommand("plan2mc", "encode a planning problem as a model-checking instance");
  plan2mc->add_option("problem", in, "planning_problem or strips_problem JSON")->required();
  plan2mc->add_option("-o,--output", out, "output NuSMV model")->required();
  plan2mc->add_option("--formula", formula, "output HyperLTL file")->required();
  plan2mc->add_flag("--verify", verify, "compare planner and checker verdicts");

  auto* solve = app.add_subcommand("solve", "conformant plan search");
  solve->add_option("problem", in, "planning_problem or strips_problem JSON")->required();

  auto* check = app.add_subcommand("check", "decide T |= phi");
  check->add_option("system", in, "transition_system or symbolic_ts JSON")->required();
  check->add_option("formula", formula, "HyperLTL file")->required();
  check->add_option("--enum", enum_k, "bounded enumeration with bound K");

  auto* roundtrip = app.add_subcommand("roundtrip", "randomized planner/checker agreement suite");
  roundtrip->add_option("--seed", rt.seed)->capture_default_str();
  roundtrip->add_option("--count", rt.count)->capture_default_str();
  roundtrip->add_option("--max-locations", rt.max_locations)->capture_default_str();
  roundtrip->add_option("--max-dirs", rt.max_dirs)->capture_default_str();
  roundtrip->add_option("--max-quants", rt.max_quants)->capture_default_str();
  roundtrip->add_option("--direction", direction)
      ->check(CLI::IsMember({"fwd", "bwd", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ground) return cmd_ground(in, in2, out, g);
    if (*mc2plan) return cmd_mc2plan(in, formula, out, symbolic, g);
    if (*plan2mc) return cmd_plan2mc(in, out, formula, verify, g);
    if (*solve) return cmd_solve(in, g);
    if (*check) return cmd_check(in, formula, enum_k, g);
    if (*roundtrip) return cmd_roundtrip(rt, direction, g);
  } catch (const hp::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const hp::AtomUniverseTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kLimit;
  } catch (const hp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kLimit;
  }
  return kUsage;
}
