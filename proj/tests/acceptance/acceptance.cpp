// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hyperplan/dfa.hpp"
#include "hyperplan/encode_backward.hpp"
#include "hyperplan/encode_forward.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/io/json_io.hpp"
#include "hyperplan/io/nusmv.hpp"
#include "hyperplan/io/pddl.hpp"
#include "hyperplan/random.hpp"
#include "hyperplan/solve.hpp"

using namespace hyperplan;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// solver sanity, accumulated over every suite
struct Sanity {
  std::size_t witnesses = 0;
  std::size_t bad_witnesses = 0;
  std::size_t enum_runs = 0;
  std::size_t enum_unsound = 0;
} sanity;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <class Sem>
SolveResult plan(const Sem& sem) {
  auto r = conformant_search(sem);
  if (r.verdict == Verdict::kSat) {
    ++sanity.witnesses;
    if (!is_conformant(sem, *r.plan)) ++sanity.bad_witnesses;
  }
  return r;
}

Verdict oracle(const TransitionSystem& t, const HyperFormula& f, const Dfa& d) {
  auto v = mc_oracle(t, f, d).verdict;
  ++sanity.enum_runs;
  if (enum_oracle(t, f, d, OracleConfig{2}).verdict == Verdict::kSat && v == Verdict::kUnsat) ++sanity.enum_unsound;
  return v;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ac1() {
  const auto start = Clock::now();
  std::size_t agree = 0, sat = 0;
  const std::size_t n = 500;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = instance_rng(kSeed, i);
    auto t = random_ts(rng);
    auto f = random_formula(rng);
    auto d = compile_to_dfa(f);
    auto planned = plan(encode_explicit(t, f, d)).verdict;
    if (planned == oracle(t, f, d)) ++agree;
    if (planned == Verdict::kSat) ++sat;
  }
  const double secs = seconds_since(start);
  std::ostringstream s;
  s << agree << "/" << n << " agree (" << sat << " SAT), " << secs << " s";
  return {agree == n && secs <= 60.0, s.str()};
}

Outcome ac2() {
  const auto start = Clock::now();
  std::size_t agree = 0, sat = 0;
  const std::size_t n = 500;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = instance_rng(kSeed + 1, i);
    auto p = random_problem(rng);
    auto t = encode_ts(p);
    auto f = build_formula(p);
    auto planned = plan(p).verdict;
    if (planned == oracle(t, f, compile_to_dfa(f))) ++agree;
    if (planned == Verdict::kSat) ++sat;
  }
  const double secs = seconds_since(start);
  std::ostringstream s;
  s << agree << "/" << n << " agree (" << sat << " SAT), " << secs << " s";
  return {agree == n && secs <= 60.0, s.str()};
}

Outcome ac3() {
  std::size_t agree = 0;
  const std::size_t n = 200;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = instance_rng(kSeed + 2, i);
    auto p = random_problem(rng);
    auto direct = plan(p).verdict;
    auto composed = plan(encode_explicit(encode_ts(p), build_formula(p))).verdict;
    if (direct == composed) ++agree;
  }
  std::ostringstream s;
  s << agree << "/" << n << " preserved";
  return {agree == n, s.str()};
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Outcome ac4() {
  std::size_t ok = 0, total = 0;
  std::string first_failure;
  auto expect = [&](bool cond, const std::string& what) {
    ++total;
    if (cond) ++ok;
    else if (first_failure.empty()) first_failure = what;
  };
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = instance_rng(kSeed + 3, i);
    auto t = random_ts(rng);
    auto f = random_formula(rng);
    auto d = compile_to_dfa(f);
    const auto n = f.exist_vars.size(), k = f.num_paths();
    ExplicitEncodingOptions all;
    all.reachable_only = false;
    auto p = encode_explicit(t, f, d, all);
    expect(p.num_states() == ipow(t.num_locations(), k) * d.num_states(), "explicit states");
    expect(p.num_actions() == ipow(t.num_directions(), n), "explicit actions");
  }
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = instance_rng(kSeed + 4, i);
    auto t = random_sts(rng);
    FormulaGenOptions fo;
    fo.aps = t.vars().names();
    auto f = random_formula(rng, fo);
    auto d = compile_to_dfa(f);
    const auto n = f.exist_vars.size(), m = f.univ_vars.size();
    SymbolicEncodingOptions so;
    so.prune_unsatisfiable = false;
    auto p = encode_symbolic(t, f, d, so);
    const auto nd = t.directions().size(), nq = d.num_states();
    expect(p.num_props() == (n + m) * t.num_vars() + nq, "symbolic fluents");
    expect(p.num_actions() == ipow(nd, n), "symbolic actions");
    for (const auto& a : p.actions()) expect(a.effects.size() == ipow(nd, m) * nq * nq, "symbolic effects");
  }
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = instance_rng(kSeed + 5, i);
    auto p = random_strips(rng);
    expect(encode_sts(p).num_vars() == p.num_props() + p.num_actions() + 2, "backward vars");
  }
  std::ostringstream s;
  s << ok << "/" << total << " size identities hold";
  if (!first_failure.empty()) s << ", first failure: " << first_failure;
  return {ok == total, s.str()};
}

Outcome ac5() {
  std::size_t checked = 0, mismatches = 0;
  for (const auto& text : fixtures::dfa_pool()) {
    auto f = io::parse_hyperltl(text);
    auto d = compile_to_dfa(f);
    const auto nnf = to_nnf(f.body);
    const std::size_t na = d.atoms().size();
    std::vector<std::vector<Letter>> layer{{}};
    for (std::size_t len = 0; len <= 5; ++len) {
      std::vector<std::vector<Letter>> next;
      for (const auto& w : layer) {
        ++checked;
        if (dfa_accepts_prefix(d, w) != fixtures::good_prefix(nnf, d, w)) ++mismatches;
        if (len < 5)
          for (Letter l = 0; l < (Letter{1} << na); ++l) {
            auto v = w;
            v.push_back(l);
            next.push_back(std::move(v));
          }
      }
      layer = std::move(next);
    }
  }
  const auto fp = compile_to_dfa(fixtures::phi1()).num_states();
  std::ostringstream s;
  s << fixtures::dfa_pool().size() << " formulas, " << checked << " words, " << mismatches
    << " mismatches; |Q(F p)|=" << fp;
  return {mismatches == 0 && fp == 2 && fixtures::dfa_pool().size() == 12, s.str()};
}

Outcome ac6() {
  const auto f = fixtures::ni_negated();
  const auto d = compile_to_dfa(f);
  auto secure = fixtures::ni_system(false);
  auto leaky = fixtures::ni_system(true);
  auto vs = oracle(secure, f, d);
  auto vl = oracle(leaky, f, d);
  // the planning pipeline must reproduce the oracle verdicts
  auto ps = plan(encode_explicit(secure, f, d)).verdict;
  auto pl = plan(encode_explicit(leaky, f, d)).verdict;
  std::ostringstream s;
  s << "secure=" << to_string(vs) << " leaky=" << to_string(vl) << " (planner " << to_string(ps) << "/"
    << to_string(pl) << ", " << secure.num_locations() << " locations)";
  return {vs == Verdict::kUnsat && vl == Verdict::kSat && ps == vs && pl == vl, s.str()};
}

Outcome ac7() {
  const std::string dir = HYPERPLAN_DATA_DIR;
  const auto dom = io::read_file(dir + "/pddl/bomb-domain.pddl");
  const auto prob = io::read_file(dir + "/pddl/bomb-p2-t1.pddl");
  const auto start = Clock::now();
  auto [d, p] = io::parse_pddl(dom, prob);
  auto s = io::ground(d, p);
  auto sts = encode_sts(s);
  auto smv = io::emit_nusmv(sts);
  const double secs = seconds_since(start);

  std::size_t vars = 0;
  for (auto pos = smv.find("\nVAR "); pos != std::string::npos; pos = smv.find("\nVAR ", pos + 1)) ++vars;
  auto r = plan(s);
  bool shape = false;
  if (r.plan) {
    const auto& a = r.plan->actions;
    std::size_t dunks = 0;
    bool others_flush = true;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i].rfind("dunk_", 0) == 0) ++dunks;
      else if (a[i].rfind("flush_", 0) != 0) others_flush = false;
    }
    shape = dunks == 2 && others_flush && a.back() == "finish";
  }
  std::ostringstream o;
  o << "plan=";
  if (r.plan)
    for (std::size_t i = 0; i < r.plan->actions.size(); ++i) o << (i ? "," : "") << r.plan->actions[i];
  o << " vars=" << vars << " expected=" << s.num_props() + s.num_actions() + 2 << " time=" << secs << " s";
  const bool ok = r.verdict == Verdict::kSat && shape && is_conformant(s, *r.plan) &&
                  vars == s.num_props() + s.num_actions() + 2 && secs <= 1.0;
  return {ok, o.str()};
}

Outcome ac8() {
  std::ostringstream s;
  s << sanity.witnesses << " witnesses (" << sanity.bad_witnesses << " invalid), " << sanity.enum_runs
    << " enum runs (" << sanity.enum_unsound << " unsound)";
  return {sanity.witnesses > 0 && sanity.bad_witnesses == 0 && sanity.enum_unsound == 0, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 forward round trip", ac1},   {"AC2 backward round trip", ac2}, {"AC3 double composition", ac3},
      {"AC4 size formulas", ac4},        {"AC5 DFA correctness", ac5},     {"AC6 non-inference", ac6},
      {"AC7 PDDL pipeline", ac7},        {"AC8 solver sanity", ac8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
