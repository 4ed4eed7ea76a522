#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "hyperplan/encode_backward.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/io/json_io.hpp"
#include "hyperplan/io/nusmv.hpp"
#include "hyperplan/io/pddl.hpp"
#include "hyperplan/random.hpp"
#include "hyperplan/solve.hpp"
#include "nusmv_reparse.hpp"

using namespace hyperplan;

namespace {

std::string data(const std::string& rel) { return io::read_file(std::string(HYPERPLAN_DATA_DIR) + "/" + rel); }
std::string golden(const std::string& rel) { return io::read_file(std::string(HYPERPLAN_GOLDEN_DIR) + "/" + rel); }

std::string squash(const std::string& s) {
  std::string out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, TsRoundTrip) {
  auto t = fixtures::t0();
  auto text = io::save_ts(t);
  EXPECT_EQ(io::load_ts(text), t);
  EXPECT_EQ(io::save_ts(io::load_ts(text)), text);
  EXPECT_EQ(io::load_ts(data("json/t0.json")), t);
}

TEST(Json, MissingTransition) {
  auto text = data("json/t0.json");
  text = std::regex_replace(text, std::regex(R"(\{"from": "B", "dir": "d1", "to": "B"\},?)"), "");
  text = std::regex_replace(text, std::regex(R"(\},\s*\])"), "}]");
  try {
    io::load_ts(text);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/transitions");
    EXPECT_NE(std::string(e.what()).find("not total"), std::string::npos);
  }
}

TEST(Json, SchemaPointers) {
  try {
    io::load_problem(R"({"kind": "planning_problem", "states": ["s"], "init": "t", "goals": [], "actions": []})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/init");
  }
  EXPECT_THROW(io::load_ts("{not json"), SchemaError);
  EXPECT_EQ(io::detect_kind(data("json/x0.json")), io::DocKind::kSymbolicTS);
}

TEST(Json, P1Golden) {
  auto p = fixtures::p1();
  EXPECT_EQ(io::save_problem(p), golden("p1.json"));
  EXPECT_EQ(io::load_problem(data("json/p1.json")), p);
}

TEST(Json, RoundTripsRandomValues) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = instance_rng(99, i);
    auto t = random_ts(rng);
    auto p = random_problem(rng);
    auto s = random_sts(rng);
    auto q = random_strips(rng);
    EXPECT_EQ(io::load_ts(io::save_ts(t)), t);
    EXPECT_EQ(io::load_problem(io::save_problem(p)), p);
    EXPECT_EQ(io::load_sts(io::save_sts(s)), s);
    EXPECT_EQ(io::load_strips(io::save_strips(q)), q);
  }
  Plan plan{{"a", "b"}};
  EXPECT_EQ(io::load_plan(io::save_plan(plan)), plan);
}

TEST(HyperLtl, Canonical) {
  const std::string s = "exists p1. forall p2. (F \"goal\"_p2) | (F (!(\"act_a\"_p1 <-> \"act_a\"_p2)))";
  auto f = io::parse_hyperltl(s);
  EXPECT_EQ(f.exist_vars, std::vector<std::string>{"p1"});
  EXPECT_EQ(f.univ_vars, std::vector<std::string>{"p2"});
  EXPECT_EQ(io::emit_hyperltl(f), s);
  EXPECT_EQ(f, build_formula(fixtures::p0()));
}

TEST(HyperLtl, Errors) {
  EXPECT_THROW(io::parse_hyperltl("forall p1. exists p2. F \"x\"_p1"), PrefixShapeError);
  EXPECT_THROW(io::parse_hyperltl("exists p1. F (\"x\"_p1"), ParseError);
  EXPECT_THROW(io::parse_hyperltl("exists p1. F \"x\"_p2"), ValidationError);
}

TEST(HyperLtl, Precedence) {
  auto f = io::parse_hyperltl("exists a. \"p\"_a & \"q\"_a | \"r\"_a U \"s\"_a U \"t\"_a");
  EXPECT_EQ(f.body.kind(), LtlBody::Kind::kOr);
  EXPECT_EQ(f.body.child(1).kind(), LtlBody::Kind::kUntil);
  EXPECT_EQ(f.body.child(1).child(1).kind(), LtlBody::Kind::kUntil);
  auto g = io::parse_hyperltl("exists a. \"p\"_a -> \"q\"_a -> \"r\"_a <-> \"s\"_a");
  EXPECT_EQ(g.body.kind(), LtlBody::Kind::kIff);
  EXPECT_EQ(g.body.child(0).child(1).kind(), LtlBody::Kind::kImplies);
}

TEST(HyperLtl, GoldenCorpus) {
  std::istringstream in(golden("corpus.hltl"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++n;
    auto f = io::parse_hyperltl(line);
    EXPECT_EQ(io::emit_hyperltl(f), squash(line));
    EXPECT_EQ(io::parse_hyperltl(io::emit_hyperltl(f)), f);
  }
  EXPECT_EQ(n, 20U);
}

TEST(HyperLtl, RandomRoundTrip) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = instance_rng(17, i);
    auto f = random_formula(rng);
    EXPECT_EQ(io::parse_hyperltl(io::emit_hyperltl(f)), f);
  }
}

TEST(Nusmv, X0Golden) {
  auto text = io::emit_nusmv(fixtures::x0());
  EXPECT_EQ(text, golden("x0.smv"));
  EXPECT_NE(text.find("INIT !x;"), std::string::npos);
  auto trans = text.substr(text.find("TRANS"));
  EXPECT_EQ(count(trans, "\n    (") + count(trans, "\n  | ("), 2U);
}

TEST(Nusmv, StutterOnly) {
  SymbolicTS t({"x", "y"}, Bitset(2), {});
  io::NusmvOptions opts;
  opts.stutter = true;
  auto text = io::emit_nusmv(t, opts);
  EXPECT_NE(text.find("TRANS\n    (TRUE & (next(x) <-> x) & (next(y) <-> y));"), std::string::npos);
  EXPECT_THROW(io::emit_nusmv(t), Deadlock);
}

TEST(Nusmv, Identifiers) {
  auto ids = io::nusmv_identifiers({"a/b", "a_b", "1x", "next", "TRUE"});
  EXPECT_EQ(ids, (std::vector<std::string>{"a_b", "a_b_2", "v_1x", "v_next", "v_TRUE"}));
}

TEST(Nusmv, ReparseIsBisimilar) {
  std::vector<SymbolicTS> systems{fixtures::x0(), encode_sts(fixtures::s1()),
                                  encode_sts(strips_of_explicit(fixtures::p1()))};
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto rng = instance_rng(8, i);
    systems.push_back(random_sts(rng));
    systems.push_back(encode_sts(random_strips(rng)));
  }
  for (const auto& t : systems) {
    auto text = io::emit_nusmv(t);
    EXPECT_EQ(text, io::emit_nusmv(t));
    auto back = fixtures::reparse_nusmv(text);
    EXPECT_TRUE(fixtures::bisimilar(t, back)) << text;
  }
}

TEST(Pddl, MicroDomain) {
  auto d = io::parse_domain(data("pddl/micro-domain.pddl"));
  EXPECT_EQ(d.schemas.size(), 1U);
  EXPECT_EQ(d.predicates.size(), 1U);
  EXPECT_EQ(d.schemas[0].effect.kind, io::PddlEffect::Kind::kOneof);
}

TEST(Pddl, Unsupported) {
  auto expect_feature = [](const std::string& text, const std::string& feature) {
    try {
      io::parse_domain(text);
      FAIL() << feature;
    } catch (const UnsupportedFeature& e) {
      EXPECT_EQ(e.feature(), feature);
    }
  };
  expect_feature("(define (domain d) (:functions (f)))", "functions");
  expect_feature("(define (domain d) (:durative-action a))", "durative-actions");
  expect_feature("(define (domain d) (:predicates (p)) (:action a :parameters () :precondition (not (p)) :effect (p)))",
                 "negative-preconditions");
  EXPECT_THROW(io::parse_domain("(define (domain d) (:predicates (p)"), ParseError);
  try {
    io::parse_problem("(define (problem x) (:domain d) (:init (oneof (p) (q))) (:goal (p)))");
    FAIL();
  } catch (const UnsupportedFeature& e) {
    EXPECT_EQ(e.feature(), "oneof in init");
  }
}

TEST(Pddl, DegenerateInstance) {
  auto [d, p] = io::parse_pddl(
      "(define (domain z) (:predicates (done)) (:action go :parameters () :precondition () :effect (done)))",
      "(define (problem z1) (:domain z) (:objects) (:init) (:goal (done)))");
  auto s = io::ground(d, p);
  EXPECT_EQ(s.num_actions(), 2U);
  auto r = conformant_search(s);
  ASSERT_EQ(r.verdict, Verdict::kSat);
  EXPECT_EQ(r.plan->actions, (std::vector<std::string>{"go", "finish"}));
}

TEST(Pddl, MicroBombGrounding) {
  auto [d, p] = io::parse_pddl(data("pddl/bomb-domain.pddl"), data("pddl/bomb-p2-t1.pddl"));
  io::GroundStats stats;
  auto s = io::ground(d, p, &stats);
  std::vector<std::string> actions;
  for (const auto& a : s.actions()) actions.push_back(a.name);
  EXPECT_EQ(actions, (std::vector<std::string>{"dunk_p1_t1", "dunk_p2_t1", "flush_t1", "finish"}));
  for (const char* f : {"armed(p1)", "armed(p2)", "clogged(t1)", "goal_ok"}) EXPECT_TRUE(s.props().find(f)) << f;
  EXPECT_EQ(stats.actions, 4U);
  EXPECT_EQ(stats.fluents, s.num_props());
  EXPECT_EQ(s.goals().count(), 1U);
  // dunk: two outcomes, both defuse the package
  const auto& dunk = s.actions()[0];
  ASSERT_EQ(dunk.effects.size(), 2U);
  const auto defused = s.props().find("defused(p1)").value();
  for (const auto& e : dunk.effects) EXPECT_TRUE(e.add.test(defused));

  auto r = conformant_search(s);
  ASSERT_EQ(r.verdict, Verdict::kSat);
  EXPECT_TRUE(is_conformant(s, *r.plan));
  EXPECT_EQ(r.plan->actions.back(), "finish");
}

TEST(Pddl, ZeroObjectsOfType) {
  auto [d, p] = io::parse_pddl(data("pddl/bomb-domain.pddl"),
                               "(define (problem none) (:domain bomb-toilet) (:objects t1 - toilet) (:init (free t1)) "
                               "(:goal (free t1)))");
  auto s = io::ground(d, p);
  for (const auto& a : s.actions()) EXPECT_EQ(a.name.rfind("dunk", 0), std::string::npos);
}

TEST(Pddl, WhenUnderOneof) {
  auto [d, p] = io::parse_pddl(data("pddl/when-domain.pddl"), data("pddl/when-problem.pddl"));
  auto s = io::ground(d, p);
  const auto& toggle = s.actions()[s.action_id("toggle_l1")];
  const auto seen = s.props().find("seen(l1)").value();
  for (const auto& e : toggle.effects) EXPECT_TRUE(e.add.test(seen));
  // brute-force the effect semantics from both values of on(l1)
  const auto on = s.props().find("on(l1)").value();
  for (bool initially_on : {false, true}) {
    Bitset st(s.num_props());
    if (initially_on) st.set(on);
    std::set<bool> outcomes;
    for (const auto& n : s.apply(st, s.action_id("toggle_l1"))) outcomes.insert(n.test(on));
    EXPECT_EQ(outcomes, (std::set<bool>{false, true}));
  }
  auto r = conformant_search(s);
  ASSERT_EQ(r.verdict, Verdict::kSat);
  EXPECT_EQ(r.plan->actions.size(), 3U);
}

TEST(Pddl, TypeErrors) {
  auto d = io::parse_domain(data("pddl/bomb-domain.pddl"));
  auto p = io::parse_problem("(define (problem bad) (:domain bomb-toilet) (:objects p1 - package) (:init (free p1)) (:goal (armed p1)))");
  EXPECT_THROW(io::ground(d, p), TypeError);
  auto q = io::parse_problem("(define (problem bad) (:domain bomb-toilet) (:objects p1 - vase) (:init) (:goal (armed p1)))");
  EXPECT_THROW(io::ground(d, q), TypeError);
}
