#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperplan/dfa.hpp"
#include "hyperplan/encode_forward.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/random.hpp"
#include "hyperplan/solve.hpp"

using namespace hyperplan;

namespace {

// Every plan of length <= k over the action names, shortest first.
template <class Sem>
std::optional<Plan> brute_force(const Sem& sem, std::size_t k) {
  std::vector<Plan> layer{Plan{}};
  for (std::size_t len = 0; len <= k; ++len) {
    for (const auto& p : layer)
      if (is_conformant(sem, p)) return p;
    std::vector<Plan> next;
    for (const auto& p : layer)
      for (ActionId a = 0; a < sem.num_actions(); ++a) {
        auto q = p;
        q.actions.push_back(sem.action_name(a));
        next.push_back(q);
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

TEST(Search, Fixtures) {
  auto r0 = conformant_search(fixtures::p0());
  EXPECT_EQ(r0.verdict, Verdict::kSat);
  EXPECT_EQ(r0.plan->actions, std::vector<std::string>{"a"});
  auto r1 = conformant_search(fixtures::p1());
  EXPECT_EQ(r1.verdict, Verdict::kSat);
  EXPECT_EQ(r1.plan->actions, (std::vector<std::string>{"a", "b"}));
  EXPECT_GE(r1.stats.explored, 2U);
}

TEST(Search, NoGoals) {
  auto p = PlanningProblem::from_names({"s"}, "s", {}, {{"a", {{"s", {"s"}}}}});
  EXPECT_EQ(conformant_search(p).verdict, Verdict::kUnsat);
}

TEST(Search, ResourceLimit) {
  EXPECT_THROW(conformant_search(fixtures::p1(), SearchOptions{1}), ResourceLimit);
}

TEST(Search, ShortestAgainstBruteForce) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = instance_rng(21, i);
    auto p = random_problem(rng, ProblemGenOptions{2, 4, 1, 2});
    auto r = conformant_search(p);
    auto b = brute_force(p, 4);
    if (b) {
      ASSERT_EQ(r.verdict, Verdict::kSat);
      EXPECT_EQ(r.plan->actions.size(), b->actions.size());
      EXPECT_TRUE(is_conformant(p, *r.plan));
    } else if (r.verdict == Verdict::kSat) {
      EXPECT_GT(r.plan->actions.size(), 4U);
    }
  }
}

TEST(Oracle, T0) {
  auto r = mc_oracle(fixtures::t0(), fixtures::phi1());
  EXPECT_EQ(r.verdict, Verdict::kSat);
  ASSERT_TRUE(r.moves.has_value());
  ASSERT_FALSE(r.moves->empty());
  EXPECT_EQ(r.moves->front(), std::vector<std::string>{"d1"});
  EXPECT_EQ(mc_oracle(fixtures::t0(), fixtures::phi2()).verdict, Verdict::kUnsat);
  HyperFormula t{{"p1"}, {}, LtlBody::truth()};
  EXPECT_EQ(mc_oracle(fixtures::t0(), t).verdict, Verdict::kSat);
}

TEST(Oracle, EnumBound) {
  const auto t = fixtures::t0();
  EXPECT_EQ(enum_oracle(t, fixtures::phi1(), OracleConfig{2}).verdict, Verdict::kSat);
  EXPECT_EQ(enum_oracle(t, fixtures::phi1(), OracleConfig{1}).verdict, Verdict::kUnknown);
  auto never = io::parse_hyperltl("exists p1. F false");
  for (std::size_t k : {1U, 2U, 3U}) EXPECT_EQ(enum_oracle(t, never, OracleConfig{k}).verdict, Verdict::kUnknown);
}

TEST(Oracle, NonInference) {
  EXPECT_EQ(mc_oracle(fixtures::ni_system(false), fixtures::ni_negated()).verdict, Verdict::kUnsat);
  EXPECT_EQ(mc_oracle(fixtures::ni_system(true), fixtures::ni_negated()).verdict, Verdict::kSat);
}

TEST(Oracle, EnumNeverContradictsOracle) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = instance_rng(5, i);
    auto t = random_ts(rng);
    auto f = random_formula(rng);
    auto d = compile_to_dfa(f);
    auto full = mc_oracle(t, f, d);
    auto bounded = enum_oracle(t, f, d, OracleConfig{3});
    if (bounded.verdict == Verdict::kSat) EXPECT_EQ(full.verdict, Verdict::kSat) << io::emit_hyperltl(f);
  }
}

TEST(Stats, Format) {
  SolveStats s{3, 2, 0.0};
  EXPECT_EQ(format_stats(s).rfind("beliefs=3 frontier_peak=2 wall_ms=", 0), 0U);
}
