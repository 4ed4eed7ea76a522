#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperplan/dfa.hpp"
#include "hyperplan/encode_backward.hpp"
#include "hyperplan/encode_forward.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/random.hpp"
#include "hyperplan/roundtrip.hpp"
#include "hyperplan/solve.hpp"

using namespace hyperplan;

TEST(Property, ForwardAgreement) {
  RoundtripOptions opts;
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = instance_rng(101, i);
    auto t = random_ts(rng);
    auto f = random_formula(rng);
    auto out = check_forward(t, f, opts);
    EXPECT_TRUE(out.agree) << io::emit_hyperltl(f) << " " << out.problem;
  }
}

TEST(Property, BackwardAgreement) {
  RoundtripOptions opts;
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = instance_rng(102, i);
    auto p = random_problem(rng);
    auto out = check_backward(p, opts);
    EXPECT_TRUE(out.agree) << out.problem;
  }
}

TEST(Property, SymbolicForwardAgreement) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = instance_rng(103, i);
    auto t = random_sts(rng, SymbolicGenOptions{1, 2, 1, 3});
    FormulaGenOptions fo;
    fo.aps = t.vars().names();
    fo.max_quants = 2;
    auto f = random_formula(rng, fo);
    EXPECT_TRUE(semantics_equiv_check(t, f)) << io::emit_hyperltl(f);
  }
}

TEST(Property, SymbolicBackwardAgreement) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = instance_rng(104, i);
    auto p = random_strips(rng);
    const auto planned = conformant_search(p).verdict;
    const auto sts = encode_sts(p);
    const auto f = build_formula(backward_atoms(p));
    EXPECT_EQ(planned, mc_oracle(explicit_of_symbolic(sts), f).verdict) << i;
  }
}

TEST(Property, ExplicitToStripsPreservesPlanExistence) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = instance_rng(105, i);
    auto p = random_problem(rng);
    auto a = conformant_search(p);
    auto b = conformant_search(strips_of_explicit(p));
    EXPECT_EQ(a.verdict, b.verdict);
    if (a.plan) EXPECT_EQ(a.plan->actions.size(), b.plan->actions.size());
  }
}

TEST(Property, ReachableEncodingIsSubsetOfUnrestricted) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = instance_rng(106, i);
    auto t = random_ts(rng);
    auto f = random_formula(rng);
    auto d = compile_to_dfa(f);
    ExplicitEncodingOptions all;
    all.reachable_only = false;
    auto full = encode_explicit(t, f, d, all);
    auto small = encode_explicit(t, f, d);
    EXPECT_LE(small.num_states(), full.num_states());
    EXPECT_EQ(conformant_search(small).verdict, conformant_search(full).verdict);
  }
}

TEST(Property, GeneratorsAreDeterministic) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto a = instance_rng(7, i);
    auto b = instance_rng(7, i);
    EXPECT_EQ(random_ts(a), random_ts(b));
    EXPECT_EQ(random_formula(a), random_formula(b));
    EXPECT_EQ(random_problem(a), random_problem(b));
  }
}

TEST(Property, RoundtripReproducible) {
  RoundtripOptions opts;
  opts.seed = 3;
  opts.count = 30;
  auto a = run_roundtrip(opts);
  auto b = run_roundtrip(opts);
  EXPECT_EQ(format_summary(a), format_summary(b));
  EXPECT_EQ(a.sat, b.sat);
  EXPECT_EQ(a.disagreements, 0U);
}

TEST(Property, MinimizerKeepsAgreeingInstances) {
  // on an agreeing instance nothing can be deleted
  RoundtripOptions opts;
  auto p = fixtures::p1();
  EXPECT_EQ(minimize_backward(p, opts), p);
  auto t = fixtures::t0();
  EXPECT_EQ(minimize_forward(t, fixtures::phi1(), opts), t);
}
