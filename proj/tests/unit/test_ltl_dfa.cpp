#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperplan/dfa.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/ltl.hpp"

using namespace hyperplan;

namespace {

LtlBody body(const std::string& text) { return io::parse_hyperltl(text).body; }

std::vector<std::vector<Letter>> all_words(std::size_t atoms, std::size_t max_len) {
  std::vector<std::vector<Letter>> out{{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t n = 0; n < max_len; ++n) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (Letter l = 0; l < (Letter{1} << atoms); ++l) {
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Nnf, Rules) {
  auto p = LtlBody::atom("p", "p1");
  EXPECT_EQ(to_nnf(LtlBody::negation(LtlBody::negation(p))), p);
  EXPECT_EQ(to_nnf(LtlBody::eventually(p)), LtlBody::until(LtlBody::truth(), p));
  EXPECT_EQ(to_nnf(LtlBody::negation(LtlBody::eventually(p))), LtlBody::globally(LtlBody::negation(p)));
  auto q = LtlBody::negation(LtlBody::atom("q", "p2"));
  EXPECT_EQ(to_nnf(LtlBody::eventually(LtlBody::conj(p, q))), LtlBody::until(LtlBody::truth(), LtlBody::conj(p, q)));
}

TEST(CoSafety, Checks) {
  EXPECT_NO_THROW(check_cosafety(body("exists p1. F \"p\"_p1")));
  EXPECT_THROW(check_cosafety(body("exists p1. G \"p\"_p1")), NotCoSafety);
  EXPECT_THROW(check_cosafety(body("exists p1. !(F \"p\"_p1)")), NotCoSafety);
  EXPECT_NO_THROW(check_cosafety(fixtures::ni_negated().body));
}

TEST(HyperFormula, Validate) {
  HyperFormula f{{"p1"}, {"p1"}, LtlBody::truth()};
  EXPECT_THROW(f.validate(), ValidationError);
  HyperFormula g{{"p1"}, {}, LtlBody::atom("x", "p9")};
  EXPECT_THROW(g.validate(), ValidationError);
  EXPECT_EQ(fixtures::phi2().path_index("p2"), 1U);
  EXPECT_THROW(fixtures::phi2().path_index("p3"), UnknownName);
}

TEST(Dfa, EventuallyP) {
  auto d = compile_to_dfa(fixtures::phi1());
  ASSERT_EQ(d.num_states(), 2U);
  const auto q0 = d.init();
  const DfaState qt = 1 - q0;
  EXPECT_TRUE(d.accepting(qt));
  EXPECT_FALSE(d.accepting(q0));
  EXPECT_EQ(d.edge(q0, q0), BoolFormula::negation(BoolFormula::var(0)));
  EXPECT_EQ(d.edge(q0, qt), BoolFormula::var(0));
  EXPECT_TRUE(d.edge(qt, qt).is_true());
  EXPECT_TRUE(dfa_accepts_prefix(d, {0, 1}));
  EXPECT_FALSE(dfa_accepts_prefix(d, {0, 0, 0}));
  EXPECT_FALSE(dfa_accepts_prefix(d, {}));
}

TEST(Dfa, TrueBody) {
  auto d = compile_to_dfa(LtlBody::truth());
  EXPECT_EQ(d.num_states(), 1U);
  EXPECT_TRUE(d.accepting(d.init()));
  EXPECT_TRUE(dfa_accepts_prefix(d, {}));
}

TEST(Dfa, NextP) {
  auto d = compile_to_dfa(body("exists p1. X \"p\"_p1"));
  EXPECT_EQ(d.num_states(), 4U);
  EXPECT_EQ(d.num_accepting(), 1U);
  d.check_invariants();
}

TEST(Dfa, AtomCap) {
  std::vector<LtlBody> parts;
  for (int i = 0; i < 5; ++i) parts.push_back(LtlBody::atom("a" + std::to_string(i), "p1"));
  DfaOptions opts;
  opts.atom_cap = 4;
  EXPECT_THROW(compile_to_dfa(LtlBody::eventually(LtlBody::conj_all(parts)), opts), AtomUniverseTooLarge);
}

TEST(Dfa, PoolAgreesWithEvaluator) {
  for (const auto& text : fixtures::dfa_pool()) {
    auto f = io::parse_hyperltl(text);
    auto d = compile_to_dfa(f);
    d.check_invariants();
    ASSERT_LE(d.atoms().size(), 3U) << text;
    const auto nnf = to_nnf(f.body);
    for (const auto& w : all_words(d.atoms().size(), 4))
      ASSERT_EQ(dfa_accepts_prefix(d, w), fixtures::good_prefix(nnf, d, w)) << text;
  }
}

TEST(Dfa, MinimizePreservesLanguage) {
  for (const auto& text : fixtures::dfa_pool()) {
    auto d = compile_to_dfa(io::parse_hyperltl(text));
    auto m = minimize(d);
    EXPECT_LE(m.num_states(), d.num_states());
    m.check_invariants();
    for (const auto& w : all_words(d.atoms().size(), 4)) ASSERT_EQ(dfa_accepts_prefix(d, w), dfa_accepts_prefix(m, w));
  }
}

TEST(Dfa, EquivalentNnfVariantsAgree) {
  // the same property written two ways
  auto a = compile_to_dfa(body("exists p1. F (\"p\"_p1 & \"q\"_p1)"));
  auto b = compile_to_dfa(body("exists p1. F (\"q\"_p1 & \"p\"_p1)"));
  ASSERT_EQ(a.atoms(), b.atoms());
  for (const auto& w : all_words(2, 4)) EXPECT_EQ(dfa_accepts_prefix(a, w), dfa_accepts_prefix(b, w));
  auto c = compile_to_dfa(body("exists p1. !(G !\"p\"_p1)"));
  auto e = compile_to_dfa(body("exists p1. true U \"p\"_p1"));
  for (const auto& w : all_words(1, 5)) EXPECT_EQ(dfa_accepts_prefix(c, w), dfa_accepts_prefix(e, w));
}
