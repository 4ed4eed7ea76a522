#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperplan/dfa.hpp"
#include "hyperplan/io/hyperltl.hpp"
#include "hyperplan/ltl.hpp"
#include "hyperplan/planning.hpp"
#include "hyperplan/strips.hpp"
#include "hyperplan/transition_system.hpp"

namespace fixtures {

using namespace hyperplan;

inline Bitset bits(std::size_t n, std::initializer_list<std::size_t> on) {
  Bitset b(n);
  for (auto i : on) b.set(i);
  return b;
}

// s0 -a-> g, g goal and absorbing
inline PlanningProblem p0() {
  return PlanningProblem::from_names({"s0", "g"}, "s0", {"g"}, {{"a", {{"s0", {"g"}}, {"g", {"g"}}}}});
}

// a from s0 is non-deterministic; b repairs x. Only plan: a, b.
inline PlanningProblem p1() {
  return PlanningProblem::from_names({"s0", "x", "g"}, "s0", {"g"},
                                     {{"a", {{"s0", {"x", "g"}}, {"x", {"x"}}, {"g", {"g"}}}},
                                      {"b", {{"x", {"g"}}, {"g", {"g"}}}}});
}

inline StripsProblem s1() {
  return StripsProblem({"px"}, Bitset(1), bits(1, {0}),
                       {{"mk", Bitset(1), {{BoolFormula::truth(), bits(1, {0}), Bitset(1)}}}});
}

inline SymbolicTS x0() {
  return SymbolicTS({"x"}, Bitset(1),
                    {{"d1", BoolFormula::negation(BoolFormula::var(0)), bits(1, {0}), Bitset(1)},
                     {"d2", BoolFormula::truth(), Bitset(1), Bitset(1)}});
}

inline TransitionSystem t0() {
  return TransitionSystem({"A", "B"}, 0, {"d0", "d1"}, {0, 1, 1, 1}, {{}, {"p"}});
}

inline HyperFormula phi1() { return io::parse_hyperltl("exists p1. F \"p\"_p1"); }
inline HyperFormula phi2() { return io::parse_hyperltl("exists p1. forall p2. F (\"p\"_p1 & !\"p\"_p2)"); }

// Information-flow system: the first move picks a high or low input, then
// the output o is produced. With `leak` the high branch raises o.
inline TransitionSystem ni_system(bool leak) {
  // locations: 0 init, 1 H, 2 L, 3 O0, 4 O1
  const LocationId out_h = leak ? 4 : 3;
  std::vector<LocationId> trans = {2, 1,  // init
                                   out_h, out_h, 3, 3, 3, 3, 4, 4};
  return TransitionSystem({"init", "H", "L", "O0", "O1"}, 0, {"lo", "hi"}, trans,
                          {{}, {"h"}, {"l"}, {}, {"o"}});
}

// negated non-inference: some run whose output no h-free run reproduces
inline HyperFormula ni_negated() {
  return io::parse_hyperltl("exists p1. forall p2. (F \"h\"_p2) | (F (!(\"o\"_p1 <-> \"o\"_p2)))");
}

// Co-safety bodies with at most 3 atoms, none a tautology.
inline std::vector<std::string> dfa_pool() {
  return {
      "exists p1. F \"p\"_p1",
      "exists p1. F (\"p\"_p1 & \"q\"_p1)",
      "exists p1. forall p2. (F \"p\"_p1) | (F \"q\"_p2)",
      "exists p1. X \"p\"_p1",
      "exists p1. X (F \"p\"_p1)",
      "exists p1. \"p\"_p1 U \"q\"_p1",
      "exists p1. F (\"p\"_p1 & (X \"q\"_p1))",
      "exists p1. forall p2. F (!(\"p\"_p1 <-> \"p\"_p2))",
      "exists p1. (\"p\"_p1 U \"q\"_p1) & (F \"r\"_p1)",
      "exists p1. (X (X \"p\"_p1)) & \"q\"_p1",
      "exists p1. F (\"p\"_p1 & (X (\"q\"_p1 U \"r\"_p1)))",
      "exists p1. \"p\"_p1 -> (F \"q\"_p1)",
  };
}

// Good-prefix semantics on a finite word: positions past the end satisfy
// only true.
inline bool good_prefix(const LtlBody& b, const Dfa& d, const std::vector<Letter>& w, std::size_t i) {
  using K = LtlBody::Kind;
  switch (b.kind()) {
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kAtom: return i < w.size() && ((w[i] >> d.atom_index(b.atom())) & 1U);
    case K::kNot:
      // NNF: negation only on atoms
      return i < w.size() && !((w[i] >> d.atom_index(b.child(0).atom())) & 1U);
    case K::kAnd: return good_prefix(b.child(0), d, w, i) && good_prefix(b.child(1), d, w, i);
    case K::kOr: return good_prefix(b.child(0), d, w, i) || good_prefix(b.child(1), d, w, i);
    case K::kNext: return good_prefix(b.child(0), d, w, i + 1);
    case K::kUntil:
      for (std::size_t j = i; j < w.size(); ++j) {
        if (good_prefix(b.child(1), d, w, j)) return true;
        if (!good_prefix(b.child(0), d, w, j)) return false;
      }
      return false;
    default: throw std::logic_error("evaluator expects co-safety NNF");
  }
}

inline bool good_prefix(const LtlBody& nnf, const Dfa& d, const std::vector<Letter>& w) {
  return good_prefix(nnf, d, w, 0);
}

}  // namespace fixtures
