#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperplan/bool_formula.hpp"
#include "hyperplan/ltl.hpp"

namespace hyperplan {

using DfaState = std::uint32_t;
/// Bit i set iff atom i of the automaton holds.
using Letter = std::uint32_t;

struct DfaEdge {
  DfaState to;
  BoolFormula label;  // over atom indices
};

/// Deterministic automaton over indexed-atom letters whose accepting states
/// are sinks.
class Dfa {
 public:
  Dfa(std::vector<IndexedAtom> atoms, std::vector<std::string> state_names, DfaState init,
      std::vector<std::vector<DfaEdge>> edges, std::vector<bool> accepting);

  const std::vector<IndexedAtom>& atoms() const { return atoms_; }
  std::size_t num_states() const { return names_.size(); }
  const std::string& state_name(DfaState q) const { return names_.at(q); }
  DfaState init() const { return init_; }
  bool accepting(DfaState q) const { return accepting_.at(q); }
  std::size_t num_accepting() const;
  /// Non-false edges out of q, ordered by target.
  const std::vector<DfaEdge>& edges(DfaState q) const { return edges_.at(q); }
  /// δ(q, q'), false when absent.
  BoolFormula edge(DfaState q, DfaState to) const;

  /// Unique successor on `letter`; evaluates edge formulas.
  DfaState step(DfaState q, Letter letter) const;

  /// Index of `a` in atoms(), or -1.
  int atom_index(const IndexedAtom& a) const;

  /// Throws ValidationError unless every state has exactly one enabled edge
  /// per letter and every accepting state is a sink.
  void check_invariants() const;

  friend bool operator==(const Dfa&, const Dfa&);

 private:
  std::vector<IndexedAtom> atoms_;
  std::vector<std::string> names_;
  DfaState init_;
  std::vector<std::vector<DfaEdge>> edges_;
  std::vector<bool> accepting_;
};

struct DfaOptions {
  std::size_t atom_cap = 16;
  /// Cap on distinct atoms plus temporal subformulas (truth-table width).
  std::size_t leaf_cap = 20;
  bool minimize = false;
  /// Atoms are ordered by position of their path variable here, then by
  /// name; unknown path variables sort after, by name.
  std::vector<std::string> path_order;
};

/// Derivative construction. States are propositional-equivalence classes
/// of residual obligations, discovered breadth-first from the body with
/// letters in increasing order. Throws NotCoSafety / AtomUniverseTooLarge.
Dfa compile_to_dfa(const LtlBody& body, const DfaOptions& opts = {});
Dfa compile_to_dfa(const HyperFormula& f, DfaOptions opts = {});

/// Moore partition refinement; keeps the discovery order of class leaders.
Dfa minimize(const Dfa& d);

/// True iff the run on `word` visits an accepting state.
bool dfa_accepts_prefix(const Dfa& d, const std::vector<Letter>& word);

}  // namespace hyperplan
