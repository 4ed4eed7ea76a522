#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperplan/bitset.hpp"
#include "hyperplan/bool_formula.hpp"
#include "hyperplan/symbols.hpp"

namespace hyperplan {

using LocationId = std::uint32_t;
using DirectionId = std::uint32_t;

/// Explicit directed transition system. The transition function is total:
/// every (location, direction) pair has exactly one successor.
class TransitionSystem {
 public:
  /// `trans[l * num_directions + d]` is the successor of l along d;
  /// `labels[l]` lists atomic propositions by name.
  TransitionSystem(std::vector<std::string> locations, LocationId init,
                   std::vector<std::string> directions, std::vector<LocationId> trans,
                   const std::vector<std::vector<std::string>>& labels);

  std::size_t num_locations() const { return locations_.size(); }
  std::size_t num_directions() const { return directions_.size(); }
  const std::string& location_name(LocationId l) const { return locations_.name(l); }
  LocationId location_id(const std::string& name) const { return locations_.at(name, "location"); }
  const std::string& direction_name(DirectionId d) const { return directions_.name(d); }
  DirectionId direction_id(const std::string& name) const {
    return directions_.at(name, "direction");
  }
  const SymbolTable& locations() const { return locations_; }
  const SymbolTable& directions() const { return directions_; }

  LocationId init() const { return init_; }
  LocationId succ(LocationId l, DirectionId d) const {
    return trans_[static_cast<std::size_t>(l) * directions_.size() + d];
  }

  /// Proposition universe, in first-seen order.
  const SymbolTable& aps() const { return aps_; }
  const Bitset& label(LocationId l) const { return labels_[l]; }
  std::vector<std::string> label_names(LocationId l) const;
  bool has_label(LocationId l, const std::string& ap) const;

  friend bool operator==(const TransitionSystem& a, const TransitionSystem& b);

 private:
  SymbolTable locations_;
  LocationId init_;
  SymbolTable directions_;
  std::vector<LocationId> trans_;
  SymbolTable aps_;
  std::vector<Bitset> labels_;
};

/// Guarded command: enabled when `guard` holds, then sets `pos` and
/// clears `neg` (disjoint).
struct GuardedDirection {
  std::string name;
  BoolFormula guard;
  Bitset pos;
  Bitset neg;
};

/// Symbolic transition system over boolean variables. Variables double as
/// atomic propositions.
class SymbolicTS {
 public:
  SymbolicTS(std::vector<std::string> vars, Bitset init, std::vector<GuardedDirection> directions);

  std::size_t num_vars() const { return vars_.size(); }
  const SymbolTable& vars() const { return vars_; }
  const std::string& var_name(std::uint32_t v) const { return vars_.name(v); }
  const Bitset& init() const { return init_; }
  const std::vector<GuardedDirection>& directions() const { return directions_; }

  std::string format_state(const Bitset& v) const;
  Bitset state_from_names(const std::vector<std::string>& names) const;

  friend bool operator==(const SymbolicTS& a, const SymbolicTS& b);

 private:
  SymbolTable vars_;
  Bitset init_;
  std::vector<GuardedDirection> directions_;
};

/// Successor valuations of `v`, canonically ordered and duplicate-free. May
/// be empty.
std::vector<Bitset> sts_successors(const SymbolicTS& t, const Bitset& v);

/// Reachable valuations in breadth-first discovery order. Throws Deadlock on
/// the first reachable valuation without successors; stops silently after
/// `cap` valuations (the second member reports whether the cap was hit).
std::pair<std::vector<Bitset>, bool> sts_reachable(const SymbolicTS& t, std::size_t cap = 1U << 20);

/// Expands a symbolic system over its reachable valuations. Directions are
/// named "1".."k" with k the maximum out-degree; shorter successor lists
/// are padded by repeating their canonically first successor.
TransitionSystem explicit_of_symbolic(const SymbolicTS& t);

}  // namespace hyperplan
