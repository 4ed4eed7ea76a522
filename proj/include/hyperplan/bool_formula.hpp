#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperplan {

/// Immutable propositional formula over dense variable ids. Guards, effect
/// conditions and automaton edge labels all use this type; the owner of a
/// formula decides what its variable ids mean.
///
/// The smart constructors fold constants (true/false absorption, double
/// negation, singleton and/or), so structurally equal inputs always produce
/// structurally equal values.
class BoolFormula {
 public:
  enum class Kind { kTrue, kFalse, kVar, kNot, kAnd, kOr, kImplies, kIff };

  BoolFormula();  // true

  static BoolFormula truth();
  static BoolFormula falsity();
  static BoolFormula constant(bool value) { return value ? truth() : falsity(); }
  static BoolFormula var(std::uint32_t id);
  static BoolFormula negation(BoolFormula f);
  static BoolFormula conj(std::vector<BoolFormula> fs);
  static BoolFormula disj(std::vector<BoolFormula> fs);
  static BoolFormula implies(BoolFormula a, BoolFormula b);
  static BoolFormula iff(BoolFormula a, BoolFormula b);

  Kind kind() const;
  std::uint32_t var_id() const;
  const std::vector<BoolFormula>& children() const;

  bool is_true() const { return kind() == Kind::kTrue; }
  bool is_false() const { return kind() == Kind::kFalse; }

  template <class Holds>
  bool eval(const Holds& holds) const {
    switch (kind()) {
      case Kind::kTrue: return true;
      case Kind::kFalse: return false;
      case Kind::kVar: return holds(var_id());
      case Kind::kNot: return !children()[0].eval(holds);
      case Kind::kAnd:
        for (const auto& c : children())
          if (!c.eval(holds)) return false;
        return true;
      case Kind::kOr:
        for (const auto& c : children())
          if (c.eval(holds)) return true;
        return false;
      case Kind::kImplies: return !children()[0].eval(holds) || children()[1].eval(holds);
      case Kind::kIff: return children()[0].eval(holds) == children()[1].eval(holds);
    }
    return false;
  }

  /// Sorted, duplicate-free variable ids.
  std::vector<std::uint32_t> vars() const;

  BoolFormula rename(const std::function<std::uint32_t(std::uint32_t)>& f) const;
  BoolFormula substitute(const std::function<BoolFormula(std::uint32_t)>& f) const;

  /// Infix rendering with caller-supplied operator spellings.
  struct Syntax {
    std::string truth = "true";
    std::string falsity = "false";
    std::string negation = "!";
    std::string conj = " & ";
    std::string disj = " | ";
    std::string implies = " -> ";
    std::string iff = " <-> ";
  };
  std::string to_string(const std::function<std::string(std::uint32_t)>& name,
                        const Syntax& syntax) const;
  std::string to_string(const std::function<std::string(std::uint32_t)>& name) const {
    return to_string(name, Syntax{});
  }

  friend bool operator==(const BoolFormula& a, const BoolFormula& b);

 private:
  struct Node;
  explicit BoolFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Exhaustive satisfiability check. Returns nullopt when the formula mentions
/// more than `max_vars` distinct variables.
std::optional<bool> satisfiable(const BoolFormula& f, std::size_t max_vars = 20);

/// Cube rendering of a truth table via a decision tree (false branch first).
/// `vars[i]` is the variable read by bit i of the table index; variables the
/// function does not depend on are dropped.
BoolFormula formula_from_table(const std::vector<std::uint32_t>& vars,
                               const std::vector<bool>& table);

}  // namespace hyperplan
