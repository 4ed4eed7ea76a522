#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hyperplan {

/// Proposition `prop` evaluated on the path bound to `path`.
struct IndexedAtom {
  std::string prop;
  std::string path;

  friend auto operator<=>(const IndexedAtom&, const IndexedAtom&) = default;
  friend bool operator==(const IndexedAtom&, const IndexedAtom&) = default;
};

/// LTL body over indexed atoms. Nodes are kept exactly as built (no
/// folding), so parse and emit round-trip on the AST.
class LtlBody {
 public:
  enum class Kind {
    kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies, kIff,
    kNext, kUntil, kEventually, kGlobally
  };

  LtlBody();  // true

  static LtlBody truth();
  static LtlBody falsity();
  static LtlBody atom(std::string prop, std::string path);
  static LtlBody negation(LtlBody a);
  static LtlBody conj(LtlBody a, LtlBody b);
  static LtlBody disj(LtlBody a, LtlBody b);
  static LtlBody implies(LtlBody a, LtlBody b);
  static LtlBody iff(LtlBody a, LtlBody b);
  static LtlBody next(LtlBody a);
  static LtlBody until(LtlBody a, LtlBody b);
  static LtlBody eventually(LtlBody a);
  static LtlBody globally(LtlBody a);

  /// Left-nested conjunction/disjunction; empty lists give true/false.
  static LtlBody conj_all(const std::vector<LtlBody>& fs);
  static LtlBody disj_all(const std::vector<LtlBody>& fs);

  Kind kind() const;
  const IndexedAtom& atom() const;
  std::size_t arity() const;
  const LtlBody& child(std::size_t i) const;

  bool is_literal() const;  // atom or negated atom

  /// Sorted, duplicate-free indexed atoms.
  std::vector<IndexedAtom> atoms() const;
  std::vector<std::string> path_vars() const;

  /// Canonical text: atoms as "name"_path, every operand that is not an atom
  /// or constant parenthesized.
  std::string to_string() const;

  friend bool operator==(const LtlBody& a, const LtlBody& b);

 private:
  struct Node;
  explicit LtlBody(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// exists exist_vars. forall univ_vars. body
struct HyperFormula {
  std::vector<std::string> exist_vars;
  std::vector<std::string> univ_vars;
  LtlBody body;

  std::size_t num_paths() const { return exist_vars.size() + univ_vars.size(); }
  std::vector<std::string> path_vars() const;
  /// Position in the prefix (existentials first); throws UnknownName.
  std::size_t path_index(const std::string& var) const;
  /// Distinct names, every atom bound. Throws ValidationError.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const HyperFormula&, const HyperFormula&) = default;
};

/// Negation normal form over true, false, literals, and, or, X, U, G.
/// F e becomes true U e; implications and equivalences are expanded.
LtlBody to_nnf(const LtlBody& b);

/// Normalizes `b` and throws NotCoSafety naming the first G node
/// (child-index path into the normalized body).
void check_cosafety(const LtlBody& b);

}  // namespace hyperplan
