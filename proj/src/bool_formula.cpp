#include "hyperplan/bool_formula.hpp"

#include <algorithm>

namespace hyperplan {

struct BoolFormula::Node {
  Kind kind = Kind::kTrue;
  std::uint32_t var = 0;
  std::vector<BoolFormula> kids;
};

BoolFormula::BoolFormula() : BoolFormula(truth()) {}

BoolFormula BoolFormula::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kTrue, 0, {}});
  return BoolFormula(node);
}

BoolFormula BoolFormula::falsity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kFalse, 0, {}});
  return BoolFormula(node);
}

BoolFormula BoolFormula::var(std::uint32_t id) {
  return BoolFormula(std::make_shared<const Node>(Node{Kind::kVar, id, {}}));
}

BoolFormula BoolFormula::negation(BoolFormula f) {
  switch (f.kind()) {
    case Kind::kTrue: return falsity();
    case Kind::kFalse: return truth();
    case Kind::kNot: return f.children()[0];
    default: return BoolFormula(std::make_shared<const Node>(Node{Kind::kNot, 0, {std::move(f)}}));
  }
}

BoolFormula BoolFormula::conj(std::vector<BoolFormula> fs) {
  std::vector<BoolFormula> kept;
  for (auto& f : fs) {
    if (f.is_false()) return falsity();
    if (f.is_true()) continue;
    if (f.kind() == Kind::kAnd) {
      for (const auto& k : f.children()) kept.push_back(k);
    } else {
      kept.push_back(std::move(f));
    }
  }
  if (kept.empty()) return truth();
  if (kept.size() == 1) return kept.front();
  return BoolFormula(std::make_shared<const Node>(Node{Kind::kAnd, 0, std::move(kept)}));
}

BoolFormula BoolFormula::disj(std::vector<BoolFormula> fs) {
  std::vector<BoolFormula> kept;
  for (auto& f : fs) {
    if (f.is_true()) return truth();
    if (f.is_false()) continue;
    if (f.kind() == Kind::kOr) {
      for (const auto& k : f.children()) kept.push_back(k);
    } else {
      kept.push_back(std::move(f));
    }
  }
  if (kept.empty()) return falsity();
  if (kept.size() == 1) return kept.front();
  return BoolFormula(std::make_shared<const Node>(Node{Kind::kOr, 0, std::move(kept)}));
}

BoolFormula BoolFormula::implies(BoolFormula a, BoolFormula b) {
  if (a.is_false() || b.is_true()) return truth();
  if (a.is_true()) return b;
  if (b.is_false()) return negation(std::move(a));
  return BoolFormula(
      std::make_shared<const Node>(Node{Kind::kImplies, 0, {std::move(a), std::move(b)}}));
}

BoolFormula BoolFormula::iff(BoolFormula a, BoolFormula b) {
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  if (a.is_false()) return negation(std::move(b));
  if (b.is_false()) return negation(std::move(a));
  return BoolFormula(
      std::make_shared<const Node>(Node{Kind::kIff, 0, {std::move(a), std::move(b)}}));
}

BoolFormula::Kind BoolFormula::kind() const { return node_->kind; }
std::uint32_t BoolFormula::var_id() const { return node_->var; }
const std::vector<BoolFormula>& BoolFormula::children() const { return node_->kids; }

std::vector<std::uint32_t> BoolFormula::vars() const {
  std::vector<std::uint32_t> out;
  std::function<void(const BoolFormula&)> walk = [&](const BoolFormula& f) {
    if (f.kind() == Kind::kVar) out.push_back(f.var_id());
    for (const auto& c : f.children()) walk(c);
  };
  walk(*this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BoolFormula BoolFormula::rename(const std::function<std::uint32_t(std::uint32_t)>& f) const {
  return substitute([&](std::uint32_t v) { return var(f(v)); });
}

BoolFormula BoolFormula::substitute(const std::function<BoolFormula(std::uint32_t)>& f) const {
  switch (kind()) {
    case Kind::kTrue:
    case Kind::kFalse: return *this;
    case Kind::kVar: return f(var_id());
    case Kind::kNot: return negation(children()[0].substitute(f));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<BoolFormula> kids;
      kids.reserve(children().size());
      for (const auto& c : children()) kids.push_back(c.substitute(f));
      return kind() == Kind::kAnd ? conj(std::move(kids)) : disj(std::move(kids));
    }
    case Kind::kImplies: return implies(children()[0].substitute(f), children()[1].substitute(f));
    case Kind::kIff: return iff(children()[0].substitute(f), children()[1].substitute(f));
  }
  return *this;
}

std::string BoolFormula::to_string(const std::function<std::string(std::uint32_t)>& name,
                                   const Syntax& syntax) const {
  auto operand = [&](const BoolFormula& c) {
    auto s = c.to_string(name, syntax);
    bool atomic = c.kind() == Kind::kTrue || c.kind() == Kind::kFalse ||
                  c.kind() == Kind::kVar || c.kind() == Kind::kNot;
    return atomic ? s : "(" + s + ")";
  };
  switch (kind()) {
    case Kind::kTrue: return syntax.truth;
    case Kind::kFalse: return syntax.falsity;
    case Kind::kVar: return name(var_id());
    case Kind::kNot: return syntax.negation + operand(children()[0]);
    case Kind::kAnd:
    case Kind::kOr: {
      const auto& sep = kind() == Kind::kAnd ? syntax.conj : syntax.disj;
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i > 0) out += sep;
        out += operand(children()[i]);
      }
      return out;
    }
    case Kind::kImplies: return operand(children()[0]) + syntax.implies + operand(children()[1]);
    case Kind::kIff: return operand(children()[0]) + syntax.iff + operand(children()[1]);
  }
  return {};
}

bool operator==(const BoolFormula& a, const BoolFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.var_id() != b.var_id()) return false;
  return a.children() == b.children();
}

std::optional<bool> satisfiable(const BoolFormula& f, std::size_t max_vars) {
  auto vars = f.vars();
  if (vars.size() > max_vars) return std::nullopt;
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    auto holds = [&](std::uint32_t v) {
      auto pos = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
      return ((row >> pos) & 1U) != 0;
    };
    if (f.eval(holds)) return true;
  }
  return false;
}

namespace {

void collect_cubes(const std::vector<std::uint32_t>& vars, const std::vector<bool>& table,
                   std::size_t depth, std::size_t fixed, std::vector<BoolFormula>& cubes) {
  bool any_true = false;
  bool any_false = false;
  for (std::size_t idx = fixed; idx < table.size(); idx += std::size_t{1} << depth) {
    (table[idx] ? any_true : any_false) = true;
    if (any_true && any_false) break;
  }
  if (!any_true) return;
  if (!any_false) {
    std::vector<BoolFormula> lits;
    for (std::size_t i = 0; i < depth; ++i) {
      auto v = BoolFormula::var(vars[i]);
      lits.push_back(((fixed >> i) & 1U) ? v : BoolFormula::negation(v));
    }
    cubes.push_back(BoolFormula::conj(std::move(lits)));
    return;
  }
  collect_cubes(vars, table, depth + 1, fixed, cubes);
  collect_cubes(vars, table, depth + 1, fixed | (std::size_t{1} << depth), cubes);
}

}  // namespace

BoolFormula formula_from_table(const std::vector<std::uint32_t>& vars,
                               const std::vector<bool>& table) {
  // drop variables the function does not depend on, then split
  std::vector<std::uint32_t> kept;
  std::vector<std::size_t> kept_bits;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      if (!(idx & bit) && table[idx] != table[idx | bit]) {
        kept.push_back(vars[i]);
        kept_bits.push_back(bit);
        break;
      }
    }
  }
  std::vector<bool> projected(std::size_t{1} << kept.size());
  for (std::size_t idx = 0; idx < projected.size(); ++idx) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if ((idx >> i) & 1U) full |= kept_bits[i];
    projected[idx] = table[full];
  }
  std::vector<BoolFormula> cubes;
  collect_cubes(kept, projected, 0, 0, cubes);
  return BoolFormula::disj(std::move(cubes));
}

}  // namespace hyperplan
