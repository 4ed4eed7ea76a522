#include "hyperplan/strips.hpp"

#include <algorithm>

namespace hyperplan {

StripsProblem::StripsProblem(std::vector<std::string> props, Bitset init, Bitset goals,
                             std::vector<StripsAction> actions)
    : props_(props, "proposition"),
      init_(std::move(init)),
      goals_(std::move(goals)),
      actions_(std::move(actions)) {
  const auto n = props_.size();
  if (init_.size() != n || goals_.size() != n)
    throw ValidationError("initial or goal set has wrong width");
  for (const auto& a : actions_) {
    if (action_ids_.find(a.name)) throw ValidationError("duplicate action '" + a.name + "'");
    action_ids_.intern(a.name);
    if (a.pre.size() != n) throw ValidationError("action '" + a.name + "' has wrong width");
    if (a.effects.empty()) throw ValidationError("action '" + a.name + "' has no effects");
    for (const auto& e : a.effects) {
      if (e.add.size() != n || e.del.size() != n)
        throw ValidationError("action '" + a.name + "': effect has wrong width");
      if (e.add.intersects(e.del))
        throw ValidationError("action '" + a.name + "': add and delete lists overlap");
      for (auto v : e.condition.vars())
        if (v >= n) throw ValidationError("action '" + a.name + "': condition atom out of range");
    }
  }
}

std::vector<Bitset> StripsProblem::apply(const Bitset& s, ActionId a) const {
  std::vector<Bitset> out;
  for (const auto& e : actions_.at(a).effects) {
    if (!e.condition.eval([&](std::uint32_t v) { return s.test(v); })) continue;
    out.push_back((s - e.del) | e.add);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool StripsProblem::applicable(const Bitset& s, ActionId a) const {
  const auto& act = actions_.at(a);
  if (!act.pre.is_subset_of(s)) return false;
  return std::any_of(act.effects.begin(), act.effects.end(), [&](const ConditionalEffect& e) {
    return e.condition.eval([&](std::uint32_t v) { return s.test(v); });
  });
}

std::string StripsProblem::format_state(const Bitset& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t p) {
    if (!first) out += ",";
    first = false;
    out += props_.name(static_cast<std::uint32_t>(p));
  });
  return out + "}";
}

Bitset StripsProblem::state_from_names(const std::vector<std::string>& names) const {
  Bitset s(props_.size());
  for (const auto& n : names) s.set(props_.at(n, "proposition"));
  return s;
}

std::vector<std::string> StripsProblem::partial_actions(std::size_t max_atoms) const {
  std::vector<std::string> out;
  for (const auto& a : actions_) {
    std::vector<BoolFormula> conds;
    for (const auto& e : a.effects) conds.push_back(e.condition);
    // Some state satisfying pre in which no condition fires?
    std::vector<BoolFormula> pre_lits;
    a.pre.for_each([&](std::size_t p) {
      pre_lits.push_back(BoolFormula::var(static_cast<std::uint32_t>(p)));
    });
    auto gap = BoolFormula::conj(
        {BoolFormula::conj(pre_lits), BoolFormula::negation(BoolFormula::disj(conds))});
    auto sat = satisfiable(gap, max_atoms);
    if (sat && *sat) out.push_back(a.name);
  }
  return out;
}

bool operator==(const StripsProblem& a, const StripsProblem& b) {
  if (!(a.props_ == b.props_) || !(a.init_ == b.init_) || !(a.goals_ == b.goals_) ||
      a.actions_.size() != b.actions_.size())
    return false;
  for (std::size_t i = 0; i < a.actions_.size(); ++i) {
    const auto& x = a.actions_[i];
    const auto& y = b.actions_[i];
    if (x.name != y.name || !(x.pre == y.pre) || x.effects.size() != y.effects.size()) return false;
    for (std::size_t j = 0; j < x.effects.size(); ++j) {
      const auto& e = x.effects[j];
      const auto& f = y.effects[j];
      if (!(e.condition == f.condition) || !(e.add == f.add) || !(e.del == f.del)) return false;
    }
  }
  return true;
}

std::vector<Bitset> strips_successors(const StripsProblem& p, const Bitset& s,
                                      const std::string& action) {
  auto a = p.action_id(action);
  if (!p.actions()[a].pre.is_subset_of(s)) throw NotApplicable(p.format_state(s), action);
  auto out = p.apply(s, a);
  if (out.empty()) throw EmptyEffect(p.format_state(s), action);
  return out;
}

}  // namespace hyperplan
