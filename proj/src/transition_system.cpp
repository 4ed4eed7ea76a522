#include "hyperplan/transition_system.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "hyperplan/error.hpp"

namespace hyperplan {

TransitionSystem::TransitionSystem(std::vector<std::string> locations, LocationId init,
                                   std::vector<std::string> directions,
                                   std::vector<LocationId> trans,
                                   const std::vector<std::vector<std::string>>& labels)
    : locations_(locations, "location"),
      init_(init),
      directions_(directions, "direction"),
      trans_(std::move(trans)) {
  const auto nl = locations_.size();
  const auto nd = directions_.size();
  if (nl == 0) throw ValidationError("transition system has no locations");
  if (nd == 0) throw ValidationError("transition system has no directions");
  if (init_ >= nl) throw ValidationError("initial location out of range");
  if (trans_.size() != nl * nd) throw ValidationError("transition function is not total");
  for (auto t : trans_)
    if (t >= nl) throw ValidationError("transition target out of range");
  if (labels.size() != nl) throw ValidationError("labels must cover every location");
  for (const auto& ls : labels)
    for (const auto& ap : ls) aps_.intern(ap);
  for (const auto& ls : labels) {
    Bitset b(aps_.size());
    for (const auto& ap : ls) b.set(*aps_.find(ap));
    labels_.push_back(std::move(b));
  }
}

std::vector<std::string> TransitionSystem::label_names(LocationId l) const {
  std::vector<std::string> out;
  labels_[l].for_each([&](std::size_t ap) { out.push_back(aps_.name(static_cast<std::uint32_t>(ap))); });
  return out;
}

bool TransitionSystem::has_label(LocationId l, const std::string& ap) const {
  auto id = aps_.find(ap);
  return id && labels_[l].test(*id);
}

bool operator==(const TransitionSystem& a, const TransitionSystem& b) {
  if (!(a.locations_ == b.locations_) || a.init_ != b.init_ || !(a.directions_ == b.directions_) ||
      a.trans_ != b.trans_)
    return false;
  for (LocationId l = 0; l < a.num_locations(); ++l) {
    auto x = a.label_names(l);
    auto y = b.label_names(l);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

SymbolicTS::SymbolicTS(std::vector<std::string> vars, Bitset init,
                       std::vector<GuardedDirection> directions)
    : vars_(vars, "variable"), init_(std::move(init)), directions_(std::move(directions)) {
  const auto n = vars_.size();
  if (init_.size() != n) throw ValidationError("initial valuation has wrong width");
  SymbolTable names;
  for (const auto& d : directions_) {
    if (names.find(d.name)) throw ValidationError("duplicate direction '" + d.name + "'");
    names.intern(d.name);
    if (d.pos.size() != n || d.neg.size() != n)
      throw ValidationError("direction '" + d.name + "' has wrong width");
    if (d.pos.intersects(d.neg))
      throw ValidationError("direction '" + d.name + "': pos and neg overlap");
    for (auto v : d.guard.vars())
      if (v >= n) throw ValidationError("direction '" + d.name + "': guard atom out of range");
  }
}

std::string SymbolicTS::format_state(const Bitset& v) const {
  std::string out = "{";
  bool first = true;
  v.for_each([&](std::size_t x) {
    if (!first) out += ",";
    first = false;
    out += vars_.name(static_cast<std::uint32_t>(x));
  });
  return out + "}";
}

Bitset SymbolicTS::state_from_names(const std::vector<std::string>& names) const {
  Bitset v(vars_.size());
  for (const auto& n : names) v.set(vars_.at(n, "variable"));
  return v;
}

bool operator==(const SymbolicTS& a, const SymbolicTS& b) {
  if (!(a.vars_ == b.vars_) || !(a.init_ == b.init_) ||
      a.directions_.size() != b.directions_.size())
    return false;
  for (std::size_t i = 0; i < a.directions_.size(); ++i) {
    const auto& x = a.directions_[i];
    const auto& y = b.directions_[i];
    if (x.name != y.name || !(x.guard == y.guard) || !(x.pos == y.pos) || !(x.neg == y.neg))
      return false;
  }
  return true;
}

std::vector<Bitset> sts_successors(const SymbolicTS& t, const Bitset& v) {
  std::vector<Bitset> out;
  for (const auto& d : t.directions()) {
    if (!d.guard.eval([&](std::uint32_t x) { return v.test(x); })) continue;
    out.push_back((v - d.neg) | d.pos);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::vector<Bitset>, bool> sts_reachable(const SymbolicTS& t, std::size_t cap) {
  std::vector<Bitset> order{t.init()};
  std::unordered_map<Bitset, std::size_t> seen{{t.init(), 0}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto succ = sts_successors(t, order[i]);
    if (succ.empty()) throw Deadlock(t.format_state(order[i]));
    for (auto& s : succ) {
      if (seen.contains(s)) continue;
      if (order.size() >= cap) return {std::move(order), true};
      seen.emplace(s, order.size());
      order.push_back(std::move(s));
    }
  }
  return {std::move(order), false};
}

TransitionSystem explicit_of_symbolic(const SymbolicTS& t) {
  auto [states, truncated] = sts_reachable(t);
  if (truncated) throw ValidationError("symbolic system too large for explicit expansion");
  std::unordered_map<Bitset, LocationId> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], static_cast<LocationId>(i));

  std::vector<std::vector<LocationId>> succ(states.size());
  std::size_t degree = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& s : sts_successors(t, states[i])) succ[i].push_back(index.at(s));
    degree = std::max(degree, succ[i].size());
  }

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  for (const auto& s : states) {
    names.push_back(t.format_state(s));
    std::vector<std::string> ls;
    s.for_each([&](std::size_t x) { ls.push_back(t.var_name(static_cast<std::uint32_t>(x))); });
    labels.push_back(std::move(ls));
  }
  std::vector<std::string> dirs;
  for (std::size_t d = 1; d <= degree; ++d) dirs.push_back(std::to_string(d));
  std::vector<LocationId> trans;
  trans.reserve(states.size() * degree);
  for (const auto& out : succ)
    for (std::size_t d = 0; d < degree; ++d) trans.push_back(d < out.size() ? out[d] : out.front());
  return TransitionSystem(std::move(names), 0, std::move(dirs), std::move(trans), labels);
}

}  // namespace hyperplan
