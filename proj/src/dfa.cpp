#include "hyperplan/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>

#include "hyperplan/error.hpp"

namespace hyperplan {

Dfa::Dfa(std::vector<IndexedAtom> atoms, std::vector<std::string> state_names, DfaState init,
         std::vector<std::vector<DfaEdge>> edges, std::vector<bool> accepting)
    : atoms_(std::move(atoms)),
      names_(std::move(state_names)),
      init_(init),
      edges_(std::move(edges)),
      accepting_(std::move(accepting)) {
  const auto n = names_.size();
  if (n == 0) throw ValidationError("automaton has no states");
  if (atoms_.size() > 31) throw AtomUniverseTooLarge(atoms_.size(), 31);
  if (init_ >= n || edges_.size() != n || accepting_.size() != n)
    throw ValidationError("automaton tables have inconsistent sizes");
  for (auto& out : edges_) {
    for (const auto& e : out) {
      if (e.to >= n) throw ValidationError("automaton edge target out of range");
      for (auto v : e.label.vars())
        if (v >= atoms_.size()) throw ValidationError("automaton edge label atom out of range");
    }
    std::sort(out.begin(), out.end(), [](const DfaEdge& a, const DfaEdge& b) { return a.to < b.to; });
  }
}

std::size_t Dfa::num_accepting() const {
  return static_cast<std::size_t>(std::count(accepting_.begin(), accepting_.end(), true));
}

BoolFormula Dfa::edge(DfaState q, DfaState to) const {
  for (const auto& e : edges_.at(q))
    if (e.to == to) return e.label;
  return BoolFormula::falsity();
}

DfaState Dfa::step(DfaState q, Letter letter) const {
  auto holds = [letter](std::uint32_t v) { return ((letter >> v) & 1U) != 0; };
  for (const auto& e : edges_[q])
    if (e.label.eval(holds)) return e.to;
  throw ValidationError("automaton is not total at state " + names_[q]);
}

int Dfa::atom_index(const IndexedAtom& a) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), a);
  return it == atoms_.end() ? -1 : static_cast<int>(it - atoms_.begin());
}

void Dfa::check_invariants() const {
  const Letter letters = Letter{1} << atoms_.size();
  for (DfaState q = 0; q < num_states(); ++q) {
    for (Letter l = 0; l < letters; ++l) {
      auto holds = [l](std::uint32_t v) { return ((l >> v) & 1U) != 0; };
      std::size_t hits = 0;
      DfaState to = 0;
      for (const auto& e : edges_[q]) {
        if (e.label.eval(holds)) {
          ++hits;
          to = e.to;
        }
      }
      if (hits != 1)
        throw ValidationError("state " + names_[q] + " has " + std::to_string(hits) +
                              " enabled edges on letter " + std::to_string(l));
      if (accepting_[q] && to != q)
        throw ValidationError("accepting state " + names_[q] + " is not a sink");
    }
  }
}

bool operator==(const Dfa& a, const Dfa& b) {
  if (a.atoms_ != b.atoms_ || a.names_ != b.names_ || a.init_ != b.init_ ||
      a.accepting_ != b.accepting_)
    return false;
  for (std::size_t q = 0; q < a.edges_.size(); ++q) {
    const auto& x = a.edges_[q];
    const auto& y = b.edges_[q];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].to != y[i].to || !(x[i].label == y[i].label)) return false;
  }
  return true;
}

namespace {

using Kind = LtlBody::Kind;

struct Leaf {
  Kind kind;        // kAtom, kNext or kUntil
  std::uint32_t atom = 0;
  LtlBody node;
  BoolFormula first;   // X: encoded operand; U: encoded left operand
  BoolFormula second;  // U: encoded right operand
};

class Compiler {
 public:
  Compiler(const LtlBody& nnf, std::vector<IndexedAtom> atoms, std::size_t leaf_cap)
      : atoms_(std::move(atoms)), leaf_cap_(leaf_cap) {
    root_ = encode(nnf);
  }

  Dfa run() {
    const Letter letters = Letter{1} << atoms_.size();
    std::vector<BoolFormula> residuals;
    std::vector<std::string> names;
    std::unordered_map<std::string, DfaState> index;
    auto intern = [&](const BoolFormula& r) {
      auto [key, rep] = canonical(r);
      auto [it, inserted] = index.emplace(key, static_cast<DfaState>(residuals.size()));
      if (inserted) {
        residuals.push_back(rep);
        names.push_back(name_of(rep));
      }
      return it->second;
    };
    intern(root_);

    std::vector<std::vector<DfaState>> target;
    for (std::size_t q = 0; q < residuals.size(); ++q) {
      std::vector<DfaState> row(letters);
      for (Letter l = 0; l < letters; ++l) {
        memo_.assign(leaves_.size(), std::nullopt);
        row[l] = intern(derive(residuals[q], l));
      }
      target.push_back(std::move(row));
    }

    std::vector<std::uint32_t> atom_ids(atoms_.size());
    for (std::uint32_t i = 0; i < atom_ids.size(); ++i) atom_ids[i] = i;
    std::vector<std::vector<DfaEdge>> edges(residuals.size());
    std::vector<bool> accepting(residuals.size());
    for (std::size_t q = 0; q < residuals.size(); ++q) {
      accepting[q] = residuals[q].is_true();
      std::map<DfaState, std::vector<bool>> tables;
      for (Letter l = 0; l < letters; ++l) {
        auto& t = tables[target[q][l]];
        if (t.empty()) t.assign(letters, false);
        t[l] = true;
      }
      for (const auto& [to, t] : tables) edges[q].push_back({to, formula_from_table(atom_ids, t)});
    }
    return Dfa(atoms_, std::move(names), 0, std::move(edges), std::move(accepting));
  }

 private:
  BoolFormula encode(const LtlBody& b) {
    switch (b.kind()) {
      case Kind::kTrue: return BoolFormula::truth();
      case Kind::kFalse: return BoolFormula::falsity();
      case Kind::kAtom: return BoolFormula::var(atom_leaf(b));
      case Kind::kNot: return BoolFormula::negation(encode(b.child(0)));
      case Kind::kAnd: return BoolFormula::conj({encode(b.child(0)), encode(b.child(1))});
      case Kind::kOr: return BoolFormula::disj({encode(b.child(0)), encode(b.child(1))});
      case Kind::kNext:
      case Kind::kUntil: return BoolFormula::var(temporal_leaf(b));
      default: throw ValidationError("unexpected operator in normalized body");
    }
  }

  std::uint32_t atom_leaf(const LtlBody& b) {
    auto key = b.to_string();
    if (auto it = leaf_ids_.find(key); it != leaf_ids_.end()) return it->second;
    auto pos = std::find(atoms_.begin(), atoms_.end(), b.atom()) - atoms_.begin();
    return add_leaf(key, Leaf{Kind::kAtom, static_cast<std::uint32_t>(pos), b, {}, {}});
  }

  std::uint32_t temporal_leaf(const LtlBody& b) {
    auto key = b.to_string();
    if (auto it = leaf_ids_.find(key); it != leaf_ids_.end()) return it->second;
    auto id = add_leaf(key, Leaf{b.kind(), 0, b, {}, {}});
    auto first = encode(b.child(0));
    auto second = b.kind() == Kind::kUntil ? encode(b.child(1)) : BoolFormula::falsity();
    leaves_[id].first = first;
    leaves_[id].second = second;
    return id;
  }

  std::uint32_t add_leaf(const std::string& key, Leaf leaf) {
    auto id = static_cast<std::uint32_t>(leaves_.size());
    if (leaves_.size() + 1 > leaf_cap_) throw AtomUniverseTooLarge(leaves_.size() + 1, leaf_cap_);
    leaves_.push_back(std::move(leaf));
    leaf_ids_.emplace(key, id);
    return id;
  }

  BoolFormula derive(const BoolFormula& r, Letter l) {
    return r.substitute([&](std::uint32_t v) { return derive_leaf(v, l); });
  }

  BoolFormula derive_leaf(std::uint32_t v, Letter l) {
    if (memo_[v]) return *memo_[v];
    const auto& leaf = leaves_[v];
    BoolFormula out;
    switch (leaf.kind) {
      case Kind::kAtom: out = BoolFormula::constant(((l >> leaf.atom) & 1U) != 0); break;
      case Kind::kNext: out = leaf.first; break;
      default:
        out = BoolFormula::disj(
            {derive(leaf.second, l), BoolFormula::conj({derive(leaf.first, l), BoolFormula::var(v)})});
    }
    memo_[v] = out;
    return out;
  }

  // Key = essential leaves plus their truth table; the representative is
  // rebuilt from the table so equal keys give equal formulas.
  std::pair<std::string, BoolFormula> canonical(const BoolFormula& r) const {
    auto vars = r.vars();
    std::vector<bool> table(std::size_t{1} << vars.size());
    for (std::size_t row = 0; row < table.size(); ++row) {
      table[row] = r.eval([&](std::uint32_t v) {
        auto pos = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
        return ((row >> pos) & 1U) != 0;
      });
    }
    auto rep = formula_from_table(vars, table);
    auto kept = rep.vars();
    std::string key;
    for (auto v : kept) key += std::to_string(v) + ",";
    key += "|";
    for (std::size_t row = 0; row < (std::size_t{1} << kept.size()); ++row) {
      bool value = rep.eval([&](std::uint32_t v) {
        auto pos = std::lower_bound(kept.begin(), kept.end(), v) - kept.begin();
        return ((row >> pos) & 1U) != 0;
      });
      key += value ? '1' : '0';
    }
    return {key, rep};
  }

  std::string name_of(const BoolFormula& r) const {
    return r.to_string([&](std::uint32_t v) {
      const auto& leaf = leaves_[v];
      if (leaf.kind == Kind::kAtom) return leaf.node.to_string();
      return "[" + leaf.node.to_string() + "]";
    });
  }

  std::vector<IndexedAtom> atoms_;
  std::size_t leaf_cap_;
  std::vector<Leaf> leaves_;
  std::unordered_map<std::string, std::uint32_t> leaf_ids_;
  std::vector<std::optional<BoolFormula>> memo_;
  BoolFormula root_;
};

std::vector<IndexedAtom> ordered_atoms(const LtlBody& b, const std::vector<std::string>& order) {
  auto atoms = b.atoms();
  auto rank = [&](const IndexedAtom& a) {
    auto it = std::find(order.begin(), order.end(), a.path);
    return static_cast<std::size_t>(it - order.begin());
  };
  std::stable_sort(atoms.begin(), atoms.end(), [&](const IndexedAtom& x, const IndexedAtom& y) {
    auto rx = rank(x);
    auto ry = rank(y);
    if (rx != ry) return rx < ry;
    return x < y;
  });
  return atoms;
}

}  // namespace

Dfa compile_to_dfa(const LtlBody& body, const DfaOptions& opts) {
  check_cosafety(body);
  auto nnf = to_nnf(body);
  auto atoms = ordered_atoms(nnf, opts.path_order);
  if (atoms.size() > opts.atom_cap) throw AtomUniverseTooLarge(atoms.size(), opts.atom_cap);
  Compiler c(nnf, std::move(atoms), opts.leaf_cap);
  auto d = c.run();
  return opts.minimize ? minimize(d) : d;
}

Dfa compile_to_dfa(const HyperFormula& f, DfaOptions opts) {
  f.validate();
  opts.path_order = f.path_vars();
  return compile_to_dfa(f.body, opts);
}

Dfa minimize(const Dfa& d) {
  const auto n = d.num_states();
  const Letter letters = Letter{1} << d.atoms().size();
  std::vector<std::vector<DfaState>> next(n, std::vector<DfaState>(letters));
  for (DfaState q = 0; q < n; ++q)
    for (Letter l = 0; l < letters; ++l) next[q][l] = d.step(q, l);

  std::vector<std::uint32_t> cls(n);
  for (DfaState q = 0; q < n; ++q) cls[q] = d.accepting(q) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
    std::vector<std::uint32_t> refined(n);
    for (DfaState q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig{cls[q]};
      for (Letter l = 0; l < letters; ++l) sig.push_back(cls[next[q][l]]);
      auto [it, _] = sig_ids.emplace(std::move(sig), static_cast<std::uint32_t>(sig_ids.size()));
      refined[q] = it->second;
    }
    cls = std::move(refined);
    if (sig_ids.size() == count) break;
    count = sig_ids.size();
  }

  // renumber classes by smallest member
  std::vector<int> new_id(n, -1);
  std::vector<DfaState> leader;
  for (DfaState q = 0; q < n; ++q) {
    if (new_id[cls[q]] < 0) {
      new_id[cls[q]] = static_cast<int>(leader.size());
      leader.push_back(q);
    }
  }
  std::vector<std::uint32_t> atom_ids(d.atoms().size());
  for (std::uint32_t i = 0; i < atom_ids.size(); ++i) atom_ids[i] = i;
  std::vector<std::string> names;
  std::vector<std::vector<DfaEdge>> edges;
  std::vector<bool> accepting;
  for (auto q : leader) {
    names.push_back(d.state_name(q));
    accepting.push_back(d.accepting(q));
    std::map<DfaState, std::vector<bool>> tables;
    for (Letter l = 0; l < letters; ++l) {
      auto to = static_cast<DfaState>(new_id[cls[next[q][l]]]);
      auto& t = tables[to];
      if (t.empty()) t.assign(letters, false);
      t[l] = true;
    }
    std::vector<DfaEdge> out;
    for (const auto& [to, t] : tables) out.push_back({to, formula_from_table(atom_ids, t)});
    edges.push_back(std::move(out));
  }
  return Dfa(d.atoms(), std::move(names), static_cast<DfaState>(new_id[cls[d.init()]]),
             std::move(edges), std::move(accepting));
}

bool dfa_accepts_prefix(const Dfa& d, const std::vector<Letter>& word) {
  auto q = d.init();
  if (d.accepting(q)) return true;
  for (auto l : word) {
    q = d.step(q, l);
    if (d.accepting(q)) return true;
  }
  return false;
}

}  // namespace hyperplan
