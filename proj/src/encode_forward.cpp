#include "hyperplan/encode_forward.hpp"

#include <deque>
#include <unordered_map>

#include "hyperplan/error.hpp"

namespace hyperplan {

namespace {

struct AtomSource {
  std::size_t path;
  std::optional<std::uint32_t> ap;  // nullopt: never holds
};

std::vector<AtomSource> atom_sources(const TransitionSystem& t, const HyperFormula& f,
                                     const Dfa& d) {
  std::vector<AtomSource> out;
  for (const auto& a : d.atoms()) out.push_back({f.path_index(a.path), t.aps().find(a.prop)});
  return out;
}

Letter letter_of(const TransitionSystem& t, const std::vector<AtomSource>& src,
                 const std::vector<LocationId>& locs) {
  Letter l = 0;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i].ap && t.label(locs[src[i].path]).test(*src[i].ap)) l |= Letter{1} << i;
  return l;
}

void check_arity(const HyperFormula& f) {
  f.validate();
  if (f.num_paths() == 0) throw ValidationError("formula must quantify at least one path");
}

std::string product_name(const TransitionSystem& t, const std::vector<LocationId>& locs,
                         DfaState q) {
  std::string s = "<";
  for (std::size_t i = 0; i < locs.size(); ++i) {
    if (i > 0) s += ",";
    s += t.location_name(locs[i]);
  }
  return s + "|" + std::to_string(q) + ">";
}

}  // namespace

std::vector<std::vector<std::uint32_t>> all_vectors(std::size_t base, std::size_t arity) {
  std::vector<std::vector<std::uint32_t>> out;
  if (base == 0 && arity > 0) return out;
  std::vector<std::uint32_t> cur(arity, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++cur[i] < base) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (arity == 0) return out;
  }
}

std::string vector_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ",";
    s += parts[i];
  }
  return s + ")";
}

Letter product_letter(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                      const std::vector<LocationId>& locs) {
  return letter_of(t, atom_sources(t, f, d), locs);
}

PlanningProblem encode_explicit(const TransitionSystem& t, const HyperFormula& f,
                                const ExplicitEncodingOptions& opts) {
  return encode_explicit(t, f, compile_to_dfa(f, opts.dfa), opts);
}

PlanningProblem encode_explicit(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                                const ExplicitEncodingOptions& opts) {
  check_arity(f);
  const std::size_t n = f.exist_vars.size();
  const std::size_t m = f.univ_vars.size();
  const std::size_t k = n + m;
  const std::size_t nl = t.num_locations();
  const auto src = atom_sources(t, f, d);
  const auto exist_vecs = all_vectors(t.num_directions(), n);
  const auto univ_vecs = all_vectors(t.num_directions(), m);

  // product states are packed as (mixed-radix location tuple) * |Q| + q
  std::vector<std::uint64_t> order;
  std::unordered_map<std::uint64_t, StateId> ids;
  auto pack = [&](const std::vector<LocationId>& locs, DfaState q) {
    std::uint64_t code = 0;
    for (auto l : locs) code = code * nl + l;
    return code * d.num_states() + q;
  };
  auto unpack = [&](std::uint64_t code, std::vector<LocationId>& locs) {
    auto q = static_cast<DfaState>(code % d.num_states());
    code /= d.num_states();
    for (std::size_t i = k; i > 0; --i) {
      locs[i - 1] = static_cast<LocationId>(code % nl);
      code /= nl;
    }
    return q;
  };
  auto intern = [&](std::uint64_t code) {
    auto [it, inserted] = ids.emplace(code, static_cast<StateId>(order.size()));
    if (inserted) order.push_back(code);
    return it->second;
  };

  double total = static_cast<double>(d.num_states());
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(nl);
  if (total > 1e18) throw ValidationError("product state space too large to encode");

  std::vector<LocationId> start(k, t.init());
  intern(pack(start, d.init()));
  if (!opts.reachable_only) {
    const auto all = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 0; code < all; ++code) intern(code);
  }

  std::vector<std::vector<std::vector<StateId>>> eff;  // [state][action]
  std::vector<LocationId> locs(k), next(k);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    auto q = unpack(order[idx], locs);
    auto q2 = d.step(q, letter_of(t, src, locs));
    std::vector<std::vector<StateId>> row;
    for (const auto& ev : exist_vecs) {
      std::vector<StateId> out;
      for (std::size_t i = 0; i < n; ++i) next[i] = t.succ(locs[i], ev[i]);
      for (const auto& uv : univ_vecs) {
        for (std::size_t j = 0; j < m; ++j) next[n + j] = t.succ(locs[n + j], uv[j]);
        out.push_back(intern(pack(next, q2)));
      }
      row.push_back(std::move(out));
    }
    eff.push_back(std::move(row));
  }

  std::vector<std::string> names;
  Bitset goals(order.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    auto q = unpack(order[idx], locs);
    names.push_back(product_name(t, locs, q));
    if (d.accepting(q)) goals.set(idx);
  }
  std::vector<Action> actions;
  for (std::size_t a = 0; a < exist_vecs.size(); ++a) {
    std::vector<std::string> parts;
    for (auto dir : exist_vecs[a]) parts.push_back(t.direction_name(dir));
    Action act{vector_name(parts), Bitset(order.size()), std::vector<std::vector<StateId>>(order.size())};
    for (std::size_t s = 0; s < order.size(); ++s) {
      act.pre.set(s);
      act.eff[s] = std::move(eff[s][a]);
    }
    actions.push_back(std::move(act));
  }
  return PlanningProblem(std::move(names), 0, std::move(goals), std::move(actions));
}

std::size_t unrestricted_state_count(const TransitionSystem& t, const HyperFormula& f,
                                     const Dfa& d) {
  std::size_t out = d.num_states();
  for (std::size_t i = 0; i < f.num_paths(); ++i) out *= t.num_locations();
  return out;
}

BoolFormula index_formula(const BoolFormula& g, std::size_t path, std::size_t num_vars) {
  return g.rename([&](std::uint32_t x) { return static_cast<std::uint32_t>(path * num_vars + x); });
}

StripsProblem encode_symbolic(const SymbolicTS& t, const HyperFormula& f,
                              const SymbolicEncodingOptions& opts) {
  return encode_symbolic(t, f, compile_to_dfa(f, opts.dfa), opts);
}

StripsProblem encode_symbolic(const SymbolicTS& t, const HyperFormula& f, const Dfa& d,
                              const SymbolicEncodingOptions& opts) {
  check_arity(f);
  sts_reachable(t, opts.deadlock_check_cap);  // throws Deadlock

  const std::size_t n = f.exist_vars.size();
  const std::size_t m = f.univ_vars.size();
  const std::size_t k = n + m;
  const std::size_t nx = t.num_vars();
  const std::size_t nq = d.num_states();
  const auto paths = f.path_vars();
  const auto qvar = [&](DfaState q) { return static_cast<std::uint32_t>(k * nx + q); };

  std::vector<std::string> props;
  for (std::size_t j = 0; j < k; ++j)
    for (std::uint32_t x = 0; x < nx; ++x) props.push_back(t.var_name(x) + "@" + paths[j]);
  for (std::size_t q = 0; q < nq; ++q) props.push_back("q" + std::to_string(q));
  const std::size_t np = props.size();

  Bitset init(np);
  for (std::size_t j = 0; j < k; ++j) t.init().for_each([&](std::size_t x) { init.set(j * nx + x); });
  init.set(qvar(d.init()));
  Bitset goals(np);
  for (DfaState q = 0; q < nq; ++q)
    if (d.accepting(q)) goals.set(qvar(q));

  // atom i of the automaton as a formula over indexed variables
  std::vector<BoolFormula> atom_vars;
  for (const auto& a : d.atoms()) {
    auto x = t.vars().find(a.prop);
    atom_vars.push_back(x ? BoolFormula::var(static_cast<std::uint32_t>(f.path_index(a.path) * nx + *x))
                          : BoolFormula::falsity());
  }
  std::vector<std::vector<BoolFormula>> edge(nq, std::vector<BoolFormula>(nq));
  for (DfaState q = 0; q < nq; ++q)
    for (DfaState q2 = 0; q2 < nq; ++q2)
      edge[q][q2] = d.edge(q, q2).substitute([&](std::uint32_t i) { return atom_vars[i]; });

  const auto& dirs = t.directions();
  const auto exist_vecs = all_vectors(dirs.size(), n);
  const auto univ_vecs = all_vectors(dirs.size(), m);

  std::vector<StripsAction> actions;
  for (const auto& ev : exist_vecs) {
    std::vector<std::string> parts;
    for (auto dir : ev) parts.push_back(dirs[dir].name);
    StripsAction act{vector_name(parts), Bitset(np), {}};
    std::optional<ConditionalEffect> fallback;
    for (const auto& uv : univ_vecs) {
      std::vector<BoolFormula> guards;
      Bitset pos(np), neg(np);
      for (std::size_t j = 0; j < k; ++j) {
        const auto& dir = dirs[j < n ? ev[j] : uv[j - n]];
        guards.push_back(index_formula(dir.guard, j, nx));
        dir.pos.for_each([&](std::size_t x) { pos.set(j * nx + x); });
        dir.neg.for_each([&](std::size_t x) { neg.set(j * nx + x); });
      }
      auto guard = BoolFormula::conj(guards);
      for (DfaState q = 0; q < nq; ++q) {
        for (DfaState q2 = 0; q2 < nq; ++q2) {
          ConditionalEffect e{
              BoolFormula::conj({BoolFormula::var(qvar(q)), edge[q][q2], guard}), pos, neg};
          if (q != q2) {
            e.add.set(qvar(q2));
            e.del.set(qvar(q));
          }
          if (opts.prune_unsatisfiable) {
            auto sat = satisfiable(e.condition, 20);
            if (sat && !*sat) {
              if (!fallback) fallback = e;
              continue;
            }
          }
          act.effects.push_back(std::move(e));
        }
      }
    }
    if (act.effects.empty()) act.effects.push_back(*fallback);
    actions.push_back(std::move(act));
  }
  return StripsProblem(std::move(props), std::move(init), std::move(goals), std::move(actions));
}

}  // namespace hyperplan
