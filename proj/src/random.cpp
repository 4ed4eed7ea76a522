#include "hyperplan/random.hpp"

#include <algorithm>

namespace hyperplan {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[uniform(rng, 0, xs.size() - 1)];
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Bitset random_subset(Rng& rng, std::size_t n, double p) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng, p)) b.set(i);
  return b;
}

}  // namespace

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

TransitionSystem random_ts(Rng& rng, const TsGenOptions& opts) {
  const auto nl = uniform(rng, opts.min_locations, opts.max_locations);
  const auto nd = uniform(rng, opts.min_dirs, opts.max_dirs);
  std::vector<LocationId> trans(nl * nd);
  for (auto& t : trans) t = static_cast<LocationId>(uniform(rng, 0, nl - 1));
  std::vector<std::vector<std::string>> labels(nl);
  for (auto& l : labels)
    for (const auto& ap : opts.aps)
      if (coin(rng)) l.push_back(ap);
  return TransitionSystem(numbered("l", nl), 0, numbered("d", nd), std::move(trans), labels);
}

HyperFormula random_formula(Rng& rng, const FormulaGenOptions& opts) {
  const auto k = uniform(rng, 1, std::max<std::size_t>(opts.max_quants, 1));
  const auto n = uniform(rng, 0, k);
  HyperFormula f;
  for (std::size_t i = 0; i < k; ++i) (i < n ? f.exist_vars : f.univ_vars).push_back("p" + std::to_string(i + 1));
  const auto vars = f.path_vars();

  auto atom = [&] { return LtlBody::atom(pick(rng, opts.aps), pick(rng, vars)); };
  auto literal = [&] { return coin(rng, 0.3) ? LtlBody::negation(atom()) : atom(); };
  auto clause = [&] { return coin(rng) ? literal() : LtlBody::conj(literal(), literal()); };

  switch (uniform(rng, 0, 6)) {
    case 0: f.body = LtlBody::eventually(literal()); break;
    case 1: f.body = LtlBody::eventually(LtlBody::conj(literal(), literal())); break;
    case 2: f.body = LtlBody::disj(LtlBody::eventually(clause()), LtlBody::eventually(clause())); break;
    case 3: f.body = LtlBody::next(LtlBody::eventually(literal())); break;
    case 4: f.body = LtlBody::eventually(LtlBody::conj(literal(), LtlBody::next(literal()))); break;
    case 5: f.body = LtlBody::until(literal(), literal()); break;
    default: f.body = LtlBody::conj(literal(), LtlBody::next(LtlBody::eventually(clause()))); break;
  }
  return f;
}

PlanningProblem random_problem(Rng& rng, const ProblemGenOptions& opts) {
  const auto ns = uniform(rng, opts.min_states, opts.max_states);
  const auto na = uniform(rng, opts.min_actions, opts.max_actions);
  Bitset goals = random_subset(rng, ns, 0.35);
  std::vector<Action> actions;
  for (std::size_t a = 0; a < na; ++a) {
    Action act{std::string(1, static_cast<char>('a' + a)), Bitset(ns), std::vector<std::vector<StateId>>(ns)};
    for (std::size_t s = 0; s < ns; ++s) {
      if (!coin(rng, 0.7)) continue;
      act.pre.set(s);
      auto& e = act.eff[s];
      for (std::size_t t = 0; t < ns; ++t)
        if (coin(rng, 0.35)) e.push_back(static_cast<StateId>(t));
      if (e.empty()) e.push_back(static_cast<StateId>(uniform(rng, 0, ns - 1)));
      if (goals.test(s)) {
        std::erase_if(e, [&](StateId t) { return !goals.test(t); });
        if (e.empty()) e.push_back(static_cast<StateId>(s));
      }
    }
    actions.push_back(std::move(act));
  }
  return PlanningProblem(numbered("s", ns), 0, goals, std::move(actions));
}

namespace {

BoolFormula random_guard(Rng& rng, std::size_t nv) {
  auto lit = [&] {
    auto v = BoolFormula::var(static_cast<std::uint32_t>(uniform(rng, 0, nv - 1)));
    return coin(rng) ? v : BoolFormula::negation(v);
  };
  switch (uniform(rng, 0, 3)) {
    case 0: return BoolFormula::truth();
    case 1: return BoolFormula::conj({lit(), lit()});
    default: return lit();
  }
}

void random_update(Rng& rng, std::size_t nv, Bitset& pos, Bitset& neg) {
  pos = Bitset(nv);
  neg = Bitset(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    switch (uniform(rng, 0, 2)) {
      case 0: pos.set(i); break;
      case 1: neg.set(i); break;
      default: break;
    }
  }
}

}  // namespace

SymbolicTS random_sts(Rng& rng, const SymbolicGenOptions& opts) {
  const auto nv = uniform(rng, opts.min_vars, opts.max_vars);
  const auto nd = uniform(rng, opts.min_dirs, opts.max_dirs);
  std::vector<GuardedDirection> dirs;
  for (std::size_t d = 0; d < nd; ++d) {
    GuardedDirection g{"d" + std::to_string(d), d == 0 ? BoolFormula::truth() : random_guard(rng, nv), {}, {}};
    random_update(rng, nv, g.pos, g.neg);
    dirs.push_back(std::move(g));
  }
  return SymbolicTS(numbered("x", nv), random_subset(rng, nv, 0.5), std::move(dirs));
}

StripsProblem random_strips(Rng& rng, const SymbolicGenOptions& opts) {
  const auto np = uniform(rng, opts.min_vars, opts.max_vars);
  const auto na = uniform(rng, opts.min_dirs, opts.max_dirs);
  Bitset goals = random_subset(rng, np, 0.4);
  if (!goals.any()) goals.set(uniform(rng, 0, np - 1));
  Bitset init = random_subset(rng, np, 0.3) - goals;
  std::vector<StripsAction> actions;
  for (std::size_t a = 0; a < na; ++a) {
    StripsAction act{std::string(1, static_cast<char>('a' + a)), random_subset(rng, np, 0.2), {}};
    const auto ne = uniform(rng, 1, 2);
    for (std::size_t e = 0; e < ne; ++e) {
      ConditionalEffect eff{random_guard(rng, np), Bitset(np), Bitset(np)};
      random_update(rng, np, eff.add, eff.del);
      eff.del -= goals;
      act.effects.push_back(std::move(eff));
    }
    actions.push_back(std::move(act));
  }
  return StripsProblem(numbered("p", np), init, goals, std::move(actions));
}

}  // namespace hyperplan
