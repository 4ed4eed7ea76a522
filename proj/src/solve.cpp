#include "hyperplan/solve.hpp"

#include <cstdio>
#include <functional>

#include "hyperplan/encode_forward.hpp"
#include "hyperplan/error.hpp"

namespace hyperplan {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kSat: return "SAT";
    case Verdict::kUnsat: return "UNSAT";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string format_stats(const SolveStats& s) {
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", s.wall_ms);
  return "beliefs=" + std::to_string(s.explored) + " frontier_peak=" + std::to_string(s.frontier_peak) +
         " wall_ms=" + wall;
}

namespace {

// Self-composition of t with itself k times, tracked together with the
// automaton. Kept separate from the planning encoding on purpose.
class Product {
 public:
  Product(const TransitionSystem& t, const HyperFormula& f, const Dfa& d)
      : t_(t), d_(d), n_(f.exist_vars.size()), k_(f.num_paths()) {
    f.validate();
    if (k_ == 0) throw ValidationError("formula must quantify at least one path");
    for (const auto& a : d.atoms()) {
      auto ap = t.aps().find(a.prop);
      reads_.push_back({f.path_index(a.path), ap ? static_cast<int>(*ap) : -1});
    }
    double span = static_cast<double>(d.num_states());
    for (std::size_t i = 0; i < k_; ++i) span *= static_cast<double>(t.num_locations());
    if (span > 1.8e19) throw ValidationError("product too large for the oracle");
    dirs_ = t.num_directions();
  }

  std::size_t paths() const { return k_; }
  std::size_t exist() const { return n_; }
  std::size_t dirs() const { return dirs_; }

  std::uint64_t initial() const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < k_; ++i) code = code * t_.num_locations() + t_.init();
    return code * d_.num_states() + d_.init();
  }

  bool accepting(std::uint64_t code) const {
    return d_.accepting(static_cast<DfaState>(code % d_.num_states()));
  }

  /// All successors of `code` when the existential copies follow `exist`.
  void expand(std::uint64_t code, const std::vector<std::uint32_t>& exist,
              std::vector<std::uint64_t>& out) const {
    std::vector<LocationId> locs(k_);
    auto q = static_cast<DfaState>(code % d_.num_states());
    code /= d_.num_states();
    for (std::size_t i = k_; i > 0; --i) {
      locs[i - 1] = static_cast<LocationId>(code % t_.num_locations());
      code /= t_.num_locations();
    }
    Letter letter = 0;
    for (std::size_t i = 0; i < reads_.size(); ++i) {
      const auto [path, ap] = reads_[i];
      if (ap >= 0 && t_.label(locs[path]).test(static_cast<std::size_t>(ap))) letter |= Letter{1} << i;
    }
    const DfaState q2 = d_.step(q, letter);
    std::vector<LocationId> moved(k_);
    for (std::size_t i = 0; i < n_; ++i) moved[i] = t_.succ(locs[i], exist[i]);
    // odometer over universal directions
    std::vector<std::uint32_t> u(k_ - n_, 0);
    while (true) {
      for (std::size_t j = n_; j < k_; ++j) moved[j] = t_.succ(locs[j], u[j - n_]);
      std::uint64_t c = 0;
      for (auto l : moved) c = c * t_.num_locations() + l;
      out.push_back(c * d_.num_states() + q2);
      std::size_t j = u.size();
      while (j > 0 && ++u[j - 1] == dirs_) u[--j] = 0;
      if (j == 0) break;
    }
  }

  std::vector<std::string> move_names(const std::vector<std::uint32_t>& exist) const {
    std::vector<std::string> out;
    for (auto dir : exist) out.push_back(t_.direction_name(dir));
    return out;
  }

 private:
  const TransitionSystem& t_;
  const Dfa& d_;
  std::size_t n_;
  std::size_t k_;
  std::size_t dirs_ = 0;
  std::vector<std::pair<std::size_t, int>> reads_;
};

struct CodeVectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SolveResult mc_oracle(const TransitionSystem& t, const HyperFormula& f, const SearchOptions& opts) {
  return mc_oracle(t, f, compile_to_dfa(f), opts);
}

SolveResult mc_oracle(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                      const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Product prod(t, f, d);
  const auto moves = all_vectors(prod.dirs(), prod.exist());
  auto all_accepting = [&](const std::vector<std::uint64_t>& b) {
    return std::all_of(b.begin(), b.end(), [&](std::uint64_t c) { return prod.accepting(c); });
  };

  std::vector<std::vector<std::uint64_t>> beliefs{{prod.initial()}};
  std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, CodeVectorHash> seen{{beliefs[0], 0}};
  SolveResult r;
  auto done = [&](std::optional<std::size_t> hit) {
    r.stats.explored = beliefs.size();
    r.stats.wall_ms = detail::elapsed_ms(start);
    r.verdict = hit ? Verdict::kSat : Verdict::kUnsat;
    if (hit) {
      std::vector<std::vector<std::string>> w;
      for (auto b = *hit; b != 0; b = parent[b].first) w.push_back(prod.move_names(moves[parent[b].second]));
      std::reverse(w.begin(), w.end());
      r.moves = std::move(w);
    }
    return r;
  };
  if (all_accepting(beliefs[0])) return done(0);

  std::deque<std::size_t> queue{0};
  r.stats.frontier_peak = 1;
  std::vector<std::uint64_t> next;
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      next.clear();
      for (auto c : beliefs[b]) prod.expand(c, moves[mv], next);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (seen.contains(next)) continue;
      if (beliefs.size() >= opts.max_beliefs) throw ResourceLimit(beliefs.size());
      const auto id = beliefs.size();
      seen.emplace(next, id);
      beliefs.push_back(next);
      parent.emplace_back(b, mv);
      if (all_accepting(next)) return done(id);
      queue.push_back(id);
      r.stats.frontier_peak = std::max(r.stats.frontier_peak, queue.size());
    }
  }
  return done(std::nullopt);
}

SolveResult enum_oracle(const TransitionSystem& t, const HyperFormula& f, const OracleConfig& cfg) {
  return enum_oracle(t, f, compile_to_dfa(f), cfg);
}

SolveResult enum_oracle(const TransitionSystem& t, const HyperFormula& f, const Dfa& d,
                        const OracleConfig& cfg) {
  if (cfg.enum_bound < 1) throw ValidationError("enumeration bound must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  Product prod(t, f, d);
  const auto moves = all_vectors(prod.dirs(), prod.exist());
  const std::size_t bound = cfg.enum_bound;
  SolveResult r;
  r.verdict = Verdict::kUnknown;

  // every universal run of length seq.size() under `seq` hits acceptance
  std::function<bool(std::uint64_t, const std::vector<std::size_t>&, std::size_t)> covered =
      [&](std::uint64_t code, const std::vector<std::size_t>& seq, std::size_t step) {
        if (prod.accepting(code)) return true;
        if (step == seq.size()) return false;
        std::vector<std::uint64_t> succ;
        prod.expand(code, moves[seq[step]], succ);
        for (auto c : succ)
          if (!covered(c, seq, step + 1)) return false;
        return true;
      };

  std::vector<std::size_t> seq;
  std::function<bool()> search = [&]() {
    ++r.stats.explored;
    if (covered(prod.initial(), seq, 0)) return true;
    if (seq.size() == bound) return false;
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      seq.push_back(mv);
      if (search()) return true;
      seq.pop_back();
    }
    return false;
  };
  if (search()) {
    r.verdict = Verdict::kSat;
    std::vector<std::vector<std::string>> w;
    for (auto mv : seq) w.push_back(prod.move_names(moves[mv]));
    r.moves = std::move(w);
  }
  r.stats.wall_ms = detail::elapsed_ms(start);
  return r;
}

bool semantics_equiv_check(const SymbolicTS& t, const HyperFormula& f, const SearchOptions& opts) {
  auto d = compile_to_dfa(f);
  auto symbolic = conformant_search(encode_symbolic(t, f, d), opts);
  auto expanded = conformant_search(encode_explicit(explicit_of_symbolic(t), f, d), opts);
  return symbolic.verdict == expanded.verdict;
}

}  // namespace hyperplan
