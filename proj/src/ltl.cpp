#include "hyperplan/ltl.hpp"

#include <algorithm>
#include <set>

#include "hyperplan/error.hpp"

namespace hyperplan {

struct LtlBody::Node {
  Kind kind;
  IndexedAtom atom;
  std::vector<LtlBody> kids;
};

namespace {

using Kind = LtlBody::Kind;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

bool bare(const LtlBody& b) {
  return b.kind() == Kind::kAtom || b.kind() == Kind::kTrue || b.kind() == Kind::kFalse;
}

void emit(const LtlBody& b, std::string& out) {
  auto operand = [&](const LtlBody& c) {
    if (bare(c)) {
      emit(c, out);
    } else {
      out += '(';
      emit(c, out);
      out += ')';
    }
  };
  auto binary = [&](const char* op) {
    operand(b.child(0));
    out += op;
    operand(b.child(1));
  };
  switch (b.kind()) {
    case Kind::kTrue: out += "true"; break;
    case Kind::kFalse: out += "false"; break;
    case Kind::kAtom: out += quote(b.atom().prop) + "_" + b.atom().path; break;
    case Kind::kNot: out += '!'; operand(b.child(0)); break;
    case Kind::kNext: out += "X "; operand(b.child(0)); break;
    case Kind::kEventually: out += "F "; operand(b.child(0)); break;
    case Kind::kGlobally: out += "G "; operand(b.child(0)); break;
    case Kind::kAnd: binary(" & "); break;
    case Kind::kOr: binary(" | "); break;
    case Kind::kImplies: binary(" -> "); break;
    case Kind::kIff: binary(" <-> "); break;
    case Kind::kUntil: binary(" U "); break;
  }
}

void collect_atoms(const LtlBody& b, std::set<IndexedAtom>& out) {
  if (b.kind() == Kind::kAtom) {
    out.insert(b.atom());
    return;
  }
  for (std::size_t i = 0; i < b.arity(); ++i) collect_atoms(b.child(i), out);
}

LtlBody nnf(const LtlBody& b, bool neg) {
  switch (b.kind()) {
    case Kind::kTrue: return neg ? LtlBody::falsity() : b;
    case Kind::kFalse: return neg ? LtlBody::truth() : b;
    case Kind::kAtom: return neg ? LtlBody::negation(b) : b;
    case Kind::kNot: return nnf(b.child(0), !neg);
    case Kind::kAnd:
    case Kind::kOr: {
      auto l = nnf(b.child(0), neg);
      auto r = nnf(b.child(1), neg);
      return (b.kind() == Kind::kAnd) != neg ? LtlBody::conj(l, r) : LtlBody::disj(l, r);
    }
    case Kind::kImplies:
      if (neg) return LtlBody::conj(nnf(b.child(0), false), nnf(b.child(1), true));
      return LtlBody::disj(nnf(b.child(0), true), nnf(b.child(1), false));
    case Kind::kIff: {
      const auto& x = b.child(0);
      const auto& y = b.child(1);
      if (neg)
        return LtlBody::disj(LtlBody::conj(nnf(x, false), nnf(y, true)),
                             LtlBody::conj(nnf(x, true), nnf(y, false)));
      return LtlBody::disj(LtlBody::conj(nnf(x, false), nnf(y, false)),
                           LtlBody::conj(nnf(x, true), nnf(y, true)));
    }
    case Kind::kNext: return LtlBody::next(nnf(b.child(0), neg));
    case Kind::kEventually:
      if (neg) return LtlBody::globally(nnf(b.child(0), true));
      return LtlBody::until(LtlBody::truth(), nnf(b.child(0), false));
    case Kind::kGlobally:
      if (neg) return LtlBody::until(LtlBody::truth(), nnf(b.child(0), true));
      return LtlBody::globally(nnf(b.child(0), false));
    case Kind::kUntil: {
      if (!neg) return LtlBody::until(nnf(b.child(0), false), nnf(b.child(1), false));
      // !(a U b) == G !b | (!b U (!a & !b))
      auto not_b = nnf(b.child(1), true);
      if (b.child(0).kind() == Kind::kTrue) return LtlBody::globally(not_b);
      return LtlBody::disj(LtlBody::globally(not_b),
                           LtlBody::until(not_b, LtlBody::conj(nnf(b.child(0), true), not_b)));
    }
  }
  return b;
}

bool find_globally(const LtlBody& b, std::string& path, const LtlBody*& hit) {
  if (b.kind() == Kind::kGlobally) {
    hit = &b;
    return true;
  }
  for (std::size_t i = 0; i < b.arity(); ++i) {
    auto saved = path.size();
    path += "/" + std::to_string(i);
    if (find_globally(b.child(i), path, hit)) return true;
    path.resize(saved);
  }
  return false;
}

}  // namespace

LtlBody::LtlBody() : LtlBody(truth()) {}

LtlBody LtlBody::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kTrue, {}, {}});
  return LtlBody(node);
}

LtlBody LtlBody::falsity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kFalse, {}, {}});
  return LtlBody(node);
}

LtlBody LtlBody::atom(std::string prop, std::string path) {
  return LtlBody(std::make_shared<const Node>(
      Node{Kind::kAtom, IndexedAtom{std::move(prop), std::move(path)}, {}}));
}

#define HP_UNARY(fn, k) \
  LtlBody LtlBody::fn(LtlBody a) { return LtlBody(std::make_shared<const Node>(Node{k, {}, {std::move(a)}})); }
#define HP_BINARY(fn, k)                                                                 \
  LtlBody LtlBody::fn(LtlBody a, LtlBody b) {                                            \
    return LtlBody(std::make_shared<const Node>(Node{k, {}, {std::move(a), std::move(b)}})); \
  }
HP_UNARY(negation, Kind::kNot)
HP_UNARY(next, Kind::kNext)
HP_UNARY(eventually, Kind::kEventually)
HP_UNARY(globally, Kind::kGlobally)
HP_BINARY(conj, Kind::kAnd)
HP_BINARY(disj, Kind::kOr)
HP_BINARY(implies, Kind::kImplies)
HP_BINARY(iff, Kind::kIff)
HP_BINARY(until, Kind::kUntil)
#undef HP_UNARY
#undef HP_BINARY

LtlBody LtlBody::conj_all(const std::vector<LtlBody>& fs) {
  if (fs.empty()) return truth();
  auto out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
  return out;
}

LtlBody LtlBody::disj_all(const std::vector<LtlBody>& fs) {
  if (fs.empty()) return falsity();
  auto out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
  return out;
}

LtlBody::Kind LtlBody::kind() const { return node_->kind; }
const IndexedAtom& LtlBody::atom() const { return node_->atom; }
std::size_t LtlBody::arity() const { return node_->kids.size(); }
const LtlBody& LtlBody::child(std::size_t i) const { return node_->kids.at(i); }

bool LtlBody::is_literal() const {
  return kind() == Kind::kAtom || (kind() == Kind::kNot && child(0).kind() == Kind::kAtom);
}

std::vector<IndexedAtom> LtlBody::atoms() const {
  std::set<IndexedAtom> s;
  collect_atoms(*this, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> LtlBody::path_vars() const {
  std::set<std::string> s;
  for (const auto& a : atoms()) s.insert(a.path);
  return {s.begin(), s.end()};
}

std::string LtlBody::to_string() const {
  std::string out;
  emit(*this, out);
  return out;
}

bool operator==(const LtlBody& a, const LtlBody& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if (a.kind() == LtlBody::Kind::kAtom) return a.atom() == b.atom();
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

std::vector<std::string> HyperFormula::path_vars() const {
  auto out = exist_vars;
  out.insert(out.end(), univ_vars.begin(), univ_vars.end());
  return out;
}

std::size_t HyperFormula::path_index(const std::string& var) const {
  auto vars = path_vars();
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw UnknownName("path variable", var);
  return static_cast<std::size_t>(it - vars.begin());
}

void HyperFormula::validate() const {
  auto vars = path_vars();
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw ValidationError("duplicate path variable '" + v + "'");
  for (const auto& a : body.atoms())
    if (!seen.contains(a.path))
      throw ValidationError("atom \"" + a.prop + "\" uses unbound path variable '" + a.path + "'");
}

std::string HyperFormula::to_string() const {
  std::string out;
  for (const auto& v : exist_vars) out += "exists " + v + ". ";
  for (const auto& v : univ_vars) out += "forall " + v + ". ";
  return out + body.to_string();
}

LtlBody to_nnf(const LtlBody& b) { return nnf(b, false); }

void check_cosafety(const LtlBody& b) {
  auto n = to_nnf(b);
  std::string path;
  const LtlBody* hit = nullptr;
  if (find_globally(n, path, hit)) throw NotCoSafety(path.empty() ? "/" : path, hit->to_string());
}

}  // namespace hyperplan
