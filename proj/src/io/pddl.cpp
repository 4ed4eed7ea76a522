#include "hyperplan/io/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hyperplan/error.hpp"

namespace hyperplan::io {

namespace {

[[noreturn]] void fail(const SourcePos& p, const std::string& expected) {
  throw ParseError(p.line, p.col, expected);
}

bool is_sym(const SExpr& e, const char* s) { return !e.is_list && e.atom == s; }

const std::string& head(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) fail(e.pos, "keyword list");
  return e.items[0].atom;
}

std::string symbol(const SExpr& e, const std::string& what) {
  if (e.is_list) fail(e.pos, what);
  return e.atom;
}

std::vector<TypedName> typed_list(const SExpr& e, std::size_t from) {
  std::vector<TypedName> out;
  std::size_t pending = 0;  // names still waiting for a type
  for (std::size_t i = from; i < e.items.size(); ++i) {
    const auto& it = e.items[i];
    if (is_sym(it, "-")) {
      if (i + 1 >= e.items.size()) fail(it.pos, "type name");
      const auto& ty = e.items[i + 1];
      if (ty.is_list) {
        if (!ty.items.empty() && is_sym(ty.items[0], "either")) throw UnsupportedFeature("either-types");
        fail(ty.pos, "type name");
      }
      if (pending == 0) fail(it.pos, "name before '-'");
      for (std::size_t k = out.size() - pending; k < out.size(); ++k) out[k].type = ty.atom;
      pending = 0;
      ++i;
      continue;
    }
    out.push_back({symbol(it, "name"), "object"});
    ++pending;
  }
  return out;
}

PddlAtom atom_of(const SExpr& e) {
  if (!e.is_list || e.items.empty()) fail(e.pos, "atom");
  PddlAtom a{symbol(e.items[0], "predicate name"), {}, e.pos};
  static const std::set<std::string> ops = {"and", "or", "not", "imply", "forall", "exists", "when", "oneof"};
  if (ops.contains(a.predicate)) fail(e.pos, "atom");
  if (a.predicate == "=") throw UnsupportedFeature("equality");
  for (std::size_t i = 1; i < e.items.size(); ++i) a.args.push_back(symbol(e.items[i], "argument"));
  return a;
}

void check_logical(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) return;
  const auto& h = e.items[0].atom;
  if (h == "or" || h == "imply" || h == "forall" || h == "exists") throw UnsupportedFeature(h + " in conditions");
  if (h == "increase" || h == "decrease" || h == "assign" || h == "scale-up" || h == "scale-down")
    throw UnsupportedFeature("numeric-fluents");
  if (h == ">" || h == "<" || h == ">=" || h == "<=") throw UnsupportedFeature("numeric-fluents");
}

// positive conjunction
std::vector<PddlAtom> positive_conjunction(const SExpr& e) {
  check_logical(e);
  if (!e.is_list) fail(e.pos, "condition");
  if (e.items.empty()) return {};
  if (is_sym(e.items[0], "and")) {
    std::vector<PddlAtom> out;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      auto part = positive_conjunction(e.items[i]);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (is_sym(e.items[0], "not")) throw UnsupportedFeature("negative-preconditions");
  return {atom_of(e)};
}

std::vector<PddlLiteral> literal_conjunction(const SExpr& e) {
  check_logical(e);
  if (!e.is_list) fail(e.pos, "condition");
  if (e.items.empty()) return {};
  if (is_sym(e.items[0], "and")) {
    std::vector<PddlLiteral> out;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      auto part = literal_conjunction(e.items[i]);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (is_sym(e.items[0], "not")) {
    if (e.items.size() != 2) fail(e.pos, "(not <atom>)");
    return {{atom_of(e.items[1]), false}};
  }
  return {{atom_of(e), true}};
}

PddlEffect effect_of(const SExpr& e, bool under_when) {
  check_logical(e);
  if (!e.is_list) fail(e.pos, "effect");
  PddlEffect out;
  out.pos = e.pos;
  if (e.items.empty()) return out;  // empty and
  const auto& h = e.items[0].is_list ? std::string() : e.items[0].atom;
  if (h == "and" || h == "oneof") {
    if (h == "oneof" && under_when) throw UnsupportedFeature("oneof under when");
    out.kind = h == "and" ? PddlEffect::Kind::kAnd : PddlEffect::Kind::kOneof;
    for (std::size_t i = 1; i < e.items.size(); ++i) out.kids.push_back(effect_of(e.items[i], under_when));
    if (out.kind == PddlEffect::Kind::kOneof && out.kids.empty()) fail(e.pos, "oneof branch");
    return out;
  }
  if (h == "when") {
    if (under_when) throw UnsupportedFeature("nested when");
    if (e.items.size() != 3) fail(e.pos, "(when <condition> <effect>)");
    out.kind = PddlEffect::Kind::kWhen;
    out.condition = literal_conjunction(e.items[1]);
    out.kids.push_back(effect_of(e.items[2], true));
    return out;
  }
  if (h == "forall") throw UnsupportedFeature("forall effects");
  if (h == "not") {
    if (e.items.size() != 2) fail(e.pos, "(not <atom>)");
    out.kind = PddlEffect::Kind::kDel;
    out.atom = atom_of(e.items[1]);
    return out;
  }
  out.kind = PddlEffect::Kind::kAdd;
  out.atom = atom_of(e);
  return out;
}

void check_requirements(const SExpr& sec, std::vector<std::string>& reqs) {
  static const std::set<std::string> ok = {":strips", ":typing", ":conditional-effects", ":non-deterministic"};
  for (std::size_t i = 1; i < sec.items.size(); ++i) {
    auto r = symbol(sec.items[i], "requirement");
    if (!ok.contains(r)) throw UnsupportedFeature(r.size() > 1 && r[0] == ':' ? r.substr(1) : r);
    reqs.push_back(r);
  }
}

const SExpr& single_define(const std::vector<SExpr>& top, const char* kind) {
  if (top.size() != 1) fail(top.empty() ? SourcePos{1, 1} : top[1].pos, "single (define ...) form");
  const auto& d = top[0];
  if (!d.is_list || d.items.size() < 2 || !is_sym(d.items[0], "define")) fail(d.pos, "(define ...)");
  const auto& name = d.items[1];
  if (!name.is_list || name.items.size() != 2 || !is_sym(name.items[0], kind))
    fail(name.pos, std::string("(") + kind + " <name>)");
  return d;
}

}  // namespace

std::vector<SExpr> parse_sexprs(const std::string& text) {
  std::vector<SExpr> stack(1);
  stack[0].is_list = true;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i, ++col;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i, ++col;
      continue;
    }
    if (c == '(') {
      SExpr e;
      e.is_list = true;
      e.pos = {line, col};
      stack.push_back(std::move(e));
      ++i, ++col;
      continue;
    }
    if (c == ')') {
      if (stack.size() == 1) throw ParseError(line, col, "matching '('");
      auto done = std::move(stack.back());
      stack.pop_back();
      stack.back().items.push_back(std::move(done));
      ++i, ++col;
      continue;
    }
    SExpr e;
    e.pos = {line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '(' &&
           text[i] != ')' && text[i] != ';') {
      e.atom += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      ++i, ++col;
    }
    stack.back().items.push_back(std::move(e));
  }
  if (stack.size() != 1) throw ParseError(line, col, "')'");
  return std::move(stack[0].items);
}

LiftedDomain parse_domain(const std::string& text) {
  auto top = parse_sexprs(text);
  const auto& d = single_define(top, "domain");
  LiftedDomain out;
  out.name = symbol(d.items[1].items[1], "domain name");
  for (std::size_t i = 2; i < d.items.size(); ++i) {
    const auto& sec = d.items[i];
    const auto& h = head(sec);
    if (h == ":requirements") {
      check_requirements(sec, out.requirements);
    } else if (h == ":types") {
      for (const auto& t : typed_list(sec, 1)) out.types[t.name] = t.type;
    } else if (h == ":constants") {
      auto cs = typed_list(sec, 1);
      out.constants.insert(out.constants.end(), cs.begin(), cs.end());
    } else if (h == ":predicates") {
      for (std::size_t k = 1; k < sec.items.size(); ++k) {
        const auto& p = sec.items[k];
        if (!p.is_list || p.items.empty()) fail(p.pos, "predicate declaration");
        out.predicates.push_back({symbol(p.items[0], "predicate name"), typed_list(p, 1)});
      }
    } else if (h == ":functions") {
      throw UnsupportedFeature("functions");
    } else if (h == ":durative-action") {
      throw UnsupportedFeature("durative-actions");
    } else if (h == ":derived") {
      throw UnsupportedFeature("derived-predicates");
    } else if (h == ":action") {
      ActionSchema a;
      a.pos = sec.pos;
      if (sec.items.size() < 2) fail(sec.pos, "action name");
      a.name = symbol(sec.items[1], "action name");
      for (std::size_t k = 2; k < sec.items.size(); k += 2) {
        const auto key = symbol(sec.items[k], "action keyword");
        if (k + 1 >= sec.items.size()) fail(sec.items[k].pos, "value for " + key);
        const auto& v = sec.items[k + 1];
        if (key == ":parameters") {
          if (!v.is_list) fail(v.pos, "parameter list");
          a.params = typed_list(v, 0);
        } else if (key == ":precondition") {
          a.pre = positive_conjunction(v);
        } else if (key == ":effect") {
          a.effect = effect_of(v, false);
        } else {
          throw UnsupportedFeature("action keyword " + key);
        }
      }
      out.schemas.push_back(std::move(a));
    } else {
      throw UnsupportedFeature(h.size() > 1 && h[0] == ':' ? h.substr(1) : h);
    }
  }
  return out;
}

ProblemInstance parse_problem(const std::string& text) {
  auto top = parse_sexprs(text);
  const auto& d = single_define(top, "problem");
  ProblemInstance out;
  out.name = symbol(d.items[1].items[1], "problem name");
  for (std::size_t i = 2; i < d.items.size(); ++i) {
    const auto& sec = d.items[i];
    const auto& h = head(sec);
    if (h == ":domain") {
      if (sec.items.size() != 2) fail(sec.pos, "(:domain <name>)");
      out.domain = symbol(sec.items[1], "domain name");
    } else if (h == ":requirements") {
      std::vector<std::string> ignored;
      check_requirements(sec, ignored);
    } else if (h == ":objects") {
      out.objects = typed_list(sec, 1);
    } else if (h == ":init") {
      for (std::size_t k = 1; k < sec.items.size(); ++k) {
        const auto& a = sec.items[k];
        if (a.is_list && !a.items.empty() && is_sym(a.items[0], "oneof")) throw UnsupportedFeature("oneof in init");
        if (a.is_list && !a.items.empty() && (is_sym(a.items[0], "unknown") || is_sym(a.items[0], "or")))
          throw UnsupportedFeature("uncertain initial state");
        if (a.is_list && !a.items.empty() && is_sym(a.items[0], "=")) throw UnsupportedFeature("numeric-fluents");
        if (a.is_list && !a.items.empty() && is_sym(a.items[0], "not")) continue;  // closed world
        out.init.push_back(atom_of(a));
      }
    } else if (h == ":goal") {
      if (sec.items.size() != 2) fail(sec.pos, "(:goal <condition>)");
      try {
        out.goal = positive_conjunction(sec.items[1]);
      } catch (const UnsupportedFeature&) {
        throw UnsupportedFeature("negative or disjunctive goals");
      }
    } else if (h == ":metric") {
      throw UnsupportedFeature("metric");
    } else {
      throw UnsupportedFeature(h.size() > 1 && h[0] == ':' ? h.substr(1) : h);
    }
  }
  return out;
}

std::pair<LiftedDomain, ProblemInstance> parse_pddl(const std::string& domain_text,
                                                    const std::string& problem_text) {
  return {parse_domain(domain_text), parse_problem(problem_text)};
}

}  // namespace hyperplan::io
