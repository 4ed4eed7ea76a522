#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperplan/strips.hpp"

namespace hyperplan::io {

struct SourcePos {
  std::size_t line = 0;
  std::size_t col = 0;
};

/// Symbols are lowercased on input.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourcePos pos;
};

std::vector<SExpr> parse_sexprs(const std::string& text);

struct TypedName {
  std::string name;
  std::string type = "object";
};

/// Predicate applied to variables ("?x") or constants.
struct PddlAtom {
  std::string predicate;
  std::vector<std::string> args;
  SourcePos pos;
};

struct PddlLiteral {
  PddlAtom atom;
  bool positive = true;
};

struct PddlEffect {
  enum class Kind { kAnd, kOneof, kWhen, kAdd, kDel };
  Kind kind = Kind::kAnd;
  std::vector<PddlEffect> kids;         // and, oneof, when (single body)
  std::vector<PddlLiteral> condition;  // when
  PddlAtom atom;                       // add, del
  SourcePos pos;
};

struct PredicateSig {
  std::string name;
  std::vector<TypedName> params;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<PddlAtom> pre;  // positive conjunction
  PddlEffect effect;
  SourcePos pos;
};

struct LiftedDomain {
  std::string name;
  std::vector<std::string> requirements;
  std::map<std::string, std::string> types;  // type -> parent
  std::vector<PredicateSig> predicates;
  std::vector<TypedName> constants;
  std::vector<ActionSchema> schemas;
};

struct ProblemInstance {
  std::string name;
  std::string domain;
  std::vector<TypedName> objects;
  std::vector<PddlAtom> init;
  std::vector<PddlAtom> goal;  // positive conjunction
};

/// Throws ParseError and UnsupportedFeature.
LiftedDomain parse_domain(const std::string& text);
ProblemInstance parse_problem(const std::string& text);
std::pair<LiftedDomain, ProblemInstance> parse_pddl(const std::string& domain_text,
                                                    const std::string& problem_text);

struct GroundStats {
  std::size_t candidate_actions = 0;  // before reachability pruning
  std::size_t actions = 0;
  std::size_t fluents = 0;
};

/// Grounds schemas over typed objects, keeps actions whose preconditions are
/// statically reachable, and compiles the conjunctive goal into a fresh
/// goal_ok proposition set by a fresh finish action. Throws TypeError.
StripsProblem ground(const LiftedDomain& d, const ProblemInstance& p, GroundStats* stats = nullptr);

}  // namespace hyperplan::io
