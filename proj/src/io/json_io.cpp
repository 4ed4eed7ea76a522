#include "hyperplan/io/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hyperplan/error.hpp"
#include "json.hpp"

namespace hyperplan::io {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& ptr, const std::string& key) {
  if (!obj.is_object()) throw SchemaError(ptr, "expected object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(ptr, key), "missing");
  return *it;
}

std::string as_string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw SchemaError(ptr, "expected string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw SchemaError(ptr, "expected array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], child(ptr, i)));
  return out;
}

std::uint32_t lookup(const SymbolTable& table, const std::string& name, const std::string& ptr,
                     const std::string& kind) {
  auto id = table.find(name);
  if (!id) throw SchemaError(ptr, "unknown " + kind + " '" + name + "'");
  return *id;
}

Bitset name_set(const SymbolTable& table, const json& v, const std::string& ptr, const std::string& kind) {
  Bitset out(table.size());
  auto names = string_list(v, ptr);
  for (std::size_t i = 0; i < names.size(); ++i) out.set(lookup(table, names[i], child(ptr, i), kind));
  return out;
}

json names_of(const Bitset& b, const SymbolTable& table) {
  json out = json::array();
  b.for_each([&](std::size_t i) { out.push_back(table.name(static_cast<std::uint32_t>(i))); });
  return out;
}

void expect_kind(const json& j, const std::string& kind) {
  auto k = as_string(field(j, "", "kind"), "/kind");
  if (k != kind) throw SchemaError("/kind", "expected \"" + kind + "\", found \"" + k + "\"");
}

template <class F>
auto build(F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw SchemaError("", e.what());
  }
}

json formula_to_json(const BoolFormula& f, const SymbolTable& names) {
  using K = BoolFormula::Kind;
  auto list = [&]() {
    json out = json::array();
    for (const auto& c : f.children()) out.push_back(formula_to_json(c, names));
    return out;
  };
  switch (f.kind()) {
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kVar: return names.name(f.var_id());
    case K::kNot: return json{{"not", formula_to_json(f.children()[0], names)}};
    case K::kAnd: return json{{"and", list()}};
    case K::kOr: return json{{"or", list()}};
    case K::kImplies: return json{{"implies", list()}};
    case K::kIff: return json{{"iff", list()}};
  }
  return true;
}

BoolFormula formula_from_json(const json& v, const SymbolTable& names, const std::string& ptr) {
  if (v.is_boolean()) return BoolFormula::constant(v.get<bool>());
  if (v.is_string()) return BoolFormula::var(lookup(names, v.get<std::string>(), ptr, "variable"));
  if (!v.is_object() || v.size() != 1) throw SchemaError(ptr, "expected formula");
  const auto& [op, arg] = *v.items().begin();
  const auto p = child(ptr, op);
  auto args = [&]() {
    if (!arg.is_array()) throw SchemaError(p, "expected array");
    std::vector<BoolFormula> out;
    for (std::size_t i = 0; i < arg.size(); ++i) out.push_back(formula_from_json(arg[i], names, child(p, i)));
    return out;
  };
  if (op == "not") return BoolFormula::negation(formula_from_json(arg, names, p));
  if (op == "and") return BoolFormula::conj(args());
  if (op == "or") return BoolFormula::disj(args());
  if (op == "implies" || op == "iff") {
    auto a = args();
    if (a.size() != 2) throw SchemaError(p, "expected two operands");
    return op == "implies" ? BoolFormula::implies(a[0], a[1]) : BoolFormula::iff(a[0], a[1]);
  }
  throw SchemaError(ptr, "unknown operator '" + op + "'");
}

}  // namespace

DocKind detect_kind(const std::string& text) {
  auto j = parse(text);
  if (j.is_object() && j.contains("plan") && !j.contains("kind")) return DocKind::kPlan;
  auto k = as_string(field(j, "", "kind"), "/kind");
  if (k == "transition_system") return DocKind::kTransitionSystem;
  if (k == "symbolic_ts") return DocKind::kSymbolicTS;
  if (k == "planning_problem") return DocKind::kProblem;
  if (k == "strips_problem") return DocKind::kStrips;
  if (k == "plan") return DocKind::kPlan;
  throw SchemaError("/kind", "unknown document kind \"" + k + "\"");
}

std::string save_ts(const TransitionSystem& t) {
  json labels = json::object();
  json trans = json::array();
  for (LocationId l = 0; l < t.num_locations(); ++l) {
    labels[t.location_name(l)] = t.label_names(l);
    for (DirectionId d = 0; d < t.num_directions(); ++d)
      trans.push_back({{"from", t.location_name(l)}, {"dir", t.direction_name(d)},
                       {"to", t.location_name(t.succ(l, d))}});
  }
  return dump({{"kind", "transition_system"},
               {"locations", t.locations().names()},
               {"init", t.location_name(t.init())},
               {"directions", t.directions().names()},
               {"labels", labels},
               {"transitions", trans}});
}

TransitionSystem load_ts(const std::string& text) {
  auto j = parse(text);
  expect_kind(j, "transition_system");
  auto locs = string_list(field(j, "", "locations"), "/locations");
  auto dirs = string_list(field(j, "", "directions"), "/directions");
  SymbolTable lt = build([&] { return SymbolTable(locs, "location"); });
  SymbolTable dt = build([&] { return SymbolTable(dirs, "direction"); });
  auto init = lookup(lt, as_string(field(j, "", "init"), "/init"), "/init", "location");

  std::vector<std::vector<std::string>> labels(locs.size());
  const auto& lj = field(j, "", "labels");
  if (!lj.is_object()) throw SchemaError("/labels", "expected object");
  for (const auto& [name, aps] : lj.items()) {
    auto l = lookup(lt, name, child("/labels", name), "location");
    labels[l] = string_list(aps, child("/labels", name));
  }

  const auto& tj = field(j, "", "transitions");
  if (!tj.is_array()) throw SchemaError("/transitions", "expected array");
  constexpr LocationId kUnset = ~LocationId{0};
  std::vector<LocationId> trans(locs.size() * dirs.size(), kUnset);
  for (std::size_t i = 0; i < tj.size(); ++i) {
    const auto p = child("/transitions", i);
    auto from = lookup(lt, as_string(field(tj[i], p, "from"), child(p, "from")), child(p, "from"), "location");
    auto dir = lookup(dt, as_string(field(tj[i], p, "dir"), child(p, "dir")), child(p, "dir"), "direction");
    auto to = lookup(lt, as_string(field(tj[i], p, "to"), child(p, "to")), child(p, "to"), "location");
    auto& slot = trans[from * dirs.size() + dir];
    if (slot != kUnset) throw SchemaError(p, "duplicate transition");
    slot = to;
  }
  for (auto x : trans)
    if (x == kUnset) throw SchemaError("/transitions", "not total");
  return build([&] { return TransitionSystem(locs, init, dirs, trans, labels); });
}

std::string save_sts(const SymbolicTS& t) {
  json dirs = json::array();
  for (const auto& d : t.directions())
    dirs.push_back({{"name", d.name},
                    {"guard", formula_to_json(d.guard, t.vars())},
                    {"pos", names_of(d.pos, t.vars())},
                    {"neg", names_of(d.neg, t.vars())}});
  return dump({{"kind", "symbolic_ts"},
               {"vars", t.vars().names()},
               {"init", names_of(t.init(), t.vars())},
               {"directions", dirs}});
}

SymbolicTS load_sts(const std::string& text) {
  auto j = parse(text);
  expect_kind(j, "symbolic_ts");
  auto vars = string_list(field(j, "", "vars"), "/vars");
  SymbolTable vt = build([&] { return SymbolTable(vars, "variable"); });
  auto init = name_set(vt, field(j, "", "init"), "/init", "variable");
  const auto& dj = field(j, "", "directions");
  if (!dj.is_array()) throw SchemaError("/directions", "expected array");
  std::vector<GuardedDirection> dirs;
  for (std::size_t i = 0; i < dj.size(); ++i) {
    const auto p = child("/directions", i);
    dirs.push_back({as_string(field(dj[i], p, "name"), child(p, "name")),
                    formula_from_json(field(dj[i], p, "guard"), vt, child(p, "guard")),
                    name_set(vt, field(dj[i], p, "pos"), child(p, "pos"), "variable"),
                    name_set(vt, field(dj[i], p, "neg"), child(p, "neg"), "variable")});
  }
  return build([&] { return SymbolicTS(vars, init, dirs); });
}

std::string save_problem(const PlanningProblem& p) {
  json actions = json::array();
  for (const auto& a : p.actions()) {
    json eff = json::object();
    json pre = json::array();
    for (StateId s = 0; s < p.num_states(); ++s) {
      if (!a.pre.test(s)) continue;
      pre.push_back(p.state_name(s));
      json succ = json::array();
      for (auto t : a.eff[s]) succ.push_back(p.state_name(t));
      eff[p.state_name(s)] = succ;
    }
    actions.push_back({{"name", a.name}, {"pre", pre}, {"effects", eff}});
  }
  return dump({{"kind", "planning_problem"},
               {"states", p.states().names()},
               {"init", p.state_name(p.init())},
               {"goals", names_of(p.goals(), p.states())},
               {"actions", actions}});
}

PlanningProblem load_problem(const std::string& text) {
  auto j = parse(text);
  expect_kind(j, "planning_problem");
  auto states = string_list(field(j, "", "states"), "/states");
  SymbolTable st = build([&] { return SymbolTable(states, "state"); });
  auto init = lookup(st, as_string(field(j, "", "init"), "/init"), "/init", "state");
  auto goals = name_set(st, field(j, "", "goals"), "/goals", "state");
  const auto& aj = field(j, "", "actions");
  if (!aj.is_array()) throw SchemaError("/actions", "expected array");
  std::vector<Action> actions;
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const auto p = child("/actions", i);
    Action a{as_string(field(aj[i], p, "name"), child(p, "name")), Bitset(states.size()),
             std::vector<std::vector<StateId>>(states.size())};
    const auto& ej = field(aj[i], p, "effects");
    if (!ej.is_object()) throw SchemaError(child(p, "effects"), "expected object");
    for (const auto& [from, tos] : ej.items()) {
      const auto ep = child(child(p, "effects"), from);
      auto s = lookup(st, from, ep, "state");
      auto succ = string_list(tos, ep);
      if (succ.empty()) throw SchemaError(ep, "empty effect");
      a.pre.set(s);
      for (std::size_t k = 0; k < succ.size(); ++k) a.eff[s].push_back(lookup(st, succ[k], child(ep, k), "state"));
    }
    if (aj[i].contains("pre")) {
      auto pre = name_set(st, aj[i]["pre"], child(p, "pre"), "state");
      if (!(pre == a.pre)) throw SchemaError(child(p, "pre"), "differs from the effect domain");
    }
    actions.push_back(std::move(a));
  }
  return build([&] { return PlanningProblem(states, init, goals, std::move(actions)); });
}

std::string save_strips(const StripsProblem& p) {
  json actions = json::array();
  for (const auto& a : p.actions()) {
    json effects = json::array();
    for (const auto& e : a.effects)
      effects.push_back({{"condition", formula_to_json(e.condition, p.props())},
                         {"add", names_of(e.add, p.props())},
                         {"del", names_of(e.del, p.props())}});
    actions.push_back({{"name", a.name}, {"pre", names_of(a.pre, p.props())}, {"effects", effects}});
  }
  return dump({{"kind", "strips_problem"},
               {"props", p.props().names()},
               {"init", names_of(p.init(), p.props())},
               {"goals", names_of(p.goals(), p.props())},
               {"actions", actions}});
}

StripsProblem load_strips(const std::string& text) {
  auto j = parse(text);
  expect_kind(j, "strips_problem");
  auto props = string_list(field(j, "", "props"), "/props");
  SymbolTable pt = build([&] { return SymbolTable(props, "proposition"); });
  auto init = name_set(pt, field(j, "", "init"), "/init", "proposition");
  auto goals = name_set(pt, field(j, "", "goals"), "/goals", "proposition");
  const auto& aj = field(j, "", "actions");
  if (!aj.is_array()) throw SchemaError("/actions", "expected array");
  std::vector<StripsAction> actions;
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const auto p = child("/actions", i);
    StripsAction a{as_string(field(aj[i], p, "name"), child(p, "name")),
                   name_set(pt, field(aj[i], p, "pre"), child(p, "pre"), "proposition"),
                   {}};
    const auto& ej = field(aj[i], p, "effects");
    if (!ej.is_array()) throw SchemaError(child(p, "effects"), "expected array");
    for (std::size_t k = 0; k < ej.size(); ++k) {
      const auto ep = child(child(p, "effects"), k);
      a.effects.push_back({formula_from_json(field(ej[k], ep, "condition"), pt, child(ep, "condition")),
                           name_set(pt, field(ej[k], ep, "add"), child(ep, "add"), "proposition"),
                           name_set(pt, field(ej[k], ep, "del"), child(ep, "del"), "proposition")});
    }
    actions.push_back(std::move(a));
  }
  return build([&] { return StripsProblem(props, init, goals, std::move(actions)); });
}

std::string save_plan(const Plan& p) { return dump({{"plan", p.actions}}); }

Plan load_plan(const std::string& text) {
  auto j = parse(text);
  return Plan{string_list(field(j, "", "plan"), "/plan")};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace hyperplan::io
