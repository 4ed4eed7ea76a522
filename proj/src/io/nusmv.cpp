#include "hyperplan/io/nusmv.hpp"

#include <cctype>
#include <set>

namespace hyperplan::io {

namespace {

const std::set<std::string>& reserved() {
  static const std::set<std::string> words = {
      "A", "ABF", "ABG", "AF", "AG", "ASSIGN", "AU", "AX", "B", "BU", "COMPASSION", "COMPUTE",
      "CONSTANTS", "CONSTRAINT", "CTLSPEC", "CTLWFF", "DEFINE", "E", "EBF", "EBG", "EF", "EG", "EU",
      "EX", "F", "FAIRNESS", "FALSE", "FROZENVAR", "G", "H", "IN", "INIT", "INVAR", "INVARSPEC",
      "ISA", "IVAR", "JUSTICE", "LTLSPEC", "LTLWFF", "MAX", "MDEFINE", "MIN", "MIRROR", "MODULE",
      "NAME", "O", "PRED", "PREDICATES", "PSLSPEC", "PSLWFF", "S", "SIMPWFF", "SPEC", "T", "TRANS",
      "TRUE", "U", "V", "VAR", "X", "Y", "Z", "abs", "array", "bool", "boolean", "case", "count",
      "esac", "extend", "floor", "in", "init", "integer", "max", "min", "mod", "next", "of", "process",
      "real", "resize", "self", "signed", "sizeof", "swconst", "toint", "union", "unsigned",
      "uwconst", "word", "word1", "xnor", "xor"};
  return words;
}

}  // namespace

std::vector<std::string> nusmv_identifiers(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (const auto& n : names) {
    std::string id;
    for (char c : n) id += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    if (id.empty() || std::isdigit(static_cast<unsigned char>(id[0])) || reserved().contains(id))
      id = "v_" + id;
    if (used.contains(id)) {
      int k = 2;
      while (used.contains(id + "_" + std::to_string(k))) ++k;
      id += "_" + std::to_string(k);
    }
    used.insert(id);
    out.push_back(id);
  }
  return out;
}

std::string emit_nusmv(const SymbolicTS& t, const NusmvOptions& opts) {
  auto dirs = t.directions();
  if (opts.stutter) {
    std::vector<BoolFormula> guards;
    for (const auto& d : dirs) guards.push_back(d.guard);
    dirs.push_back({"stutter", BoolFormula::negation(BoolFormula::disj(guards)), Bitset(t.num_vars()),
                    Bitset(t.num_vars())});
  } else {
    sts_reachable(t);  // throws Deadlock
  }

  const auto ids = nusmv_identifiers(t.vars().names());
  const BoolFormula::Syntax syntax{"TRUE", "FALSE", "!", " & ", " | ", " -> ", " <-> "};
  auto name = [&](std::uint32_t v) { return ids[v]; };

  std::string out = "-- generated by hyperplan; dialect: NuSMV INIT/TRANS constraints\n";
  for (const auto& h : opts.header) out += "-- " + h + "\n";
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] != t.var_name(static_cast<std::uint32_t>(i)))
      out += "-- identifier " + ids[i] + " = " + t.var_name(static_cast<std::uint32_t>(i)) + "\n";
  out += "MODULE main\n";
  for (const auto& id : ids) out += "VAR " + id + " : boolean;\n";

  std::string init;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) init += " & ";
    init += (t.init().test(i) ? "" : "!") + ids[i];
  }
  out += "INIT " + (init.empty() ? std::string("TRUE") : init) + ";\n";

  out += "TRANS\n";
  if (dirs.empty()) out += "    FALSE";
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const auto& d = dirs[k];
    using K = BoolFormula::Kind;
    const auto gk = d.guard.kind();
    std::string g = d.guard.to_string(name, syntax);
    if (gk != K::kTrue && gk != K::kFalse && gk != K::kVar && gk != K::kNot) g = "(" + g + ")";
    std::string conj = g;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      conj += " & ";
      if (d.pos.test(i)) conj += "next(" + ids[i] + ")";
      else if (d.neg.test(i)) conj += "!next(" + ids[i] + ")";
      else conj += "(next(" + ids[i] + ") <-> " + ids[i] + ")";
    }
    out += (k == 0 ? "    (" : "  | (") + conj + ")";
    out += k + 1 == dirs.size() ? "" : "\n";
  }
  out += ";\n";
  return out;
}

}  // namespace hyperplan::io
