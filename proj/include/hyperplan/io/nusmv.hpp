#pragma once

#include <string>
#include <vector>

#include "hyperplan/transition_system.hpp"

namespace hyperplan::io {

struct NusmvOptions {
  /// Add an identity direction enabled exactly when no other guard holds.
  bool stutter = false;
  /// Extra "-- " comment lines placed after the dialect line.
  std::vector<std::string> header;
};

/// Deterministic NuSMV identifiers for `names`: non-alphanumerics become
/// '_', a leading digit or reserved word gets a "v_" prefix, collisions get
/// "_2", "_3", ... in input order.
std::vector<std::string> nusmv_identifiers(const std::vector<std::string>& names);

/// INIT/TRANS style module. One TRANS disjunct per direction: the guard,
/// then next(x), !next(x) or (next(x) <-> x) for every variable. Throws
/// Deadlock for a reachable dead state unless `stutter` is set.
std::string emit_nusmv(const SymbolicTS& t, const NusmvOptions& opts = {});

}  // namespace hyperplan::io
