#pragma once

#include <string>

#include "hyperplan/ltl.hpp"

namespace hyperplan::io {

/// Grammar:
///   formula := ("exists" | "forall") IDENT "." ... body
///   atom    := STRING "_" IDENT
/// Precedence, loosest first: <->, ->, |, &, U, unary (! X F G).
/// "->" and "U" associate to the right, the others to the left. Lines
/// starting with '#' are comments. Throws ParseError, PrefixShapeError
/// (forall before exists) and ValidationError (unbound path variable).
HyperFormula parse_hyperltl(const std::string& text);

/// Canonical text; parse_hyperltl(emit_hyperltl(f)) == f.
std::string emit_hyperltl(const HyperFormula& f);

}  // namespace hyperplan::io
