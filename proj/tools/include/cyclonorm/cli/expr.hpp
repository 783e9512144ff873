#pragma once

#include <string>
#include <string_view>

#include "cyclonorm/polyring.hpp"

namespace cyclonorm::cli {

/// Source text together with the polynomial it denotes.
struct PolyExpr {
  std::string source;
  IntPoly parsed;
};

/// Parses sums of terms such as "1 - x + x^2", "3*x^4", "2x", "-7".
///
///   expr := term (('+' | '-') term)*
///   term := [sign] [integer ['*']] ('x' ['^' positive-integer] | integer)
///
/// Whitespace is ignored and like terms accumulate. Throws Error(kSyntax)
/// ("syntax error at offset N", N the first invalid character) or
/// Error(kEmptyInput).
IntPoly parse_poly(std::string_view source);

PolyExpr parse_expr(std::string_view source);

/// Canonical text in ascending degree, e.g. "1 - x + x^2", "-3*x^4", "0".
std::string render_poly(const IntPoly& p);

}  // namespace cyclonorm::cli
