#pragma once

#include <string_view>

#include "ibn/algebra_expr.hpp"

// Expression surface syntax:
//   expr := atom | "oplus(" expr "," expr ")" | "tensor(" expr "," expr ")"
//         | "quotient(" expr ")" | "hom(" expr ")" | "ext(" expr ")"
//         | "limit(" expr { "," expr } ")" | "corner_infinite_simple"
//   atom := "O(" int ")" | "Oinf" | "Unc(" int "," int ")" | "Toeplitz" | "T2"
//         | "BH" | "Commutative" | "Rordam(" int ")" | "type(" int "," int ")" | "ibn"
//   int  := nonzero decimal, no sign
// Whitespace-insensitive. Errors carry the byte offset.

namespace ibn {

/// Throws SyntaxError: errc::parse_error for malformed input,
/// errc::arity_error for structurally valid atoms with out-of-range
/// parameters (O needs n >= 2, Unc needs n > m).
ExprPtr parse_dsl(std::string_view source);

}  // namespace ibn
