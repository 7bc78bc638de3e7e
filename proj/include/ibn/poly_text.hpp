#pragma once

#include <string>
#include <string_view>

#include "ibn/ncpoly.hpp"
#include "ibn/presentation.hpp"

// Text syntax for *-polynomials: generators as named by the presentation
// ("v1".."v9", "u<i>_<j>"), postfix apostrophe for the adjoint, whitespace
// juxtaposition for products, +/- for sums, an optional rational coefficient
// "p" or "p/q" in front of a term, "1" for the unit and "0" for zero.
//   examples:  "v1 v2'"   "3/2 u1_2 u2_1' + 1"   "-v1 + 2 v2"

namespace ibn {

/// Canonical rendering: terms in the polynomial's canonical order.
std::string to_text(const NCPoly& p, const Presentation& pres);

/// Throws SyntaxError (errc::parse_error) with byte offset on bad input.
NCPoly parse_poly(std::string_view text, const Presentation& pres);

}  // namespace ibn
