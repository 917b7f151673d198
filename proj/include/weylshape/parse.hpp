#pragma once

#include <string>
#include <string_view>

#include "weylshape/element.hpp"

namespace weylshape {

// Element text grammar (whitespace insignificant):
//
//   element  := ['-'] term (('+' | '-') term)*
//   term     := coeff | [coeff '*'] factor ('*' factor)*
//   coeff    := integer | integer '/' positive-integer
//   factor   := ('X' | 'Y') ['^' exponent]
//   exponent := integer | '(' integer '/' positive-integer ')'
//
// Factors multiply left to right in the Weyl algebra, so "Y*X" parses to
// X*Y + 1. Y exponents must be nonnegative integers. The Laurent variant
// uses lowercase 'x' and 'y' and multiplies commutatively. The level of the
// result is the lcm of all X-exponent denominators.

WeylElement parse_weyl(std::string_view text);
LaurentElement parse_laurent(std::string_view text);

/// Terms in descending (x, y) order, e.g. "X^6*Y^3 + X^(1/2) - 3/2*Y + 1".
std::string format(const WeylElement& p);
/// Same layout with lowercase variables.
std::string format(const LaurentElement& p);

}  // namespace weylshape
