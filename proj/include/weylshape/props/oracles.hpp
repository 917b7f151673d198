#pragma once

#include <vector>

#include "weylshape/geometry.hpp"

namespace weylshape::props {

// Reference computations that share no code path with the library routines
// they check.

/// Weyl product by repeated rewriting Y X^c -> X^c Y + c X^(c-1).
WeylElement rewrite_mul(const WeylElement& p, const WeylElement& q);

/// {dir(q - p) : p, q in Supp} filtered by #Supp(l_d) > 1, ascending.
std::vector<Direction> brute_directions(const LaurentElement& p);

/// Points of the support with maximal d-value, by a direct scan.
std::vector<SupportPoint> brute_leading_support(const LaurentElement& p, const Direction& d);

/// Dir(P) meets the open interval (1,0) < d < (0,1).
bool dir_meets_interior(const WeylElement& p);

}  // namespace weylshape::props
