#pragma once

#include <string>
#include <variant>

#include "weylshape/geometry.hpp"

namespace weylshape {

/// X^(1/l) -> X^(1/l), Y -> Y + lambda X^e with e = sigma/rho > -1.
struct ShiftY {
  Rational lambda;
  Rational exponent;
};

/// X -> X, Y -> Y + sign * lambda X^n.
struct ShiftYPoly {
  Rational lambda;
  unsigned n = 1;
  int sign = 1;
};

/// X -> X + sign * lambda Y^n, Y -> Y. Acts on elements with nonnegative
/// integral X exponents.
struct ShiftXPoly {
  Rational lambda;
  unsigned n = 1;
  int sign = 1;
};

/// X -> Y, Y -> -X, applied `turns` times. Same domain as ShiftXPoly.
struct Rotation {
  unsigned turns = 1;
};

using Automorphism = std::variant<ShiftY, ShiftYPoly, ShiftXPoly, Rotation>;

/// Throws PreconditionViolated for exponents outside the domain of the kind
/// and for ShiftY exponents <= -1.
WeylElement apply(const Automorphism& a, const WeylElement& p);
LaurentElement apply_L(const Automorphism& a, const LaurentElement& p);

Automorphism inverse(const Automorphism& a);

std::string to_string(const Automorphism& a);

/// The direction whose degree the automorphism preserves: (rho, sigma) for
/// ShiftY, (1, n) for ShiftYPoly, (n, 1) for ShiftXPoly. Throws
/// DirectionMismatch for Rotation.
Direction own_direction(const Automorphism& a);

/// Checks l_d(phi(P)) = phi_L(l_d(P)) and v_d(phi(P)) = v_d(P), then that the
/// leading term is unchanged at sampled directions on the untouched side of
/// d. Throws DirectionMismatch when d is not own_direction(a).
bool verify_leading_transport(const Automorphism& a, const WeylElement& p, const Direction& d);

}  // namespace weylshape
