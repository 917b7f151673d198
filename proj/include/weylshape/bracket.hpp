#pragma once

#include <optional>
#include <string>
#include <variant>

#include "weylshape/geometry.hpp"
#include "weylshape/unipoly.hpp"

namespace weylshape {

struct BracketOutcome {
  bool proportional = false;
  LaurentElement value;  ///< zero when proportional

  friend bool operator==(const BracketOutcome&, const BracketOutcome&) = default;
};

/// v([P,Q]) < v(P) + v(Q) - (rho + sigma). Throws ZeroElement.
bool is_proportional(const WeylElement& p, const WeylElement& q, const Direction& d);

/// Leading term of the true commutator when it reaches the maximal degree.
BracketOutcome bracket_by_definition(const WeylElement& p, const WeylElement& q, const Direction& d);

/// Sum over the two leading edges of lambda_i mu_j (q_j x p_i) x^(p_i+q_j-(1,1)).
/// Needs rho > 0 (NonPositiveRho).
BracketOutcome bracket_by_formula(const WeylElement& p, const WeylElement& q, const Direction& d);

/// Formula path when rho > 0, definition path otherwise.
BracketOutcome bracket(const WeylElement& p, const WeylElement& q, const Direction& d);

/// Coefficients of the leading edge read from st upwards in y.
/// Throws ZeroElement, NonPositiveRho.
UniPoly f_poly(const LaurentElement& p, const Direction& d);
UniPoly f_poly(const WeylElement& p, const Direction& d);

/// x^(start.x) y^(start.y) f(x^(-sigma/rho) y)
LaurentElement from_f_poly(const UniPoly& f, const SupportPoint& start, const Direction& d);

struct PEWitness {
  unsigned h = 0;
  Rational c;
  bool c_integral = true;
};

struct ProportionalCase {};

/// Verifies x^h f_[P,Q] = c f_P f_Q + a x f_P' f_Q - b x f_Q' f_P with
/// a = v(Q)/rho, b = v(P)/rho and c = st(Q) x st(P); in the proportional case
/// the right-hand side must vanish. Throws IdentityViolation, NonPositiveRho.
std::variant<PEWitness, ProportionalCase> check_identity_1(const WeylElement& p, const WeylElement& q,
                                                           const Direction& d);

struct CommonRoot {
  unsigned m = 1;
  unsigned n = 1;
  Rational lambda_p;
  Rational lambda_q;
  LaurentElement r;
};

/// R with lp = lambda_p R^m and lq = lambda_q R^n for (rho,sigma)-homogeneous
/// lp, lq of positive degree; m/n = v(lp)/v(lq) in lowest terms. nullopt when
/// no such R exists over the rationals.
std::optional<CommonRoot> common_root(const LaurentElement& lp, const LaurentElement& lq, const Direction& d);

/// common_root of the leading terms. Requires P, Q proportional at d with
/// rho > 0 and positive degrees (PreconditionViolated).
std::optional<CommonRoot> extract_common_root(const WeylElement& p, const WeylElement& q, const Direction& d);

struct PECheck {
  bool holds = false;
  std::optional<unsigned> h;
};

/// Tests x^h f^(k+j) = c f^k g + a x (f^k)' g - b x g' f^k, a = (j/k) b + eps.
PECheck pe_check(const UniPoly& f, const UniPoly& g, unsigned k, unsigned j, const Rational& eps,
                 const Rational& b, const Rational& c);

struct MultiplicityReport {
  bool pass = true;
  /// On failure: the squarefree layer of f (or of g / f^j) that breaks the rule.
  std::optional<UniPoly> layer;
  unsigned layer_multiplicity = 0;
  unsigned expected = 0;
  std::string reason;
};

/// Every root of f of multiplicity m must have multiplicity jm + 1 in g, and
/// g / f^j must be separable. Throws ZeroAtOrigin when f(0) or g(0) vanishes.
MultiplicityReport multiplicity_report(const UniPoly& f, const UniPoly& g, unsigned j);

/// f = mu (x^rho - lambda)^gamma with gamma = deg(f) / rho.
bool is_power_of_binomial(const UniPoly& f, unsigned rho);

}  // namespace weylshape
