#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylshape/rational.hpp"

namespace weylshape {

/// A lattice point (x, y) of a support: x is the exponent of X (a rational
/// whose denominator divides the owning element's level), y the exponent of Y.
struct SupportPoint {
  Rational x;
  std::int64_t y = 0;

  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
  friend std::strong_ordering operator<=>(const SupportPoint& a, const SupportPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  SupportPoint operator+(const SupportPoint& o) const { return {x + o.x, y + o.y}; }
  SupportPoint operator-(const SupportPoint& o) const { return {x - o.x, y - o.y}; }

  /// "(6,3)", "(1/2,0)"
  std::string to_string() const;
};

/// Determinant of the 2x2 matrix with rows a, b.
Rational cross(const SupportPoint& a, const SupportPoint& b);

/// Scales a rational point (the corners divided by m in the shape checker).
SupportPoint scale(const SupportPoint& p, const Rational& s);

struct WeylTag {};
struct LaurentTag {};

/// Sorted so that iteration visits (x, y) in descending order.
using TermMap = std::map<SupportPoint, Rational, std::greater<>>;

/// Sparse element over the basis X^x Y^y (normal-ordered: X powers left of
/// Y powers). Tag selects the multiplication: WeylTag gives A_1^(l) with
/// [Y, X^(1/l)] = (1/l) X^(1/l - 1); LaurentTag gives the commutative
/// algebra L^(l) = K[x^(1/l), x^(-1/l), y].
///
/// Equality compares terms only; levels are related by the inclusions
/// A_1^(l) -> A_1^(h) for l | h.
template <class Tag>
class Element {
 public:
  Element() = default;

  /// Throws InvalidElement if a term has y < 0 or an x-exponent whose
  /// denominator does not divide level. Zero coefficients are dropped.
  Element(std::int64_t level, TermMap terms);

  /// Same as above with the smallest admissible level.
  static Element from_terms(TermMap terms);
  static Element monomial(const Rational& c, const Rational& x, std::int64_t y);
  static Element constant(const Rational& c);
  static Element x_power(const Rational& x);  ///< X^x
  static Element y_power(std::int64_t y);     ///< Y^y

  std::int64_t level() const { return level_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const SupportPoint& p) const;
  std::vector<SupportPoint> support() const;

  /// Same terms at level h. Throws NotDivisible when level() does not divide h.
  Element embed(std::int64_t h) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

  Element pow(unsigned k) const;

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  static Element multiply(const Element& a, const Element& b);
  void add_term(const SupportPoint& p, const Rational& c);

  std::int64_t level_ = 1;
  TermMap terms_;
};

using WeylElement = Element<WeylTag>;
using LaurentElement = Element<LaurentTag>;

template <>
WeylElement WeylElement::multiply(const WeylElement& a, const WeylElement& b);
template <>
LaurentElement LaurentElement::multiply(const LaurentElement& a, const LaurentElement& b);

extern template class Element<WeylTag>;
extern template class Element<LaurentTag>;

WeylElement commutator(const WeylElement& p, const WeylElement& q);

/// Basis-wise copy X^x Y^y -> x^x y^y.
LaurentElement psi(const WeylElement& p);
/// Inverse of psi on the basis.
WeylElement psi_inverse(const LaurentElement& p);

/// Smallest l such that every x-exponent of the terms is in (1/l)Z.
std::int64_t minimal_level(const TermMap& terms);

}  // namespace weylshape
