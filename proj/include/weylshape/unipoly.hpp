#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylshape/rational.hpp"

namespace weylshape {

/// Dense univariate polynomial over the rationals.
///
/// coefficient(i) is the coefficient of x^i. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c);
  /// c * x^k
  static UniPoly monomial(const Rational& c, std::size_t k);
  /// x
  static UniPoly x();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  /// Throws ZeroPolynomial for 0.
  const Rational& leading_coefficient() const;

  /// Largest h with x^h | p. Throws ZeroPolynomial for 0.
  std::size_t x_valuation() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(unsigned k) const;
  UniPoly shift_up(std::size_t h) const;  ///< x^h * p
  Rational evaluate(const Rational& at) const;

  /// q with p(x) = q(x^r), when every exponent of p is a multiple of r.
  std::optional<UniPoly> deflate(unsigned r) const;
  /// p(x^r)
  UniPoly inflate(unsigned r) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Descending powers, e.g. "x^3 - 1/2*x + 1"; zero prints "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws DivisionByZero when the divisor is 0.
DivMod divmod(const UniPoly& p, const UniPoly& q);

/// p / q, throwing NonDivisible when the remainder is nonzero.
UniPoly exact_div(const UniPoly& p, const UniPoly& q);

bool divides(const UniPoly& d, const UniPoly& p);

/// Monic gcd. gcd(0,0) throws UndefinedGcd.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

struct SquarefreeDecomposition {
  Rational unit;
  /// Pairwise-coprime monic squarefree factors with their multiplicities,
  /// in increasing multiplicity order.
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly reassemble() const;
};

/// Yun's algorithm. Throws ZeroPolynomial for 0.
SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

/// Monic g with g^k = p / lc(p), or nullopt when p / lc(p) is not a k-th
/// power in Q[x]. Requires p != 0, k >= 1.
std::optional<UniPoly> poly_kth_root(const UniPoly& p, unsigned k);

}  // namespace weylshape
