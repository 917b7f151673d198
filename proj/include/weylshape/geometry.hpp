#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylshape/element.hpp"

namespace weylshape {

/// A coprime pair (rho, sigma) with rho + sigma >= 0.
///
/// Directions are totally ordered counterclockwise: (1,-1) is the minimum,
/// (-1,1) the maximum, and between them d1 < d2 iff cross(d1, d2) > 0.
struct Direction {
  std::int64_t rho = 1;
  std::int64_t sigma = 0;

  /// Throws InvalidDirection unless gcd(rho, sigma) = 1 and rho + sigma >= 0.
  static Direction make(std::int64_t rho, std::int64_t sigma);
  /// Parses "rho,sigma".
  static Direction parse(const std::string& text);

  /// rho + sigma > 0
  bool strict() const { return rho + sigma > 0; }
  /// strict() and rho > 0
  bool positive_rho() const { return strict() && rho > 0; }

  Rational value(const SupportPoint& p) const;

  std::string to_string() const;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend std::strong_ordering operator<=>(const Direction& a, const Direction& b);
};

inline constexpr Direction kMinDirection{1, -1};
inline constexpr Direction kMaxDirection{-1, 1};

std::int64_t cross(const Direction& a, const Direction& b);
bool dir_less(const Direction& a, const Direction& b);

/// A rational, or -infinity for the zero element.
class DegreeValue {
 public:
  DegreeValue() = default;  // -infinity
  explicit DegreeValue(Rational v) : v_(std::move(v)) {}
  static DegreeValue neg_infinity() { return DegreeValue(); }

  bool is_neg_infinity() const { return !v_.has_value(); }
  /// Throws ZeroElement for -infinity.
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const DegreeValue&, const DegreeValue&) = default;
  friend std::strong_ordering operator<=>(const DegreeValue& a, const DegreeValue& b);
  friend DegreeValue operator+(const DegreeValue& a, const DegreeValue& b);
  friend DegreeValue operator-(const DegreeValue& a, const Rational& b);

 private:
  std::optional<Rational> v_;
};

/// max of rho*x + sigma*y over the support.
DegreeValue v_deg(const LaurentElement& p, const Direction& d);
DegreeValue v_deg(const WeylElement& p, const Direction& d);

/// Sum of the terms of maximal (rho,sigma)-degree. Throws ZeroElement.
LaurentElement leading(const LaurentElement& p, const Direction& d);
LaurentElement leading(const WeylElement& p, const Direction& d);

/// Point of the (1,-1)-leading term with largest x. Throws ZeroElement.
SupportPoint w_corner(const LaurentElement& p);
SupportPoint w_corner(const WeylElement& p);
/// Point of the (-1,1)-leading term with largest y. Throws ZeroElement.
SupportPoint wbar_corner(const LaurentElement& p);
SupportPoint wbar_corner(const WeylElement& p);

/// Start and end of the leading edge. st rejects (1,-1) and en rejects (-1,1)
/// with ForbiddenDirection.
SupportPoint st(const LaurentElement& p, const Direction& d);
SupportPoint st(const WeylElement& p, const Direction& d);
SupportPoint en(const LaurentElement& p, const Direction& d);
SupportPoint en(const WeylElement& p, const Direction& d);

/// The unique strict direction d with d.value(p) == 0. Throws DiagonalPoint
/// when p lies on Z(1,1).
Direction dir_of(const SupportPoint& p);

/// Directions (rho + sigma > 0) whose leading term has at least two points,
/// ascending. Read off the outer normals of the convex hull of the support.
std::vector<Direction> directions(const LaurentElement& p);
std::vector<Direction> directions(const WeylElement& p);

/// directions() plus (1,-1) and (-1,1).
std::vector<Direction> closed_directions(const LaurentElement& p);

/// { dir(q - en_d) : q in Supp, v_{-1,1}(q) > v_{-1,1}(en_d) }, ascending.
std::vector<Direction> dir_sup(const LaurentElement& p, const Direction& d);
/// { dir(q - st_d) : q in Supp, v_{1,-1}(q) > v_{1,-1}(st_d) }, ascending.
std::vector<Direction> dir_inf(const LaurentElement& p, const Direction& d);

/// min dir_sup / max dir_inf; nullopt when empty. d must be strict.
std::optional<Direction> succ(const LaurentElement& p, const Direction& d);
std::optional<Direction> succ(const WeylElement& p, const Direction& d);
std::optional<Direction> pred(const LaurentElement& p, const Direction& d);
std::optional<Direction> pred(const WeylElement& p, const Direction& d);

/// Vertex (a, b) with a, b >= 1 such that (a,b) is in Supp(P) and
/// Supp(P) lies in [0,a]x[0,b]; nullopt when P is not subrectangular.
/// P must be a level-1 element with integral exponents (PreconditionViolated).
std::optional<SupportPoint> subrectangular_vertex(const WeylElement& p);
bool is_subrectangular(const WeylElement& p);

/// Every direction of the closed set with |rho|, |sigma| <= bound, ascending.
std::vector<Direction> sample_directions(std::int64_t bound);

/// Normalized mediant of two directions; strictly between them when a < b
/// and {a, b} != {(1,-1), (-1,1)}.
Direction mediant(const Direction& a, const Direction& b);

/// True iff neither of p, q divides the other.
bool divisibility_filter(std::int64_t p, std::int64_t q);

}  // namespace weylshape
