#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weylshape/geometry.hpp"
#include "weylshape/unipoly.hpp"

namespace weylshape::props {

/// mt19937_64 with explicit modulo mapping, so a seed gives the same stream
/// with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// In [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (engine_() & 1U) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for a named suite.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

struct ElementShape {
  std::int64_t max_level = 3;
  std::size_t max_terms = 5;
  std::int64_t max_exponent = 6;
};

/// One of +-1, +-2, +-1/2, +-3.
Rational random_coefficient(Rng& rng);

/// Nonzero element of level l in {1..max_level} with 1..max_terms terms at
/// (i/l, j), 0 <= i/l <= max_exponent, 0 <= j <= max_exponent.
WeylElement random_element(Rng& rng, const ElementShape& shape = {});

/// Same at level 1.
WeylElement random_integral_element(Rng& rng, std::size_t max_terms = 5, std::int64_t max_exponent = 6);

/// Nonzero (1,-1)-homogeneous element of degree k/l (x - y = k/l) at level l.
WeylElement random_homogeneous(Rng& rng, std::int64_t level, std::int64_t k);

/// Nonzero polynomial in XY.
WeylElement random_xy_polynomial(Rng& rng);

/// Terms of `noise` pushed strictly below v_d(p) (by dropping the rest).
WeylElement below_degree(const WeylElement& noise, const WeylElement& p, const Direction& d);

/// Every direction with |rho|, |sigma| <= 5.
const std::vector<Direction>& direction_sample();
/// The strict ones with rho > 0.
const std::vector<Direction>& positive_direction_sample();

/// Random point (i/l, j) with l <= 3, off the diagonal.
SupportPoint random_off_diagonal_point(Rng& rng);

/// Product of (x - a)^m over distinct nonzero integer roots.
struct RootedPoly {
  std::vector<std::pair<std::int64_t, unsigned>> roots;
  Rational unit{1};
  UniPoly expand() const;
};

/// Random polynomial of degree <= max_degree with small coefficients.
UniPoly random_poly(Rng& rng, int max_degree);

}  // namespace weylshape::props
