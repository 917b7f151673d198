#include "weylshape/props/random.hpp"

namespace weylshape::props {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational random_coefficient(Rng& rng) {
  static const std::vector<Rational> values{Rational(1), Rational(2), Rational(1, 2), Rational(3)};
  const Rational& v = rng.pick(values);
  return rng.coin() ? v : -v;
}

WeylElement random_element(Rng& rng, const ElementShape& shape) {
  const std::int64_t l = rng.range(1, shape.max_level);
  const auto n = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(shape.max_terms)));
  TermMap terms;
  while (terms.size() < n) {
    const SupportPoint p{Rational(static_cast<long>(rng.range(0, shape.max_exponent * l)), static_cast<long>(l)),
                         rng.range(0, shape.max_exponent)};
    terms.emplace(p, random_coefficient(rng));
  }
  return WeylElement(l, std::move(terms));
}

WeylElement random_integral_element(Rng& rng, std::size_t max_terms, std::int64_t max_exponent) {
  return random_element(rng, ElementShape{1, max_terms, max_exponent});
}

WeylElement random_homogeneous(Rng& rng, std::int64_t level, std::int64_t k) {
  // points (k/l + j, j) with x >= 0
  const auto n = rng.range(1, 3);
  TermMap terms;
  const Rational shift(static_cast<long>(k), static_cast<long>(level));
  std::int64_t j0 = 0;
  while (shift + Rational(static_cast<long>(j0)) < Rational(0)) ++j0;
  while (static_cast<std::int64_t>(terms.size()) < n) {
    const std::int64_t j = j0 + rng.range(0, 3);
    terms.emplace(SupportPoint{shift + Rational(static_cast<long>(j)), j}, random_coefficient(rng));
  }
  return WeylElement(level, std::move(terms));
}

WeylElement random_xy_polynomial(Rng& rng) {
  const WeylElement xy = WeylElement::x_power(Rational(1)) * WeylElement::y_power(1);
  WeylElement out;
  while (out.is_zero()) {
    const auto deg = rng.range(0, 3);
    for (std::int64_t i = 0; i <= deg; ++i)
      if (rng.coin()) out += xy.pow(static_cast<unsigned>(i)) * random_coefficient(rng);
  }
  return out;
}

WeylElement below_degree(const WeylElement& noise, const WeylElement& p, const Direction& d) {
  const Rational top = v_deg(p, d).value();
  TermMap kept;
  for (const auto& [pt, c] : noise.terms())
    if (d.value(pt) < top) kept.emplace(pt, c);
  return WeylElement(noise.level(), std::move(kept));
}

const std::vector<Direction>& direction_sample() {
  static const std::vector<Direction> sample = sample_directions(5);
  return sample;
}

const std::vector<Direction>& positive_direction_sample() {
  static const std::vector<Direction> sample = [] {
    std::vector<Direction> out;
    for (const Direction& d : direction_sample())
      if (d.positive_rho()) out.push_back(d);
    return out;
  }();
  return sample;
}

SupportPoint random_off_diagonal_point(Rng& rng) {
  for (;;) {
    const std::int64_t l = rng.range(1, 3);
    const SupportPoint p{Rational(static_cast<long>(rng.range(-6 * l, 6 * l)), static_cast<long>(l)),
                         rng.range(-6, 6)};
    if (p.x != Rational(static_cast<long>(p.y))) return p;
  }
}

UniPoly RootedPoly::expand() const {
  UniPoly out = UniPoly::constant(unit);
  for (const auto& [a, m] : roots)
    out = out * UniPoly({Rational(static_cast<long>(-a)), Rational(1)}).pow(m);
  return out;
}

UniPoly random_poly(Rng& rng, int max_degree) {
  std::vector<Rational> c;
  const auto deg = rng.range(0, max_degree);
  for (std::int64_t i = 0; i <= deg; ++i) c.push_back(rng.range(0, 3) == 0 ? Rational(0) : random_coefficient(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return UniPoly(std::move(c));
}

}  // namespace weylshape::props
