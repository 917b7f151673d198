#include <algorithm>

#include "tally.hpp"
#include "weylshape/props/oracles.hpp"
#include "weylshape/props/random.hpp"

namespace weylshape::props {

namespace {

Rational as_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Strictly between a < b: the mediant and the two mediants next to it.
std::vector<Direction> between(const Direction& a, const Direction& b) {
  if (a == kMinDirection && b == kMaxDirection) return {Direction{1, 0}, Direction{1, 1}, Direction{0, 1}};
  const Direction m = mediant(a, b);
  return {mediant(a, m), m, mediant(m, b)};
}

WeylElement aligned_partner(Rng& rng, const WeylElement& p) {
  switch (rng.below(4)) {
    case 0:
      return p.pow(2) * random_coefficient(rng);
    case 1:
      return p * random_coefficient(rng) + WeylElement::constant(random_coefficient(rng));
    default:
      return random_element(rng);
  }
}

}  // namespace

SuiteResult geometry_multiplicativity(std::uint64_t seed, std::size_t cases) {
  Tally t("degrees and corners of a product");
  Rng rng(derive_seed(seed, 301));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement p = random_element(rng);
      const WeylElement q = random_element(rng);
      const WeylElement pq = p * q;
      auto pair = [&] { return show(p) + " , " + show(q); };
      t.expect(w_corner(pq) == w_corner(p) + w_corner(q), [&] { return "w: " + pair(); });
      t.expect(wbar_corner(pq) == wbar_corner(p) + wbar_corner(q), [&] { return "wbar: " + pair(); });
      for (const Direction& d : direction_sample()) {
        t.expect(v_deg(pq, d) == v_deg(p, d) + v_deg(q, d), [&] { return "v at " + d.to_string() + ": " + pair(); });
        if (!d.strict()) continue;
        t.expect(leading(pq, d) == leading(p, d) * leading(q, d),
                 [&] { return "leading at " + d.to_string() + ": " + pair(); });
        t.expect(st(pq, d) == st(p, d) + st(q, d), [&] { return "st at " + d.to_string() + ": " + pair(); });
        t.expect(en(pq, d) == en(p, d) + en(q, d), [&] { return "en at " + d.to_string() + ": " + pair(); });
      }
    });
  }
  return t.done();
}

SuiteResult geometry_commutator_corners(std::uint64_t seed, std::size_t cases) {
  Tally t("corners and degrees of a commutator");
  Rng rng(derive_seed(seed, 302));
  const SupportPoint one{Rational(1), 1};
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement p = random_element(rng);
      const WeylElement q = aligned_partner(rng, p);
      const WeylElement r = commutator(p, q);
      auto pair = [&] { return show(p) + " , " + show(q); };

      const bool w_apart = !cross(w_corner(p), w_corner(q)).is_zero();
      const bool w_hit = !r.is_zero() && w_corner(r) == w_corner(p) + w_corner(q) - one;
      t.expect(w_apart == w_hit, [&] { return "w: " + pair(); });

      const bool wb_apart = !cross(wbar_corner(p), wbar_corner(q)).is_zero();
      const bool wb_hit = !r.is_zero() && wbar_corner(r) == wbar_corner(p) + wbar_corner(q) - one;
      t.expect(wb_apart == wb_hit, [&] { return "wbar: " + pair(); });

      for (const Direction& d : direction_sample())
        t.expect(v_deg(r, d) <= v_deg(p, d) + v_deg(q, d) - as_rational(d.rho + d.sigma),
                 [&] { return "degree bound at " + d.to_string() + ": " + pair(); });
    });
  }
  return t.done();
}

SuiteResult geometry_dir_of(std::uint64_t seed, std::size_t cases) {
  Tally t("dir_of annihilates its point");
  Rng rng(derive_seed(seed, 303));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const SupportPoint p = random_off_diagonal_point(rng);
      const Direction d = dir_of(p);
      t.expect(d.value(p).is_zero() && d.strict(), [&] { return p.to_string() + " -> " + d.to_string(); });
    });
  }
  return t.done();
}

SuiteResult geometry_directions_match_brute_force(std::uint64_t seed, std::size_t cases) {
  Tally t("hull directions = pairwise directions");
  Rng rng(derive_seed(seed, 304));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const LaurentElement p = psi(random_element(rng, ElementShape{3, 7, 6}));
      const auto fast = directions(p);
      const auto slow = brute_directions(p);
      t.expect(fast == slow, [&] { return show(p); });
    });
  }
  return t.done();
}

SuiteResult geometry_consecutive_directions(std::uint64_t seed, std::size_t cases) {
  Tally t("geometry between consecutive directions");
  Rng rng(derive_seed(seed, 305));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement p = random_element(rng);
      const auto closed = closed_directions(psi(p));
      for (std::size_t k = 0; k + 1 < closed.size(); ++k) {
        const Direction& lo = closed[k];
        const Direction& hi = closed[k + 1];
        const SupportPoint shared = en(p, lo);
        t.expect(shared == st(p, hi), [&] { return "corners differ between " + lo.to_string() + ", " + hi.to_string(); });
        for (const Direction& mid : between(lo, hi)) {
          const auto supp = leading(p, mid).support();
          t.expect(supp.size() == 1 && supp.front() == shared,
                   [&] { return show(p) + " at " + mid.to_string(); });
        }
      }
      for (const Direction& d : directions(p)) {
        const SupportPoint s = st(p, d);
        const SupportPoint e = en(p, d);
        for (const Direction& other : direction_sample()) {
          if (other == d) continue;
          const bool ok = dir_less(d, other) ? other.value(s) < other.value(e) : other.value(s) > other.value(e);
          t.expect(ok, [&] { return show(p) + " d=" + d.to_string() + " d'=" + other.to_string(); });
        }
      }
    });
  }
  return t.done();
}

SuiteResult geometry_subrectangular_equivalence(std::uint64_t seed, std::size_t cases) {
  Tally t("rectangle test = direction criterion");
  Rng rng(derive_seed(seed, 306));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      WeylElement p;
      for (;;) {
        if (rng.coin()) {
          const std::int64_t a = rng.range(1, 5);
          const std::int64_t b = rng.range(1, 5);
          TermMap terms;
          terms.emplace(SupportPoint{as_rational(a), b}, random_coefficient(rng));
          const auto extra = rng.range(0, 4);
          for (std::int64_t k = 0; k < extra; ++k)
            terms.emplace(SupportPoint{as_rational(rng.range(0, a)), rng.range(0, b)}, random_coefficient(rng));
          p = WeylElement(1, std::move(terms));
        } else {
          p = random_integral_element(rng, 5, 5);
        }
        const auto supp = p.support();
        const bool in_kx = std::all_of(supp.begin(), supp.end(), [](const SupportPoint& q) { return q.y == 0; });
        const bool in_ky = std::all_of(supp.begin(), supp.end(), [](const SupportPoint& q) { return q.x.is_zero(); });
        if (!in_kx && !in_ky) break;
      }
      t.expect(is_subrectangular(p) == !dir_meets_interior(p), [&] { return show(p); });
    });
  }
  return t.done();
}

SuiteResult geometry_succ_pred(std::uint64_t seed, std::size_t cases) {
  Tally t("succ/pred are the neighbouring directions");
  Rng rng(derive_seed(seed, 307));
  std::vector<Direction> strict;
  for (const Direction& d : direction_sample())
    if (d.strict()) strict.push_back(d);
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement p = random_element(rng);
      const Direction d = rng.pick(strict);
      const auto dirs = directions(p);
      std::optional<Direction> above;
      std::optional<Direction> below;
      for (const Direction& e : dirs) {
        if (dir_less(d, e) && !above) above = e;
        if (dir_less(e, d)) below = e;
      }
      t.expect(succ(p, d) == above, [&] { return "succ of " + show(p) + " at " + d.to_string(); });
      t.expect(pred(p, d) == below, [&] { return "pred of " + show(p) + " at " + d.to_string(); });
    });
  }
  return t.done();
}

}  // namespace weylshape::props
