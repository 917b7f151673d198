#include <tuple>

#include "tally.hpp"
#include "weylshape/automorphism.hpp"
#include "weylshape/props/random.hpp"

namespace weylshape::props {

namespace {

const ElementShape kIntegral{1, 4, 4};

ShiftY random_shift_y(Rng& rng) {
  const Direction d = rng.pick(positive_direction_sample());
  return ShiftY{random_coefficient(rng), Rational(static_cast<long>(d.sigma), static_cast<long>(d.rho))};
}

// A random automorphism together with an element in its domain.
std::pair<Automorphism, ElementShape> random_kind(Rng& rng) {
  const int sign = rng.coin() ? 1 : -1;
  switch (rng.below(4)) {
    case 0:
      return {random_shift_y(rng), ElementShape{}};
    case 1:
      return {ShiftYPoly{random_coefficient(rng), static_cast<unsigned>(rng.range(1, 3)), sign}, ElementShape{}};
    case 2:
      return {ShiftXPoly{random_coefficient(rng), static_cast<unsigned>(rng.range(1, 2)), sign}, kIntegral};
    default:
      return {Rotation{static_cast<unsigned>(rng.range(1, 3))}, kIntegral};
  }
}

}  // namespace

SuiteResult automorphism_degree_preserved(std::uint64_t seed, std::size_t cases) {
  Tally t("Y-shift keeps its own degree");
  Rng rng(derive_seed(seed, 501));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const ShiftY a = random_shift_y(rng);
      const Direction d = own_direction(a);
      const WeylElement p = random_element(rng);
      t.expect(v_deg(weylshape::apply(a, p), d) == v_deg(p, d), [&] { return to_string(a) + " on " + show(p); });
    });
  }
  return t.done();
}

SuiteResult automorphism_transport(std::uint64_t seed, std::size_t cases) {
  Tally t("leading terms are transported");
  Rng rng(derive_seed(seed, 502));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      Automorphism a;
      ElementShape shape;
      if (i % 3 == 0) {
        // rho in {4, 5} never divides a level <= 3, so the image needs a finer level
        Direction d;
        do {
          d = rng.pick(positive_direction_sample());
        } while (d.rho < 4);
        a = ShiftY{random_coefficient(rng), Rational(static_cast<long>(d.sigma), static_cast<long>(d.rho))};
      } else {
        do {
          std::tie(a, shape) = random_kind(rng);
        } while (std::holds_alternative<Rotation>(a));
      }
      const WeylElement p = random_element(rng, shape);
      t.expect(verify_leading_transport(a, p, own_direction(a)), [&] { return to_string(a) + " on " + show(p); });
    });
  }
  return t.done();
}

SuiteResult automorphism_commutators(std::uint64_t seed, std::size_t cases) {
  Tally t("automorphisms preserve commutators");
  Rng rng(derive_seed(seed, 503));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const auto [a, shape] = random_kind(rng);
      const WeylElement p = random_element(rng, shape);
      const WeylElement q = random_element(rng, shape);
      t.expect(commutator(weylshape::apply(a, p), weylshape::apply(a, q)) == weylshape::apply(a, commutator(p, q)),
               [&, &a = a] { return to_string(a) + " on " + show(p) + " , " + show(q); });
    });
  }
  return t.done();
}

SuiteResult automorphism_rotation_degrees(std::uint64_t seed, std::size_t cases) {
  Tally t("rotation swaps the coordinate degrees");
  Rng rng(derive_seed(seed, 504));
  const Direction diag{1, 1};
  const Direction xdir{1, 0};
  const Direction ydir{0, 1};
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement p = random_element(rng, kIntegral);
      const WeylElement r = weylshape::apply(Rotation{1}, p);
      t.expect(v_deg(r, diag) == v_deg(p, diag) && v_deg(r, xdir) == v_deg(p, ydir) && v_deg(r, ydir) == v_deg(p, xdir),
               [&] { return show(p); });
    });
  }
  return t.done();
}

SuiteResult automorphism_inverse_roundtrip(std::uint64_t seed, std::size_t cases) {
  Tally t("inverse undoes the automorphism");
  Rng rng(derive_seed(seed, 505));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const auto [a, shape] = random_kind(rng);
      const WeylElement p = random_element(rng, shape);
      t.expect(weylshape::apply(inverse(a), weylshape::apply(a, p)) == p, [&, &a = a] { return to_string(a) + " on " + show(p); });
    });
  }
  return t.done();
}

}  // namespace weylshape::props
