#include "tally.hpp"
#include "weylshape/parse.hpp"
#include "weylshape/props/oracles.hpp"
#include "weylshape/props/random.hpp"

namespace weylshape::props {

namespace {

const ElementShape kSmall{3, 4, 6};

}  // namespace

SuiteResult algebra_ore_relation(std::uint64_t seed, std::size_t cases) {
  Tally t("[Y, X^c] = c X^(c-1)");
  Rng rng(derive_seed(seed, 201));
  const WeylElement y = WeylElement::y_power(1);
  for (std::int64_t l = 1; l <= 6; ++l) {
    t.run([&] {
      const Rational c(1L, static_cast<long>(l));
      const WeylElement lhs = commutator(y, WeylElement::x_power(c));
      const WeylElement rhs = WeylElement::monomial(c, c - Rational(1), 0);
      t.expect(lhs == rhs, [&] { return "l=" + std::to_string(l) + ": got " + show(lhs); });
    });
  }
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const std::int64_t l = rng.range(1, 6);
      const Rational c(static_cast<long>(rng.range(-6 * l, 6 * l)), static_cast<long>(l));
      const WeylElement lhs = commutator(y, WeylElement::x_power(c));
      const WeylElement rhs = c.is_zero() ? WeylElement() : WeylElement::monomial(c, c - Rational(1), 0);
      t.expect(lhs == rhs, [&] { return "c=" + c.to_string() + ": got " + show(lhs); });
    });
  }
  return t.done();
}

SuiteResult algebra_associativity(std::uint64_t seed, std::size_t cases) {
  Tally t("(AB)C = A(BC)");
  Rng rng(derive_seed(seed, 202));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement a = random_element(rng, kSmall);
      const WeylElement b = random_element(rng, kSmall);
      const WeylElement c = random_element(rng, kSmall);
      t.expect((a * b) * c == a * (b * c), [&] { return show(a) + " | " + show(b) + " | " + show(c); });
    });
  }
  return t.done();
}

SuiteResult algebra_distributivity_and_unit(std::uint64_t seed, std::size_t cases) {
  Tally t("distributivity and unit");
  Rng rng(derive_seed(seed, 203));
  const WeylElement one = WeylElement::constant(Rational(1));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement a = random_element(rng, kSmall);
      const WeylElement b = random_element(rng, kSmall);
      const WeylElement c = random_element(rng, kSmall);
      t.expect(a * (b + c) == a * b + a * c, [&] { return "left: " + show(a) + " | " + show(b) + " | " + show(c); });
      t.expect((a + b) * c == a * c + b * c, [&] { return "right: " + show(a) + " | " + show(b) + " | " + show(c); });
      t.expect(one * a == a && a * one == a, [&] { return "unit: " + show(a); });
    });
  }
  return t.done();
}

SuiteResult algebra_grading(std::uint64_t seed, std::size_t cases) {
  Tally t("(1,-1)-grading is multiplicative");
  Rng rng(derive_seed(seed, 204));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const std::int64_t l = rng.range(1, 3);
      const std::int64_t ka = rng.range(-3 * l, 3 * l);
      const std::int64_t kb = rng.range(-3 * l, 3 * l);
      const WeylElement a = random_homogeneous(rng, l, ka);
      const WeylElement b = random_homogeneous(rng, l, kb);
      const Rational want(static_cast<long>(ka + kb), static_cast<long>(l));
      const WeylElement ab = a * b;
      for (const auto& [p, c] : ab.terms())
        t.expect(p.x - Rational(static_cast<long>(p.y)) == want,
                 [&] { return show(a) + " * " + show(b) + " has term at " + p.to_string(); });
    });
  }
  return t.done();
}

SuiteResult algebra_degree_zero_commutes(std::uint64_t seed, std::size_t cases) {
  Tally t("polynomials in XY commute");
  Rng rng(derive_seed(seed, 205));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement a = random_xy_polynomial(rng);
      const WeylElement b = random_xy_polynomial(rng);
      t.expect(commutator(a, b).is_zero(), [&] { return show(a) + " , " + show(b); });
    });
  }
  return t.done();
}

SuiteResult algebra_mul_matches_rewriting(std::uint64_t seed, std::size_t cases) {
  Tally t("binomial product = rewriting product");
  Rng rng(derive_seed(seed, 206));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement a = random_element(rng);
      const WeylElement b = random_element(rng);
      t.expect(a * b == rewrite_mul(a, b), [&] { return show(a) + " * " + show(b); });
    });
  }
  return t.done();
}

SuiteResult algebra_parse_format_roundtrip(std::uint64_t seed, std::size_t cases) {
  Tally t("parse(format(P)) = P");
  Rng rng(derive_seed(seed, 207));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement a = random_element(rng);
      const std::string text = format(a);
      const WeylElement back = parse_weyl(text);
      t.expect(back == a && a.level() % back.level() == 0, [&] { return text + " -> " + show(back); });
      const LaurentElement la = psi(a);
      t.expect(parse_laurent(format(la)) == la, [&] { return format(la); });
    });
  }
  return t.done();
}

}  // namespace weylshape::props
