#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylshape/error.hpp"
#include "weylshape/rational.hpp"
#include "weylshape/unipoly.hpp"

using namespace weylshape;

namespace {

UniPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  const Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.denominator() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational::from_string("-5/10") == Rational(-1, 2));
  CHECK(Rational(5, 3).to_string() == "5/3");
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(Rational(1, 2), 1) == Rational(1, 2));
  CHECK(generalized_binomial(Rational(1), 2) == Rational(0));
  CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(generalized_binomial(Rational(-1), 3) == Rational(-1));
  CHECK(generalized_binomial(Rational(7), 0) == Rational(1));
}

TEST_CASE("division, gcd and derivative") {
  CHECK(gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  CHECK(poly({0, 0, 0, 1}).derivative() == poly({0, 0, 3}));
  CHECK(exact_div(poly({-1, 0, 1}), poly({1, 1})) == poly({-1, 1}));
  CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), poly({1, 1})), Error);
  const DivMod qr = divmod(poly({1, 0, 0, 1}), poly({1, 1}));
  CHECK(qr.quotient == poly({1, -1, 1}));
  CHECK(qr.remainder.is_zero());
  CHECK(gcd(poly({2, 2}), poly({4, 4})).leading_coefficient() == Rational(1));
}

TEST_CASE("squarefree decomposition") {
  SUBCASE("two layers") {
    // (x-1)^2 (x-2)
    const UniPoly p = poly({-1, 1}).pow(2) * poly({-2, 1});
    const auto sf = squarefree_decomposition(p);
    REQUIRE(sf.factors.size() == 2);
    CHECK(sf.factors[0] == std::pair{poly({-2, 1}), 1U});
    CHECK(sf.factors[1] == std::pair{poly({-1, 1}), 2U});
    CHECK(sf.reassemble() == p);
  }
  SUBCASE("pure power") {
    const auto sf = squarefree_decomposition(poly({0, 0, 0, 1}));
    REQUIRE(sf.factors.size() == 1);
    CHECK(sf.factors[0] == std::pair{poly({0, 1}), 3U});
  }
  SUBCASE("square of an irreducible quadratic factor") {
    const auto sf = squarefree_decomposition(poly({1, 0, -2, 0, 1}));
    REQUIRE(sf.factors.size() == 1);
    CHECK(sf.factors[0] == std::pair{poly({-1, 0, 1}), 2U});
  }
  SUBCASE("unit is kept") {
    const UniPoly p = poly({-3, 3});
    const auto sf = squarefree_decomposition(p);
    CHECK(sf.unit == Rational(3));
    CHECK(sf.reassemble() == p);
  }
}

TEST_CASE("k-th roots") {
  CHECK(poly_kth_root(poly({1, 2, 1}), 2) == poly({1, 1}));
  CHECK_FALSE(poly_kth_root(poly({1, 0, 1}), 2).has_value());
  CHECK(poly_kth_root(poly({1, 0, 3, 0, 3, 0, 1}), 3) == poly({1, 0, 1}));
  // leading coefficient is dropped: 4(x+1)^2 has monic root x+1
  CHECK(poly_kth_root(poly({4, 8, 4}), 2) == poly({1, 1}));
}

TEST_CASE("deflate and inflate") {
  const UniPoly p = poly({1, 0, 0, 2});
  CHECK(p.deflate(3) == poly({1, 2}));
  CHECK_FALSE(poly({1, 1}).deflate(2).has_value());
  CHECK(poly({1, 2}).inflate(3) == p);
  CHECK(poly({0, 0, 5}).x_valuation() == 2);
  CHECK(poly({1, -1}).evaluate(Rational(1)) == Rational(0));
}
