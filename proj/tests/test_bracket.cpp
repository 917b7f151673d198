#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylshape/bracket.hpp"
#include "weylshape/error.hpp"
#include "weylshape/parse.hpp"

using namespace weylshape;

namespace {

WeylElement W(const char* s) { return parse_weyl(s); }
LaurentElement L(const char* s) { return parse_laurent(s); }

UniPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

UniPoly lin(long root) { return poly({-root, 1}); }

const char* const kNine = "X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7";

}  // namespace

TEST_CASE("proportionality") {
  const WeylElement p = W("X^2*Y + 3*X");
  CHECK(is_proportional(p, p, Direction{2, 1}));
  CHECK_FALSE(is_proportional(W("X"), W("Y"), Direction{1, 0}));
  // [XY, X] = X reaches the bound 2 + 1 - 2
  CHECK_FALSE(is_proportional(W("X*Y"), W("X"), Direction{1, 1}));
  CHECK(is_proportional(W("X*Y"), W("X^2*Y^2 + X"), Direction{1, 1}));
  CHECK_THROWS_AS(is_proportional(WeylElement(), p, Direction{1, 1}), Error);
}

TEST_CASE("bracket values") {
  const BracketOutcome xy = bracket(W("X"), W("Y"), Direction{1, 0});
  CHECK_FALSE(xy.proportional);
  CHECK(xy.value == L("-1"));
  CHECK(bracket_by_definition(W("X"), W("Y"), Direction{1, 0}) == xy);

  const WeylElement p = W(kNine);
  CHECK(bracket(p, p, Direction{3, 2}).proportional);
  CHECK(bracket(p, p * p, Direction{3, 2}).proportional);
  CHECK(bracket(p, p * p, Direction{3, 2}).value.is_zero());

  // [X^2, Y] = -2X; leading at (1,1) is -2x
  CHECK(bracket(W("X^2 + Y"), W("Y + 1"), Direction{1, 1}).value == L("-2*x"));
}

TEST_CASE("formula path needs rho > 0") {
  CHECK_THROWS_AS(bracket_by_formula(W("X"), W("Y"), Direction{0, 1}), Error);
  CHECK(bracket(W("X"), W("Y"), Direction{0, 1}) == bracket_by_definition(W("X"), W("Y"), Direction{0, 1}));
}

TEST_CASE("f polynomial") {
  const WeylElement p = W(kNine);
  CHECK(f_poly(p, Direction{3, 2}) == poly({1, 0, 0, 1}));
  CHECK(f_poly(W("5*X^2*Y"), Direction{1, 1}) == poly({5}));
  CHECK(from_f_poly(poly({1, 0, 0, 1}), SupportPoint{Rational(6), 3}, Direction{3, 2}) == leading(p, Direction{3, 2}));
  CHECK_THROWS_AS(f_poly(p, Direction{0, 1}), Error);
  // x^2 + 2xy + y^2 along (1,1): 1 + 2t + t^2
  CHECK(f_poly(W("X^2 + 2*X*Y + Y^2"), Direction{1, 1}) == poly({1, 2, 1}));
}

TEST_CASE("first identity witnesses") {
  SUBCASE("X against -XY") {
    // [X, -XY] = X; a = b = 1, c = (1,1) x (1,0) = -1
    const auto r = check_identity_1(W("X"), W("-X*Y"), Direction{1, 0});
    REQUIRE(std::holds_alternative<PEWitness>(r));
    CHECK(std::get<PEWitness>(r).h == 0);
    CHECK(std::get<PEWitness>(r).c == Rational(-1));
  }
  SUBCASE("X against Y") {
    const auto r = check_identity_1(W("X"), W("Y"), Direction{1, 0});
    REQUIRE(std::holds_alternative<PEWitness>(r));
    CHECK(std::get<PEWitness>(r).h == 0);
    CHECK(std::get<PEWitness>(r).c == Rational(-1));
    CHECK(std::get<PEWitness>(r).c_integral);
  }
  SUBCASE("equal arguments") {
    const WeylElement p = W(kNine);
    CHECK(std::holds_alternative<ProportionalCase>(check_identity_1(p, p, Direction{3, 2})));
  }
  SUBCASE("fractional corner") {
    const auto r = check_identity_1(W("3*X^5*Y + X"), W("-2*X^(14/3)*Y^3"), Direction{3, 2});
    REQUIRE(std::holds_alternative<PEWitness>(r));
    CHECK(std::get<PEWitness>(r).c == Rational(-31, 3));
    CHECK_FALSE(std::get<PEWitness>(r).c_integral);
  }
}

TEST_CASE("common roots") {
  const Direction d{1, 1};
  SUBCASE("powers of x + y") {
    const auto r = extract_common_root(W("X^2 + 2*X*Y + Y^2"), W("X^3 + 3*X^2*Y + 3*X*Y^2 + Y^3"), d);
    REQUIRE(r.has_value());
    CHECK(r->m == 2);
    CHECK(r->n == 3);
    CHECK(r->r.pow(2) * r->lambda_p == L("x^2 + 2*x*y + y^2"));
    CHECK(r->r.pow(3) * r->lambda_q == L("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  }
  SUBCASE("equal arguments") {
    const auto r = extract_common_root(W("X^2*Y - X"), W("X^2*Y - X"), Direction{1, 0});
    REQUIRE(r.has_value());
    CHECK(r->m == 1);
    CHECK(r->n == 1);
    CHECK(r->r * r->lambda_p == L("x^2*y"));
  }
  SUBCASE("no common root") {
    CHECK_FALSE(common_root(L("x^2 + 2*x*y + y^2"), L("x^3 + y^3"), d).has_value());
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(extract_common_root(W("X"), W("Y"), Direction{1, 0}), Error);
  }
}

TEST_CASE("PE equation") {
  SUBCASE("single root, eps = 2") {
    const PECheck r = pe_check(lin(1), lin(1), 1, 0, Rational(2), Rational(1), Rational(0));
    CHECK(r.holds);
    CHECK(r.h == 1U);
  }
  SUBCASE("single root with eps = 1 has a vanishing right-hand side") {
    CHECK_FALSE(pe_check(lin(1), lin(1), 1, 0, Rational(1), Rational(1), Rational(0)).holds);
  }
  SUBCASE("double root") {
    const PECheck r = pe_check(lin(1).pow(2), lin(1), 1, 0, Rational(1), Rational(1), Rational(0));
    CHECK(r.holds);
    CHECK(r.h == 1U);
  }
  SUBCASE("spurious root") {
    CHECK_FALSE(pe_check(lin(1), lin(2), 1, 0, Rational(1), Rational(1), Rational(0)).holds);
  }
}

TEST_CASE("multiplicity rule") {
  CHECK(multiplicity_report(lin(1).pow(2), lin(1) * lin(2), 0).pass);
  CHECK(multiplicity_report(lin(1), lin(1).pow(3) * lin(2), 2).pass);
  const MultiplicityReport bad = multiplicity_report(lin(1), lin(1).pow(2) * lin(2), 0);
  CHECK_FALSE(bad.pass);
  CHECK(bad.layer == lin(1));
  CHECK(bad.expected == 1);
  CHECK_FALSE(multiplicity_report(lin(1), lin(1) * lin(2).pow(2), 0).pass);
  CHECK_THROWS_AS(multiplicity_report(poly({0, 1}), lin(1), 0), Error);
}

TEST_CASE("powers of binomials") {
  CHECK(is_power_of_binomial(poly({-2, 0, 0, 1}).pow(2), 3));
  CHECK_FALSE(is_power_of_binomial(poly({-1, 0, 1}), 1));
  CHECK(is_power_of_binomial(poly({7}), 2));
  CHECK(is_power_of_binomial(poly({-1, 0, 1}), 2));
}
