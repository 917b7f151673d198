#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylshape/automorphism.hpp"
#include "weylshape/error.hpp"
#include "weylshape/parse.hpp"

using namespace weylshape;

namespace {

WeylElement W(const char* s) { return parse_weyl(s); }
LaurentElement L(const char* s) { return parse_laurent(s); }

// std::apply is visible through the variant, so always qualify.
WeylElement act(const Automorphism& a, const WeylElement& p) { return weylshape::apply(a, p); }

}  // namespace

TEST_CASE("images of generators") {
  const ShiftY shift{Rational(1), Rational(0)};
  CHECK(act(shift, W("X")) == W("X"));
  CHECK(act(shift, W("Y")) == W("Y + 1"));
  CHECK(act(Rotation{1}, W("X*Y")) == W("-X*Y - 1"));
  CHECK(act(Rotation{2}, W("X + Y")) == W("-X - Y"));
  CHECK(act(ShiftYPoly{Rational(1), 2, -1}, W("Y")) == W("Y - X^2"));
  CHECK(act(ShiftXPoly{Rational(1), 1, 1}, W("X*Y")) == W("X*Y + Y^2"));
  CHECK(act(ShiftY{Rational(3), Rational(1, 2)}, W("Y^2")) == W("Y^2 + 6*X^(1/2)*Y + 9*X + 3/2*X^(-1/2)"));
}

TEST_CASE("images in the commutative algebra") {
  CHECK(apply_L(ShiftY{Rational(1), Rational(1, 2)}, L("y")) == L("y + x^(1/2)"));
  CHECK(apply_L(Rotation{1}, L("x^2*y")) == L("-x*y^2"));
  CHECK(apply_L(ShiftY{Rational(1), Rational(1, 2)}, L("y^2")) == L("y^2 + 2*x^(1/2)*y + x"));
}

TEST_CASE("zero shift is the identity") {
  const WeylElement p = W("X^2*Y^3 - 4*X + 1/2");
  CHECK(act(ShiftY{Rational(0), Rational(2, 3)}, p) == p);
  CHECK(act(ShiftYPoly{Rational(0), 3, 1}, p) == p);
  CHECK(act(ShiftXPoly{Rational(0), 2, -1}, p) == p);
}

TEST_CASE("domains") {
  CHECK_THROWS_AS(act(ShiftY{Rational(1), Rational(-1)}, W("Y")), Error);
  CHECK_THROWS_AS(act(ShiftXPoly{Rational(1), 1, 1}, W("X^(1/2)")), Error);
  CHECK_THROWS_AS(act(Rotation{1}, W("X^(1/2)")), Error);
}

TEST_CASE("own directions") {
  CHECK(own_direction(ShiftY{Rational(1), Rational(-1, 2)}) == Direction{2, -1});
  CHECK(own_direction(ShiftY{Rational(1), Rational(3)}) == Direction{1, 3});
  CHECK(own_direction(ShiftYPoly{Rational(1), 2, 1}) == Direction{1, 2});
  CHECK(own_direction(ShiftXPoly{Rational(1), 3, 1}) == Direction{3, 1});
  CHECK_THROWS_AS(own_direction(Rotation{1}), Error);
}

TEST_CASE("leading terms are transported") {
  CHECK(verify_leading_transport(ShiftY{Rational(1), Rational(0)}, W("X + Y"), Direction{1, 0}));
  CHECK(verify_leading_transport(ShiftY{Rational(2), Rational(-1, 2)}, W("X^2*Y + X"), Direction{2, -1}));
  CHECK(verify_leading_transport(ShiftY{Rational(0), Rational(1)}, W("X*Y^2"), Direction{1, 1}));
  CHECK(verify_leading_transport(ShiftXPoly{Rational(-2), 2, 1}, W("X^2*Y + Y^3"), Direction{2, 1}));
  CHECK_THROWS_AS(verify_leading_transport(ShiftY{Rational(1), Rational(0)}, W("X"), Direction{1, 1}), Error);
}

TEST_CASE("inverses") {
  const WeylElement p = W("X^3*Y - 2*X*Y^2 + 5");
  for (const Automorphism& a : std::vector<Automorphism>{ShiftY{Rational(2), Rational(1, 3)},
                                                         ShiftYPoly{Rational(-1, 2), 2, 1},
                                                         ShiftXPoly{Rational(3), 1, -1}, Rotation{1}, Rotation{3}}) {
    CAPTURE(to_string(a));
    CHECK(act(inverse(a), act(a, p)) == p);
    CHECK(act(a, act(inverse(a), p)) == p);
  }
}
