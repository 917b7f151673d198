#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylshape/error.hpp"
#include "weylshape/parse.hpp"
#include "weylshape/props/oracles.hpp"

using namespace weylshape;

namespace {

WeylElement W(const char* s) { return parse_weyl(s); }
LaurentElement L(const char* s) { return parse_laurent(s); }

}  // namespace

TEST_CASE("products normal-order Y past X") {
  CHECK(W("Y") * W("X") == W("X*Y + 1"));
  CHECK(W("Y^2") * W("X^2") == W("X^2*Y^2 + 4*X*Y + 2"));
  CHECK(W("Y") * W("X^(1/2)") == W("X^(1/2)*Y + 1/2*X^(-1/2)"));
  CHECK(W("Y^2") * W("X^2") == props::rewrite_mul(W("Y^2"), W("X^2")));
  CHECK(W("X*Y") * W("X*Y") == W("X^2*Y^2 + X*Y"));
}

TEST_CASE("commutators") {
  CHECK(commutator(W("Y"), W("X")) == W("1"));
  CHECK(commutator(W("Y^2"), W("X")) == W("2*Y"));
  CHECK(commutator(W("X*Y"), W("X")) == W("X"));
  CHECK(commutator(W("X^2 + Y"), W("X^2 + Y")).is_zero());
}

TEST_CASE("levels and embedding") {
  CHECK(W("X^(1/2) + X^(1/3)").level() == 6);
  CHECK(W("X").embed(2).level() == 2);
  CHECK(W("X").embed(2) == W("X"));
  CHECK(W("Y").embed(3).level() == 3);
  CHECK_THROWS_AS(W("X^(1/2)").embed(3), Error);
  CHECK(W("X^(1/2)").pow(2) == W("X"));
}

TEST_CASE("psi copies the basis") {
  CHECK(psi(W("X^2*Y + 1")) == L("x^2*y + 1"));
  CHECK(psi(WeylElement()).is_zero());
  CHECK(psi(W("3/2*X^(1/3)*Y^2")) == L("3/2*x^(1/3)*y^2"));
  CHECK(psi_inverse(L("x*y - y")) == W("X*Y - Y"));
}

TEST_CASE("laurent multiplication commutes") {
  const LaurentElement a = L("x + y^2");
  const LaurentElement b = L("x^(1/2)*y - 2");
  CHECK(a * b == b * a);
  CHECK(L("y") * L("x") == L("x*y"));
}

TEST_CASE("parsing") {
  CHECK(W("Y*X") == W("X*Y + 1"));
  CHECK(W("X^3 + X^5 + X^6*Y").size() == 3);
  CHECK(W("X^(2/4)") == W("X^(1/2)"));
  CHECK(W("0").is_zero());
  CHECK(format(W("X^2*Y - 1/2*X")) == "X^2*Y - 1/2*X");

  CHECK_THROWS_AS(W("X^"), ParseError);
  CHECK_THROWS_AS(W("X + + "), ParseError);
  CHECK_THROWS_AS(W("Y^(1/2)"), Error);
  CHECK_THROWS_AS(W("Z"), ParseError);
  try {
    W("X*Q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("format round trips") {
  for (const char* s : {"X^(1/3)*Y^2 - 3", "-X", "1/2*Y^4 + X^(5/2)", "7"}) {
    CAPTURE(s);
    CHECK(W(format(W(s)).c_str()) == W(s));
  }
}
