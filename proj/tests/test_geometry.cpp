#include <algorithm>
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylshape/error.hpp"
#include "weylshape/geometry.hpp"
#include "weylshape/parse.hpp"
#include "weylshape/render.hpp"

using namespace weylshape;

namespace {

WeylElement W(const char* s) { return parse_weyl(s); }

const char* const kNine = "X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7";

SupportPoint pt(long x, std::int64_t y) { return SupportPoint{Rational(x), y}; }

}  // namespace

TEST_CASE("direction order") {
  CHECK(cross(Direction{1, -1}, Direction{2, -1}) == 1);
  CHECK(dir_less(Direction{1, -1}, Direction{2, -1}));
  CHECK(dir_less(Direction{1, 0}, Direction{0, 1}));
  CHECK(dir_less(kMinDirection, kMaxDirection));
  CHECK_FALSE(dir_less(Direction{0, 1}, Direction{1, 0}));
  CHECK(Direction::parse("3,2") == Direction{3, 2});
  CHECK(Direction::parse(" -1 , 2 ") == Direction{-1, 2});
  CHECK_THROWS_AS(Direction::make(2, 4), Error);
  CHECK_THROWS_AS(Direction::make(1, -2), Error);
  CHECK_THROWS_AS(Direction::parse("1"), Error);
}

TEST_CASE("sampled directions and mediants") {
  const std::vector<Direction> want{{1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}};
  CHECK(sample_directions(1) == want);
  CHECK(mediant(Direction{1, 0}, Direction{0, 1}) == Direction{1, 1});
  CHECK(mediant(Direction{1, 1}, Direction{1, 1}) == Direction{1, 1});
  CHECK_THROWS_AS(mediant(kMinDirection, kMaxDirection), Error);
}

TEST_CASE("degrees and leading terms of the nine-term element") {
  const WeylElement p = W(kNine);
  const Direction d{3, 2};
  CHECK(v_deg(p, d).value() == Rational(24));
  CHECK(leading(p, d) == parse_laurent("x^6*y^3 + x^4*y^6"));
  CHECK(st(p, d) == pt(6, 3));
  CHECK(en(p, d) == pt(4, 6));
  const auto dirs = directions(p);
  CHECK(std::find(dirs.begin(), dirs.end(), d) != dirs.end());
}

TEST_CASE("degree of simple elements") {
  CHECK(v_deg(W("X^2*Y^3"), Direction{1, 1}).value() == Rational(5));
  CHECK(v_deg(WeylElement(), Direction{1, 1}).is_neg_infinity());
  CHECK_THROWS_AS(v_deg(WeylElement(), Direction{1, 1}).value(), Error);
  CHECK(v_deg(W("X^(1/2)*Y"), Direction{2, -1}).value() == Rational(0));
  CHECK(leading(W("X^2*Y"), Direction{1, 0}) == parse_laurent("x^2*y"));
  CHECK(leading(W("X + Y"), Direction{1, 1}) == parse_laurent("x + y"));
}

TEST_CASE("corners") {
  const WeylElement p = W("X + Y");
  CHECK(w_corner(p) == pt(1, 0));
  CHECK(wbar_corner(p) == pt(0, 1));
  CHECK(st(p, Direction{1, 1}) == pt(1, 0));
  CHECK(en(p, Direction{1, 1}) == pt(0, 1));
  CHECK_THROWS_AS(st(p, kMinDirection), Error);
  CHECK_THROWS_AS(en(p, kMaxDirection), Error);
  CHECK(en(p, kMinDirection) == pt(1, 0));
  CHECK(st(p, kMaxDirection) == pt(0, 1));
  CHECK_THROWS_AS(w_corner(WeylElement()), Error);
}

TEST_CASE("dir_of") {
  CHECK(dir_of(pt(1, 3)) == Direction{3, -1});
  CHECK(dir_of(pt(2, -1)) == Direction{1, 2});
  CHECK(dir_of(pt(-2, 0)) == Direction{0, 1});
  CHECK(dir_of(SupportPoint{Rational(1, 2), 0}) == Direction{0, 1});
  CHECK_THROWS_AS(dir_of(pt(1, 1)), Error);
}

TEST_CASE("direction sets") {
  CHECK(directions(W("X^3*Y^2")).empty());
  CHECK(directions(W("X + Y")) == std::vector<Direction>{{1, 1}});
  CHECK(closed_directions(psi(W("X + Y"))) == std::vector<Direction>{kMinDirection, {1, 1}, kMaxDirection});
  // square with corners 1, X, Y, XY
  CHECK(directions(W("1 + X + Y + X*Y")) == std::vector<Direction>{{1, 0}, {0, 1}});
}

TEST_CASE("succ and pred") {
  const WeylElement p = W("X + Y");
  CHECK(succ(p, Direction{1, 0}) == Direction{1, 1});
  CHECK_FALSE(succ(p, Direction{1, 1}).has_value());
  CHECK(pred(p, Direction{0, 1}) == Direction{1, 1});
  CHECK_FALSE(pred(p, Direction{1, 1}).has_value());
  CHECK_FALSE(succ(W("X^2*Y"), Direction{1, 1}).has_value());
  CHECK(dir_sup(psi(p), Direction{1, 0}) == std::vector<Direction>{{1, 1}});
  CHECK(dir_inf(psi(p), Direction{0, 1}) == std::vector<Direction>{{1, 1}});
}

TEST_CASE("subrectangular elements") {
  CHECK(subrectangular_vertex(W("X^2*Y + X + Y")) == pt(2, 1));
  CHECK_FALSE(is_subrectangular(W("X + Y")));
  CHECK(subrectangular_vertex(W("X*Y")) == pt(1, 1));
  CHECK_FALSE(is_subrectangular(W("X^3")));
  CHECK_THROWS_AS(is_subrectangular(W("X^(1/2)*Y")), Error);
}

TEST_CASE("divisibility filter") {
  CHECK(divisibility_filter(4, 6));
  CHECK_FALSE(divisibility_filter(3, 6));
  CHECK_FALSE(divisibility_filter(5, 5));
  CHECK_THROWS_AS(divisibility_filter(0, 5), Error);
}

TEST_CASE("text rendering marks the corners") {
  const std::string grid = render_ascii(psi(W("X + Y")), Direction{1, 1});
  CHECK(grid.find(" 1 E.\n") != std::string::npos);
  CHECK(grid.find(" 0 .S\n") != std::string::npos);
  CHECK(render_ascii(psi(W("X*Y")), Direction{1, 1}).find("B") != std::string::npos);
}

TEST_CASE("svg rendering") {
  const std::string svg = render_svg(psi(W(kNine)), Direction{3, 2});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  CHECK(svg.find(">(3,2)</text>") != std::string::npos);
  CHECK(svg.find(">st</text>") != std::string::npos);
  CHECK(svg.find(">en</text>") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK_THROWS_AS(render_svg(LaurentElement()), Error);
}
