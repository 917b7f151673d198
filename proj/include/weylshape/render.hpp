#pragma once

#include <optional>
#include <string>

#include "weylshape/geometry.hpp"

namespace weylshape {

/// SVG 1.1 drawing of Supp(P) on a 32-px grid: support points, convex hull
/// edges labelled with their direction, and st/en markers when d is given.
std::string render_svg(const LaurentElement& p, const std::optional<Direction>& d = std::nullopt);

/// Text grid, one column per 1/l step in x. '*' marks a support point, 'S'
/// st, 'E' en, 'B' a point that is both.
std::string render_ascii(const LaurentElement& p, const std::optional<Direction>& d = std::nullopt);

}  // namespace weylshape
