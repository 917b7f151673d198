#include "weylshape/render.hpp"

#include <algorithm>
#include <sstream>

#include "weylshape/error.hpp"

namespace weylshape {

namespace {

constexpr int kCell = 32;
constexpr int kMargin = 48;

struct Frame {
  Rational min_x;
  Rational max_x;
  std::int64_t max_y = 0;
};

Frame frame_of(const LaurentElement& p) {
  Frame f{Rational(0), Rational(0), 0};
  for (const auto& [pt, c] : p.terms()) {
    f.min_x = std::min(f.min_x, pt.x);
    f.max_x = std::max(f.max_x, pt.x);
    f.max_y = std::max(f.max_y, pt.y);
  }
  return f;
}

// Pixel coordinates are x * 32 rounded down; exact values keep text stable.
std::string px(const Rational& v) {
  const Rational scaled = v * Rational(kCell);
  return mpz_class(scaled.floor()).get_str();
}

struct Corners {
  std::optional<SupportPoint> st;
  std::optional<SupportPoint> en;
};

Corners corners_of(const LaurentElement& p, const std::optional<Direction>& d) {
  Corners c;
  if (!d) return c;
  if (*d != kMinDirection) c.st = st(p, *d);
  if (*d != kMaxDirection) c.en = en(p, *d);
  return c;
}

}  // namespace

std::string render_svg(const LaurentElement& p, const std::optional<Direction>& d) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "nothing to draw for 0");
  const Frame f = frame_of(p);
  const Rational width_units = f.max_x - f.min_x;
  const int width = std::stoi(px(width_units)) + 2 * kMargin;
  const int height = static_cast<int>(f.max_y) * kCell + 2 * kMargin;
  auto sx = [&](const Rational& x) { return std::to_string(kMargin + std::stoi(px(x - f.min_x))); };
  auto sy = [&](std::int64_t y) { return std::to_string(height - kMargin - static_cast<int>(y) * kCell); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int x = kMargin; x <= width - kMargin; x += kCell)
    os << "    <line x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x << "\" y2=\"" << height - kMargin
       << "\"/>\n";
  for (int y = kMargin; y <= height - kMargin; y += kCell)
    os << "    <line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << width - kMargin << "\" y2=\"" << y
       << "\"/>\n";
  os << "  </g>\n";

  os << "  <g stroke=\"black\" stroke-width=\"1.5\">\n";
  os << "    <line x1=\"" << sx(Rational(0)) << "\" y1=\"" << sy(0) << "\" x2=\"" << width - kMargin / 2 << "\" y2=\""
     << sy(0) << "\"/>\n";
  os << "    <line x1=\"" << sx(Rational(0)) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(Rational(0)) << "\" y2=\""
     << kMargin / 2 << "\"/>\n";
  os << "  </g>\n";

  os << "  <g stroke=\"#1f4e9c\" stroke-width=\"2\" font-family=\"monospace\" font-size=\"11\">\n";
  for (const Direction& dir : directions(p)) {
    const SupportPoint a = st(p, dir);
    const SupportPoint b = en(p, dir);
    os << "    <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
       << "\"/>\n";
    const Rational mx = (a.x + b.x) / Rational(2);
    const Rational my = Rational(static_cast<long>(a.y + b.y)) / Rational(2);
    const int ty = height - kMargin - std::stoi(px(my));
    os << "    <text x=\"" << std::stoi(sx(mx)) + 4 << "\" y=\"" << ty - 4 << "\" stroke=\"none\" fill=\"#1f4e9c\">"
       << dir.to_string() << "</text>\n";
  }
  os << "  </g>\n";

  const Corners c = corners_of(p, d);
  os << "  <g font-family=\"monospace\" font-size=\"12\">\n";
  for (const auto& [pt, coeff] : p.terms()) {
    const bool is_st = c.st && *c.st == pt;
    const bool is_en = c.en && *c.en == pt;
    const char* fill = is_st || is_en ? "#c0392b" : "#555555";
    os << "    <circle cx=\"" << sx(pt.x) << "\" cy=\"" << sy(pt.y) << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
    std::string label;
    if (is_st) label += "st";
    if (is_st && is_en) label += "=";
    if (is_en) label += "en";
    if (!label.empty())
      os << "    <text x=\"" << std::stoi(sx(pt.x)) + 6 << "\" y=\"" << std::stoi(sy(pt.y)) + 14 << "\" fill=\"#c0392b\">"
         << label << "</text>\n";
  }
  os << "  </g>\n";
  if (d) {
    os << "  <text x=\"" << kMargin << "\" y=\"" << kMargin / 2 << "\" font-family=\"monospace\" font-size=\"12\">"
       << "direction " << d->to_string() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const LaurentElement& p, const std::optional<Direction>& d) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "nothing to draw for 0");
  const Frame f = frame_of(p);
  const Rational l(static_cast<long>(p.level()));
  const std::int64_t x0 = (f.min_x * l).to_int64();
  const std::int64_t x1 = (f.max_x * l).to_int64();
  const Corners c = corners_of(p, d);

  std::ostringstream os;
  for (std::int64_t y = f.max_y; y >= 0; --y) {
    os << (y < 10 ? " " : "") << y << " ";
    for (std::int64_t xi = x0; xi <= x1; ++xi) {
      const SupportPoint pt{Rational(static_cast<long>(xi), static_cast<long>(p.level())), y};
      char ch = '.';
      if (!p.coefficient(pt).is_zero()) {
        const bool is_st = c.st && *c.st == pt;
        const bool is_en = c.en && *c.en == pt;
        ch = is_st && is_en ? 'B' : is_st ? 'S' : is_en ? 'E' : '*';
      }
      os << ch;
    }
    os << "\n";
  }
  os << "   x from " << f.min_x << " in steps of 1/" << p.level() << "\n";
  return os.str();
}

}  // namespace weylshape
