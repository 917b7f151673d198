#include "weylshape/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylshape/error.hpp"

namespace weylshape {

namespace {

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidDirection, "direction component out of range");
  return z.get_si();
}

Rational r64(std::int64_t v) { return Rational(static_cast<long>(v)); }

void require_nonzero(const TermMap& terms) {
  if (terms.empty()) throw Error(ErrorCode::ZeroElement, "operation undefined on 0");
}

TermMap leading_terms(const TermMap& terms, const Direction& d) {
  require_nonzero(terms);
  std::optional<Rational> best;
  for (const auto& [p, c] : terms) {
    Rational v = d.value(p);
    if (!best || v > *best) best = std::move(v);
  }
  TermMap out;
  for (const auto& [p, c] : terms)
    if (d.value(p) == *best) out.emplace(p, c);
  return out;
}

// Leading point for (1,-1) with largest x; terms iterate in descending x.
SupportPoint w_of(const TermMap& terms) { return leading_terms(terms, kMinDirection).begin()->first; }

SupportPoint wbar_of(const TermMap& terms) { return leading_terms(terms, kMaxDirection).begin()->first; }

// Andrew's monotone chain; counterclockwise, collinear points dropped.
std::vector<SupportPoint> hull(std::vector<SupportPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return pts;
  auto turn = [](const SupportPoint& o, const SupportPoint& a, const SupportPoint& b) {
    return cross(a - o, b - o);
  };
  std::vector<SupportPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Primitive integer vector along (a, b) with a rational and b integral.
Direction primitive(const Rational& a, const Rational& b) {
  const mpz_class den = lcm(a.denominator(), b.denominator());
  mpz_class x = a.numerator() * (den / a.denominator());
  mpz_class y = b.numerator() * (den / b.denominator());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Direction{to_i64(x / g), to_i64(y / g)};
}

std::vector<Direction> hull_directions(const TermMap& terms) {
  require_nonzero(terms);
  std::vector<SupportPoint> pts;
  for (const auto& [p, c] : terms) pts.push_back(p);
  const auto h = hull(std::move(pts));
  std::vector<Direction> out;
  if (h.size() < 2) return out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const SupportPoint e = h[(i + 1) % h.size()] - h[i];
    const Direction n = primitive(r64(e.y), -e.x);
    if (n.strict()) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), dir_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Direction> min_of(const std::vector<Direction>& ds) {
  if (ds.empty()) return std::nullopt;
  return ds.front();
}

std::optional<Direction> max_of(const std::vector<Direction>& ds) {
  if (ds.empty()) return std::nullopt;
  return ds.back();
}

void require_strict(const Direction& d) {
  if (!d.strict()) throw Error(ErrorCode::InvalidDirection, d.to_string() + " is not in V");
}

}  // namespace

Direction Direction::make(std::int64_t rho, std::int64_t sigma) {
  if (std::gcd(rho, sigma) != 1)
    throw Error(ErrorCode::InvalidDirection, "(" + std::to_string(rho) + "," + std::to_string(sigma) + ") is not coprime");
  if (rho + sigma < 0)
    throw Error(ErrorCode::InvalidDirection,
                "(" + std::to_string(rho) + "," + std::to_string(sigma) + ") has rho + sigma < 0");
  return Direction{rho, sigma};
}

Direction Direction::parse(const std::string& text) {
  std::istringstream is(text);
  long long rho = 0;
  long long sigma = 0;
  char comma = 0;
  if (!(is >> rho >> comma >> sigma) || comma != ',')
    throw Error(ErrorCode::InvalidDirection, "expected \"rho,sigma\", got \"" + text + "\"");
  is >> std::ws;
  if (!is.eof()) throw Error(ErrorCode::InvalidDirection, "trailing characters in \"" + text + "\"");
  return make(rho, sigma);
}

Rational Direction::value(const SupportPoint& p) const { return r64(rho) * p.x + r64(sigma * p.y); }

std::string Direction::to_string() const {
  return "(" + std::to_string(rho) + "," + std::to_string(sigma) + ")";
}

std::int64_t cross(const Direction& a, const Direction& b) { return a.rho * b.sigma - a.sigma * b.rho; }

bool dir_less(const Direction& a, const Direction& b) {
  if (a == b) return false;
  if (a == kMinDirection || b == kMaxDirection) return true;
  if (b == kMinDirection || a == kMaxDirection) return false;
  return cross(a, b) > 0;
}

std::strong_ordering operator<=>(const Direction& a, const Direction& b) {
  if (a == b) return std::strong_ordering::equal;
  return dir_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

const Rational& DegreeValue::value() const {
  if (!v_) throw Error(ErrorCode::ZeroElement, "degree of 0 is -infinity");
  return *v_;
}

std::string DegreeValue::to_string() const { return v_ ? v_->to_string() : "-inf"; }

std::strong_ordering operator<=>(const DegreeValue& a, const DegreeValue& b) {
  if (!a.v_ || !b.v_) return static_cast<bool>(a.v_) <=> static_cast<bool>(b.v_);
  return *a.v_ <=> *b.v_;
}

DegreeValue operator+(const DegreeValue& a, const DegreeValue& b) {
  if (!a.v_ || !b.v_) return DegreeValue();
  return DegreeValue(*a.v_ + *b.v_);
}

DegreeValue operator-(const DegreeValue& a, const Rational& b) {
  if (!a.v_) return DegreeValue();
  return DegreeValue(*a.v_ - b);
}

DegreeValue v_deg(const LaurentElement& p, const Direction& d) {
  if (p.is_zero()) return DegreeValue::neg_infinity();
  std::optional<Rational> best;
  for (const auto& [pt, c] : p.terms()) {
    Rational v = d.value(pt);
    if (!best || v > *best) best = std::move(v);
  }
  return DegreeValue(*best);
}

DegreeValue v_deg(const WeylElement& p, const Direction& d) { return v_deg(psi(p), d); }

LaurentElement leading(const LaurentElement& p, const Direction& d) {
  return LaurentElement(p.level(), leading_terms(p.terms(), d));
}

LaurentElement leading(const WeylElement& p, const Direction& d) { return leading(psi(p), d); }

SupportPoint w_corner(const LaurentElement& p) { return w_of(p.terms()); }
SupportPoint w_corner(const WeylElement& p) { return w_of(p.terms()); }
SupportPoint wbar_corner(const LaurentElement& p) { return wbar_of(p.terms()); }
SupportPoint wbar_corner(const WeylElement& p) { return wbar_of(p.terms()); }

SupportPoint st(const LaurentElement& p, const Direction& d) {
  if (d == kMinDirection) throw Error(ErrorCode::ForbiddenDirection, "st is undefined for (1,-1)");
  return w_of(leading_terms(p.terms(), d));
}

SupportPoint st(const WeylElement& p, const Direction& d) { return st(psi(p), d); }

SupportPoint en(const LaurentElement& p, const Direction& d) {
  if (d == kMaxDirection) throw Error(ErrorCode::ForbiddenDirection, "en is undefined for (-1,1)");
  return wbar_of(leading_terms(p.terms(), d));
}

SupportPoint en(const WeylElement& p, const Direction& d) { return en(psi(p), d); }

Direction dir_of(const SupportPoint& p) {
  const Rational y = r64(p.y);
  const Rational diff = p.x - y;
  if (diff.is_zero()) throw Error(ErrorCode::DiagonalPoint, p.to_string() + " lies on Z(1,1)");
  // (rho, sigma) proportional to (-y, x), oriented so that rho + sigma > 0
  return diff.sign() > 0 ? primitive(-y, p.x) : primitive(y, -p.x);
}

std::vector<Direction> directions(const LaurentElement& p) { return hull_directions(p.terms()); }
std::vector<Direction> directions(const WeylElement& p) { return hull_directions(p.terms()); }

std::vector<Direction> closed_directions(const LaurentElement& p) {
  std::vector<Direction> out{kMinDirection};
  const auto ds = directions(p);
  out.insert(out.end(), ds.begin(), ds.end());
  out.push_back(kMaxDirection);
  return out;
}

std::vector<Direction> dir_sup(const LaurentElement& p, const Direction& d) {
  const SupportPoint e = en(p, d);
  const Rational ve = kMaxDirection.value(e);
  std::vector<Direction> out;
  for (const auto& [q, c] : p.terms())
    if (kMaxDirection.value(q) > ve) out.push_back(dir_of(q - e));
  std::sort(out.begin(), out.end(), dir_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Direction> dir_inf(const LaurentElement& p, const Direction& d) {
  const SupportPoint s = st(p, d);
  const Rational vs = kMinDirection.value(s);
  std::vector<Direction> out;
  for (const auto& [q, c] : p.terms())
    if (kMinDirection.value(q) > vs) out.push_back(dir_of(q - s));
  std::sort(out.begin(), out.end(), dir_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Direction> succ(const LaurentElement& p, const Direction& d) {
  require_strict(d);
  return min_of(dir_sup(p, d));
}

std::optional<Direction> succ(const WeylElement& p, const Direction& d) { return succ(psi(p), d); }

std::optional<Direction> pred(const LaurentElement& p, const Direction& d) {
  require_strict(d);
  return max_of(dir_inf(p, d));
}

std::optional<Direction> pred(const WeylElement& p, const Direction& d) { return pred(psi(p), d); }

std::optional<SupportPoint> subrectangular_vertex(const WeylElement& p) {
  require_nonzero(p.terms());
  if (p.level() != 1) throw Error(ErrorCode::PreconditionViolated, "subrectangularity needs a level-1 element");
  Rational a(0);
  std::int64_t b = 0;
  for (const auto& [q, c] : p.terms()) {
    if (q.x.sign() < 0) return std::nullopt;
    a = std::max(a, q.x);
    b = std::max(b, q.y);
  }
  if (a < Rational(1) || b < 1) return std::nullopt;
  const SupportPoint vertex{a, b};
  if (p.coefficient(vertex).is_zero()) return std::nullopt;
  return vertex;
}

bool is_subrectangular(const WeylElement& p) { return subrectangular_vertex(p).has_value(); }

std::vector<Direction> sample_directions(std::int64_t bound) {
  std::vector<Direction> out;
  for (std::int64_t rho = -bound; rho <= bound; ++rho)
    for (std::int64_t sigma = -bound; sigma <= bound; ++sigma)
      if (rho + sigma >= 0 && std::gcd(rho, sigma) == 1) out.push_back(Direction{rho, sigma});
  std::sort(out.begin(), out.end(), dir_less);
  return out;
}

Direction mediant(const Direction& a, const Direction& b) {
  const std::int64_t rho = a.rho + b.rho;
  const std::int64_t sigma = a.sigma + b.sigma;
  const std::int64_t g = std::gcd(rho, sigma);
  if (g == 0) throw Error(ErrorCode::InvalidDirection, "mediant of opposite directions");
  return Direction{rho / g, sigma / g};
}

bool divisibility_filter(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::PreconditionViolated, "divisibility_filter needs positive integers");
  return q % p != 0 && p % q != 0;
}

}  // namespace weylshape
