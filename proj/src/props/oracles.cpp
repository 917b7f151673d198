#include "weylshape/props/oracles.hpp"

#include <algorithm>
#include <map>

#include "weylshape/error.hpp"

namespace weylshape::props {

namespace {

using Key = std::pair<std::int64_t, Rational>;

// Normal form of Y^b X^c, memoized per product.
class Rewriter {
 public:
  const TermMap& push(std::int64_t b, const Rational& c) {
    const Key key{b, c};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TermMap out;
    if (b == 0) {
      out.emplace(SupportPoint{c, 0}, Rational(1));
    } else {
      // Y^b X^c = (Y^(b-1) X^c) Y + c Y^(b-1) X^(c-1)
      for (const auto& [p, k] : push(b - 1, c)) add(out, SupportPoint{p.x, p.y + 1}, k);
      if (!c.is_zero())
        for (const auto& [p, k] : push(b - 1, c - Rational(1))) add(out, p, k * c);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  static void add(TermMap& m, const SupportPoint& p, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

 private:
  std::map<Key, TermMap> memo_;
};

}  // namespace

WeylElement rewrite_mul(const WeylElement& p, const WeylElement& q) {
  Rewriter rw;
  TermMap out;
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms())
      for (const auto& [m, k] : rw.push(a.y, b.x))
        Rewriter::add(out, SupportPoint{a.x + m.x, m.y + b.y}, ca * cb * k);
  return WeylElement(lcm64(p.level(), q.level()), std::move(out));
}

std::vector<SupportPoint> brute_leading_support(const LaurentElement& p, const Direction& d) {
  std::vector<SupportPoint> pts;
  Rational best;
  bool first = true;
  for (const auto& [pt, c] : p.terms()) {
    const Rational v = Rational(static_cast<long>(d.rho)) * pt.x + Rational(static_cast<long>(d.sigma * pt.y));
    if (first || v > best) {
      best = v;
      pts.clear();
      first = false;
    }
    if (v == best) pts.push_back(pt);
  }
  return pts;
}

std::vector<Direction> brute_directions(const LaurentElement& p) {
  std::vector<Direction> out;
  const auto supp = p.support();
  for (const auto& a : supp) {
    for (const auto& b : supp) {
      const SupportPoint diff = b - a;
      if (diff.x == Rational(static_cast<long>(diff.y))) continue;
      const Direction d = dir_of(diff);
      if (brute_leading_support(p, d).size() > 1 && std::find(out.begin(), out.end(), d) == out.end())
        out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), dir_less);
  return out;
}

bool dir_meets_interior(const WeylElement& p) {
  const Direction lo{1, 0};
  const Direction hi{0, 1};
  for (const Direction& d : brute_directions(psi(p)))
    if (dir_less(lo, d) && dir_less(d, hi)) return true;
  return false;
}

}  // namespace weylshape::props
