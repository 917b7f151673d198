#include "weylshape/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "weylshape/error.hpp"

namespace weylshape {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::x() { return monomial(Rational(1), 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& UniPoly::leading_coefficient() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

std::size_t UniPoly::x_valuation() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "x-valuation of 0");
  std::size_t h = 0;
  while (coeffs_[h].is_zero()) ++h;
  return h;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of 0");
  return *this * leading_coefficient().reciprocal();
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = constant(Rational(1));
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::shift_up(std::size_t h) const {
  if (is_zero()) return {};
  std::vector<Rational> v(h);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::optional<UniPoly> UniPoly::deflate(unsigned r) const {
  if (r == 0) throw Error(ErrorCode::PreconditionViolated, "deflate by 0");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i % r == 0) {
      v.push_back(coeffs_[i]);
    } else if (!coeffs_[i].is_zero()) {
      return std::nullopt;
    }
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::inflate(unsigned r) const {
  if (is_zero()) return {};
  std::vector<Rational> v((coeffs_.size() - 1) * r + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * r] = coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by 0");
  std::vector<Rational> rem = p.coefficients();
  const int dq = q.degree();
  const Rational& lq = q.leading_coefficient();
  if (p.degree() < dq) return {UniPoly{}, p};
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dq + 1));
  for (int k = p.degree(); k >= dq; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rational f = top / lq;
    quo[static_cast<std::size_t>(k - dq)] = f;
    for (int i = 0; i <= dq; ++i)
      rem[static_cast<std::size_t>(k - dq + i)] -= f * q.coefficients()[static_cast<std::size_t>(i)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& p, const UniPoly& q) {
  auto [quo, rem] = divmod(p, q);
  if (!rem.is_zero())
    throw Error(ErrorCode::NonDivisible, q.to_string() + " does not divide " + p.to_string());
  return quo;
}

bool divides(const UniPoly& d, const UniPoly& p) { return divmod(p, d).remainder.is_zero(); }

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::UndefinedGcd, "gcd(0, 0)");
  UniPoly a = p;
  UniPoly b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? UniPoly{} : r.monic();
  }
  return a.monic();
}

UniPoly SquarefreeDecomposition::reassemble() const {
  UniPoly acc = UniPoly::constant(unit);
  for (const auto& [s, m] : factors) acc = acc * s.pow(m);
  return acc;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of 0");
  SquarefreeDecomposition out{p.leading_coefficient(), {}};
  if (p.degree() == 0) return out;

  const UniPoly f = p.monic();
  const UniPoly df = f.derivative();
  const UniPoly a0 = gcd(f, df);
  UniPoly b = exact_div(f, a0);
  UniPoly c = exact_div(df, a0);
  UniPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

std::optional<UniPoly> poly_kth_root(const UniPoly& p, unsigned k) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "k-th root of 0");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k-th root with k = 0");
  const int n = p.degree();
  if (n % static_cast<int>(k) != 0) return std::nullopt;
  const UniPoly target = p.monic();
  const int m = n / static_cast<int>(k);

  // Coefficients of g are fixed one at a time from the top: the x^(n-t)
  // coefficient of g^k is k*g[m-t] plus terms in already-known g[m-1..m-t+1].
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1);
  g[static_cast<std::size_t>(m)] = Rational(1);
  const Rational kq(static_cast<long>(k));
  for (int t = 1; t <= m; ++t) {
    const UniPoly partial = UniPoly(g).pow(k);
    const Rational have = partial.coefficient(static_cast<std::size_t>(n - t));
    g[static_cast<std::size_t>(m - t)] = (target.coefficient(static_cast<std::size_t>(n - t)) - have) / kq;
  }
  UniPoly root(std::move(g));
  if (root.pow(k) != target) return std::nullopt;
  return root;
}

}  // namespace weylshape
