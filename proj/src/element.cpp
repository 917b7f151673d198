#include "weylshape/element.hpp"

#include <sstream>

#include "weylshape/error.hpp"

namespace weylshape {

std::string SupportPoint::to_string() const {
  return "(" + x.to_string() + "," + std::to_string(y) + ")";
}

Rational cross(const SupportPoint& a, const SupportPoint& b) {
  return a.x * Rational(static_cast<long>(b.y)) - Rational(static_cast<long>(a.y)) * b.x;
}

SupportPoint scale(const SupportPoint& p, const Rational& s) {
  const Rational y = Rational(static_cast<long>(p.y)) * s;
  if (!y.is_integer()) throw Error(ErrorCode::PreconditionViolated, "scaled y is not integral");
  return {p.x * s, y.to_int64()};
}

std::int64_t minimal_level(const TermMap& terms) {
  std::int64_t l = 1;
  for (const auto& [p, c] : terms) {
    const mpz_class den = p.x.denominator();
    if (!den.fits_slong_p()) throw Error(ErrorCode::InvalidElement, "x-exponent denominator too large");
    l = lcm64(l, den.get_si());
  }
  return l;
}

namespace {

bool denominator_divides(const Rational& x, std::int64_t level) {
  return mpz_divisible_p(mpz_class(static_cast<long>(level)).get_mpz_t(), x.denominator().get_mpz_t()) != 0;
}

}  // namespace

template <class Tag>
Element<Tag>::Element(std::int64_t level, TermMap terms) : level_(level) {
  if (level < 1) throw Error(ErrorCode::InvalidElement, "level must be positive");
  for (auto& [p, c] : terms) {
    if (c.is_zero()) continue;
    if (p.y < 0) throw Error(ErrorCode::InvalidElement, "negative Y exponent at " + p.to_string());
    if (!denominator_divides(p.x, level))
      throw Error(ErrorCode::InvalidElement,
                  "X exponent " + p.x.to_string() + " not in (1/" + std::to_string(level) + ")Z");
    terms_.emplace(p, c);
  }
}

template <class Tag>
Element<Tag> Element<Tag>::from_terms(TermMap terms) {
  const std::int64_t l = minimal_level(terms);
  return Element(l, std::move(terms));
}

template <class Tag>
Element<Tag> Element<Tag>::monomial(const Rational& c, const Rational& x, std::int64_t y) {
  return from_terms(TermMap{{SupportPoint{x, y}, c}});
}

template <class Tag>
Element<Tag> Element<Tag>::constant(const Rational& c) {
  return monomial(c, Rational(0), 0);
}

template <class Tag>
Element<Tag> Element<Tag>::x_power(const Rational& x) {
  return monomial(Rational(1), x, 0);
}

template <class Tag>
Element<Tag> Element<Tag>::y_power(std::int64_t y) {
  return monomial(Rational(1), Rational(0), y);
}

template <class Tag>
Rational Element<Tag>::coefficient(const SupportPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

template <class Tag>
std::vector<SupportPoint> Element<Tag>::support() const {
  std::vector<SupportPoint> s;
  s.reserve(terms_.size());
  for (const auto& [p, c] : terms_) s.push_back(p);
  return s;
}

template <class Tag>
Element<Tag> Element<Tag>::embed(std::int64_t h) const {
  if (h < 1 || h % level_ != 0)
    throw Error(ErrorCode::NotDivisible,
                "level " + std::to_string(level_) + " does not divide " + std::to_string(h));
  Element e = *this;
  e.level_ = h;
  return e;
}

template <class Tag>
void Element<Tag>::add_term(const SupportPoint& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Tag>
Element<Tag> Element<Tag>::operator-() const {
  Element e = *this;
  for (auto& [p, c] : e.terms_) c = -c;
  return e;
}

template <class Tag>
Element<Tag>& Element<Tag>::operator+=(const Element& o) {
  level_ = lcm64(level_, o.level_);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

template <class Tag>
Element<Tag>& Element<Tag>::operator-=(const Element& o) {
  level_ = lcm64(level_, o.level_);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

template <class Tag>
Element<Tag>& Element<Tag>::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

template <class Tag>
Element<Tag> Element<Tag>::pow(unsigned k) const {
  Element result = constant(Rational(1)).embed(level_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

template <>
Element<LaurentTag> Element<LaurentTag>::multiply(const Element& a, const Element& b) {
  Element out;
  out.level_ = lcm64(a.level_, b.level_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) out.add_term(p + q, c * d);
  return out;
}

// (X^a Y^b)(X^c Y^d) = sum_k k! C(b,k) C(c,k) X^(a+c-k) Y^(b+d-k)
template <>
Element<WeylTag> Element<WeylTag>::multiply(const Element& a, const Element& b) {
  Element out;
  out.level_ = lcm64(a.level_, b.level_);
  for (const auto& [p, c] : a.terms_) {
    for (const auto& [q, d] : b.terms_) {
      const Rational cd = c * d;
      Rational kfact(1);
      for (std::int64_t k = 0; k <= p.y; ++k) {
        if (k > 0) kfact *= Rational(static_cast<long>(k));
        const Rational bq = generalized_binomial(q.x, static_cast<unsigned>(k));
        if (bq.is_zero()) break;  // q.x is a nonnegative integer below k; all later terms vanish too
        const Rational coeff =
            cd * kfact * generalized_binomial(Rational(static_cast<long>(p.y)), static_cast<unsigned>(k)) * bq;
        out.add_term(SupportPoint{p.x + q.x - Rational(static_cast<long>(k)), p.y + q.y - k}, coeff);
      }
    }
  }
  return out;
}

template class Element<WeylTag>;
template class Element<LaurentTag>;

WeylElement commutator(const WeylElement& p, const WeylElement& q) { return p * q - q * p; }

LaurentElement psi(const WeylElement& p) { return LaurentElement(p.level(), p.terms()); }

WeylElement psi_inverse(const LaurentElement& p) { return WeylElement(p.level(), p.terms()); }

}  // namespace weylshape
