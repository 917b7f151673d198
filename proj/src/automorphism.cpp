#include "weylshape/automorphism.hpp"

#include <functional>
#include <map>

#include "weylshape/error.hpp"
#include "weylshape/parse.hpp"

namespace weylshape {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational signed_lambda(const Rational& lambda, int sign) { return sign < 0 ? -lambda : lambda; }

unsigned natural_exponent(const Rational& x) {
  if (!x.is_integer() || x.sign() < 0)
    throw Error(ErrorCode::PreconditionViolated, "X exponent " + x.to_string() + " must be a nonnegative integer");
  return static_cast<unsigned>(x.to_int64());
}

// Powers of a fixed element, built by repeated multiplication on demand.
template <class Tag>
class PowerCache {
 public:
  explicit PowerCache(Element<Tag> base) : powers_{Element<Tag>::constant(Rational(1)), std::move(base)} {}

  const Element<Tag>& operator()(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
  }

 private:
  std::vector<Element<Tag>> powers_;
};

// Sum of c * phi(X^x) * phi(Y)^y over the terms of p.
template <class Tag>
Element<Tag> substitute(const Element<Tag>& p, const std::function<Element<Tag>(const Rational&)>& x_image,
                        const Element<Tag>& y_image) {
  PowerCache<Tag> ys(y_image);
  Element<Tag> out;
  for (const auto& [pt, c] : p.terms()) out += x_image(pt.x) * ys(static_cast<std::size_t>(pt.y)) * c;
  return out;
}

template <class Tag>
Element<Tag> apply_generic(const Automorphism& a, const Element<Tag>& p) {
  using E = Element<Tag>;
  return std::visit(
      overloaded{
          [&](const ShiftY& s) {
            if (s.exponent <= Rational(-1))
              throw Error(ErrorCode::PreconditionViolated, "ShiftY exponent must exceed -1");
            const std::int64_t level = lcm64(p.level(), s.exponent.denominator().get_si());
            const E y = E::y_power(1) + E::x_power(s.exponent) * s.lambda;
            return substitute<Tag>(p.embed(level), [](const Rational& x) { return E::x_power(x); }, y).embed(level);
          },
          [&](const ShiftYPoly& s) {
            const E y = E::y_power(1) + E::x_power(Rational(static_cast<long>(s.n))) * signed_lambda(s.lambda, s.sign);
            return substitute<Tag>(p, [](const Rational& x) { return E::x_power(x); }, y);
          },
          [&](const ShiftXPoly& s) {
            PowerCache<Tag> xs(E::x_power(Rational(1)) +
                               E::y_power(static_cast<std::int64_t>(s.n)) * signed_lambda(s.lambda, s.sign));
            return substitute<Tag>(p, [&](const Rational& x) { return xs(natural_exponent(x)); }, E::y_power(1));
          },
          [&](const Rotation& r) {
            E out = p;
            for (unsigned t = 0; t < r.turns % 4; ++t)
              out = substitute<Tag>(out, [](const Rational& x) { return E::y_power(natural_exponent(x)); },
                                    -E::x_power(Rational(1)));
            return out;
          },
      },
      a);
}

}  // namespace

WeylElement apply(const Automorphism& a, const WeylElement& p) { return apply_generic(a, p); }

LaurentElement apply_L(const Automorphism& a, const LaurentElement& p) { return apply_generic(a, p); }

Automorphism inverse(const Automorphism& a) {
  return std::visit(overloaded{
                        [](const ShiftY& s) -> Automorphism { return ShiftY{-s.lambda, s.exponent}; },
                        [](const ShiftYPoly& s) -> Automorphism { return ShiftYPoly{s.lambda, s.n, -s.sign}; },
                        [](const ShiftXPoly& s) -> Automorphism { return ShiftXPoly{s.lambda, s.n, -s.sign}; },
                        [](const Rotation& r) -> Automorphism { return Rotation{(4 - r.turns % 4) % 4}; },
                    },
                    a);
}

std::string to_string(const Automorphism& a) {
  auto sign_char = [](int sign) { return sign < 0 ? std::string(" - ") : std::string(" + "); };
  return std::visit(
      overloaded{
          [](const ShiftY& s) {
            return "Y -> Y + " + s.lambda.to_string() + "*" + format(WeylElement::x_power(s.exponent));
          },
          [&](const ShiftYPoly& s) {
            return "Y -> Y" + sign_char(s.sign) + s.lambda.to_string() + "*X^" + std::to_string(s.n);
          },
          [&](const ShiftXPoly& s) {
            return "X -> X" + sign_char(s.sign) + s.lambda.to_string() + "*Y^" + std::to_string(s.n);
          },
          [](const Rotation& r) { return "rotation^" + std::to_string(r.turns % 4) + " (X -> Y, Y -> -X)"; },
      },
      a);
}

Direction own_direction(const Automorphism& a) {
  return std::visit(
      overloaded{
          [](const ShiftY& s) {
            return Direction::make(s.exponent.denominator().get_si(), s.exponent.numerator().get_si());
          },
          [](const ShiftYPoly& s) { return Direction{1, static_cast<std::int64_t>(s.n)}; },
          [](const ShiftXPoly& s) { return Direction{static_cast<std::int64_t>(s.n), 1}; },
          [](const Rotation&) -> Direction {
            throw Error(ErrorCode::DirectionMismatch, "a rotation preserves no single direction");
          },
      },
      a);
}

bool verify_leading_transport(const Automorphism& a, const WeylElement& p, const Direction& d) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "transport of 0");
  const Direction own = own_direction(a);
  if (own != d)
    throw Error(ErrorCode::DirectionMismatch, to_string(a) + " belongs to " + own.to_string() + ", not " + d.to_string());

  const WeylElement image = weylshape::apply(a, p);
  if (v_deg(image, d) != v_deg(p, d)) return false;
  if (leading(image, d) != apply_L(a, leading(p, d))) return false;

  // Shifts of Y leave everything above d alone; shifts of X everything below.
  const bool above = !std::holds_alternative<ShiftXPoly>(a);
  const Direction far = above ? kMaxDirection : kMinDirection;
  std::vector<Direction> probes;
  for (const Direction& d1 : sample_directions(5)) {
    if (!d1.strict()) continue;
    if (above ? dir_less(d, d1) : dir_less(d1, d)) probes.push_back(d1);
  }
  const Direction m1 = mediant(d, far);
  probes.push_back(m1);
  probes.push_back(mediant(d, m1));
  for (const Direction& d1 : probes)
    if (leading(image, d1) != leading(p, d1)) return false;
  return true;
}

}  // namespace weylshape
