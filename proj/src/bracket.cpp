#include "weylshape/bracket.hpp"

#include "weylshape/error.hpp"

namespace weylshape {

namespace {

Rational r64(std::int64_t v) { return Rational(static_cast<long>(v)); }

void require_nonzero(const WeylElement& p, const WeylElement& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroElement, "bracket needs nonzero operands");
}

void require_positive_rho(const Direction& d) {
  if (d.rho <= 0 || !d.strict())
    throw Error(ErrorCode::NonPositiveRho, d.to_string() + " is not in V0 (needs rho > 0, rho + sigma > 0)");
}

Rational bound(const WeylElement& p, const WeylElement& q, const Direction& d) {
  return v_deg(p, d).value() + v_deg(q, d).value() - r64(d.rho + d.sigma);
}

BracketOutcome proportional_outcome() { return BracketOutcome{true, LaurentElement()}; }

unsigned to_unsigned(const mpz_class& z) {
  if (!z.fits_uint_p()) throw Error(ErrorCode::PreconditionViolated, "exponent out of range");
  return static_cast<unsigned>(z.get_ui());
}

}  // namespace

bool is_proportional(const WeylElement& p, const WeylElement& q, const Direction& d) {
  require_nonzero(p, q);
  const DegreeValue vc = v_deg(commutator(p, q), d);
  return vc < DegreeValue(bound(p, q, d));
}

BracketOutcome bracket_by_definition(const WeylElement& p, const WeylElement& q, const Direction& d) {
  require_nonzero(p, q);
  const WeylElement c = commutator(p, q);
  if (c.is_zero() || v_deg(c, d).value() < bound(p, q, d)) return proportional_outcome();
  return BracketOutcome{false, leading(c, d)};
}

BracketOutcome bracket_by_formula(const WeylElement& p, const WeylElement& q, const Direction& d) {
  require_nonzero(p, q);
  require_positive_rho(d);
  const LaurentElement lp = leading(p, d);
  const LaurentElement lq = leading(q, d);
  TermMap sum;
  for (const auto& [pp, lambda] : lp.terms()) {
    for (const auto& [qq, mu] : lq.terms()) {
      const Rational coeff = lambda * mu * cross(qq, pp);
      if (coeff.is_zero()) continue;
      const SupportPoint at{pp.x + qq.x - Rational(1), pp.y + qq.y - 1};
      auto [it, inserted] = sum.try_emplace(at, coeff);
      if (!inserted) it->second += coeff;
    }
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
  if (sum.empty()) return proportional_outcome();
  return BracketOutcome{false, LaurentElement(lcm64(p.level(), q.level()), std::move(sum))};
}

BracketOutcome bracket(const WeylElement& p, const WeylElement& q, const Direction& d) {
  if (d.rho > 0 && d.strict()) return bracket_by_formula(p, q, d);
  return bracket_by_definition(p, q, d);
}

UniPoly f_poly(const LaurentElement& p, const Direction& d) {
  require_positive_rho(d);
  const LaurentElement lead = leading(p, d);
  const SupportPoint start = st(lead, d);
  std::vector<Rational> coeffs;
  for (const auto& [pt, c] : lead.terms()) {
    const auto i = static_cast<std::size_t>(pt.y - start.y);
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] = c;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly f_poly(const WeylElement& p, const Direction& d) { return f_poly(psi(p), d); }

LaurentElement from_f_poly(const UniPoly& f, const SupportPoint& start, const Direction& d) {
  require_positive_rho(d);
  const Rational step = Rational(static_cast<long>(-d.sigma), static_cast<long>(d.rho));
  TermMap terms;
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    const Rational& a = f.coefficients()[i];
    if (a.is_zero()) continue;
    const auto ii = static_cast<std::int64_t>(i);
    terms.emplace(SupportPoint{start.x + step * r64(ii), start.y + ii}, a);
  }
  return LaurentElement::from_terms(std::move(terms));
}

std::variant<PEWitness, ProportionalCase> check_identity_1(const WeylElement& p, const WeylElement& q,
                                                           const Direction& d) {
  require_nonzero(p, q);
  require_positive_rho(d);
  const Rational rho = r64(d.rho);
  const Rational a = v_deg(q, d).value() / rho;
  const Rational b = v_deg(p, d).value() / rho;
  const Rational c = cross(st(q, d), st(p, d));
  const UniPoly fp = f_poly(p, d);
  const UniPoly fq = f_poly(q, d);
  const UniPoly x = UniPoly::x();
  const UniPoly rhs = c * fp * fq + a * x * fp.derivative() * fq - b * x * fq.derivative() * fp;

  const BracketOutcome br = bracket_by_definition(p, q, d);
  if (br.proportional) {
    if (!rhs.is_zero())
      throw Error(ErrorCode::IdentityViolation, "bracket vanishes but the right-hand side is " + rhs.to_string());
    return ProportionalCase{};
  }
  if (rhs.is_zero())
    throw Error(ErrorCode::IdentityViolation, "nonzero bracket but the right-hand side vanishes");
  const UniPoly fb = f_poly(br.value, d);
  const std::size_t h = rhs.x_valuation();
  if (fb.shift_up(h) != rhs)
    throw Error(ErrorCode::IdentityViolation,
                "x^" + std::to_string(h) + " * (" + fb.to_string() + ") != " + rhs.to_string());
  return PEWitness{static_cast<unsigned>(h), c, c.is_integer()};
}

std::optional<CommonRoot> common_root(const LaurentElement& lp, const LaurentElement& lq, const Direction& d) {
  require_positive_rho(d);
  if (lp.is_zero() || lq.is_zero()) throw Error(ErrorCode::ZeroElement, "common_root needs nonzero operands");
  if (leading(lp, d) != lp || leading(lq, d) != lq)
    throw Error(ErrorCode::PreconditionViolated, "operands must be " + d.to_string() + "-homogeneous");
  const Rational vp = v_deg(lp, d).value();
  const Rational vq = v_deg(lq, d).value();
  if (vp.sign() <= 0 || vq.sign() <= 0)
    throw Error(ErrorCode::PreconditionViolated, "degrees must be positive");
  const Rational ratio = vp / vq;
  const unsigned m = to_unsigned(ratio.numerator());
  const unsigned n = to_unsigned(ratio.denominator());

  const UniPoly fp = f_poly(lp, d);
  const UniPoly fq = f_poly(lq, d);
  const auto g = poly_kth_root(fp, m);
  if (!g || fq.monic() != g->pow(n)) return std::nullopt;

  const SupportPoint sp = st(lp, d);
  const SupportPoint sq = st(lq, d);
  const Rational inv_m = Rational(1) / r64(m);
  const Rational base_y = r64(sp.y) * inv_m;
  if (!base_y.is_integer()) return std::nullopt;
  const SupportPoint base{sp.x * inv_m, base_y.to_int64()};
  if (SupportPoint{base.x * r64(n), base.y * static_cast<std::int64_t>(n)} != sq) return std::nullopt;

  CommonRoot out{m, n, fp.leading_coefficient(), fq.leading_coefficient(), from_f_poly(*g, base, d)};
  if (out.r.pow(m) * out.lambda_p != lp || out.r.pow(n) * out.lambda_q != lq) return std::nullopt;
  return out;
}

std::optional<CommonRoot> extract_common_root(const WeylElement& p, const WeylElement& q, const Direction& d) {
  require_nonzero(p, q);
  if (d.rho <= 0 || !d.strict()) throw Error(ErrorCode::PreconditionViolated, d.to_string() + " is not in V0");
  if (!is_proportional(p, q, d))
    throw Error(ErrorCode::PreconditionViolated, "operands are not " + d.to_string() + "-proportional");
  if (v_deg(p, d).value().sign() <= 0 || v_deg(q, d).value().sign() <= 0)
    throw Error(ErrorCode::PreconditionViolated, "degrees must be positive");
  return common_root(leading(p, d), leading(q, d), d);
}

PECheck pe_check(const UniPoly& f, const UniPoly& g, unsigned k, unsigned j, const Rational& eps,
                 const Rational& b, const Rational& c) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pe_check needs nonzero f and g");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "pe_check needs k >= 1");
  const Rational a = Rational(static_cast<long>(j), static_cast<long>(k)) * b + eps;
  const UniPoly fk = f.pow(k);
  const UniPoly x = UniPoly::x();
  const UniPoly rhs = c * fk * g + a * x * fk.derivative() * g - b * x * g.derivative() * fk;
  if (rhs.is_zero()) return {};
  const UniPoly lhs = f.pow(k + j);
  const std::size_t vr = rhs.x_valuation();
  const std::size_t vl = lhs.x_valuation();
  if (vr < vl) return {};
  const std::size_t h = vr - vl;
  if (lhs.shift_up(h) != rhs) return {};
  return PECheck{true, static_cast<unsigned>(h)};
}

MultiplicityReport multiplicity_report(const UniPoly& f, const UniPoly& g, unsigned j) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity_report needs nonzero f and g");
  if (f.evaluate(Rational(0)).is_zero()) throw Error(ErrorCode::ZeroAtOrigin, "f(0) = 0");
  if (g.evaluate(Rational(0)).is_zero()) throw Error(ErrorCode::ZeroAtOrigin, "g(0) = 0");

  for (const auto& [s, m] : squarefree_decomposition(f).factors) {
    const unsigned want = j * m + 1;
    UniPoly rest = g;
    unsigned got = 0;
    while (got <= want && divides(s, rest)) {
      rest = exact_div(rest, s);
      ++got;
    }
    if (got != want) {
      return MultiplicityReport{false, s, m, want,
                                "layer " + s.to_string() + " of multiplicity " + std::to_string(m) + " divides g " +
                                    (got > want ? "more than " + std::to_string(want) : std::to_string(got)) +
                                    " times, expected " + std::to_string(want)};
    }
  }
  const DivMod dm = divmod(g, f.pow(j));
  if (!dm.remainder.is_zero()) return MultiplicityReport{false, std::nullopt, 0, 0, "f^j does not divide g"};
  const UniPoly gbar = dm.quotient;
  const UniPoly common = gcd(gbar, gbar.derivative());
  if (common.degree() > 0)
    return MultiplicityReport{false, common, 0, 1, "g / f^j is not separable: repeated factor " + common.to_string()};
  return MultiplicityReport{};
}

bool is_power_of_binomial(const UniPoly& f, unsigned rho) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "is_power_of_binomial of 0");
  if (rho == 0) throw Error(ErrorCode::PreconditionViolated, "rho must be positive");
  if (f.degree() == 0) return true;
  const auto q = f.deflate(rho);
  if (!q) return false;
  const auto root = poly_kth_root(*q, static_cast<unsigned>(q->degree()));
  return root && root->degree() == 1;
}

}  // namespace weylshape
