#include <algorithm>
#include <numeric>

#include "tally.hpp"
#include "weylshape/bracket.hpp"
#include "weylshape/props/random.hpp"

namespace weylshape::props {

namespace {

const ElementShape kSeedShape{2, 3, 4};

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

UniPoly linear(std::int64_t root) { return UniPoly({q(-root), Rational(1)}); }

// P and a partner that is often a power of P plus lower terms, so both
// proportional and non-proportional pairs show up.
std::pair<WeylElement, WeylElement> mixed_pair(Rng& rng, const Direction& d) {
  const WeylElement p = random_element(rng);
  switch (rng.below(3)) {
    case 0: {
      const WeylElement top = p.pow(static_cast<unsigned>(rng.range(1, 2))) * random_coefficient(rng);
      return {p, top + below_degree(random_element(rng), top, d)};
    }
    default:
      return {p, random_element(rng)};
  }
}

// Distinct nonzero integers in [-6, 6].
std::vector<std::int64_t> distinct_roots(Rng& rng, std::size_t n, const std::vector<std::int64_t>& avoid = {}) {
  std::vector<std::int64_t> out;
  while (out.size() < n) {
    const std::int64_t r = rng.range(-6, 6);
    if (r == 0 || std::find(out.begin(), out.end(), r) != out.end() ||
        std::find(avoid.begin(), avoid.end(), r) != avoid.end())
      continue;
    out.push_back(r);
  }
  return out;
}

}  // namespace

SuiteResult bracket_paths_agree(std::uint64_t seed, std::size_t cases) {
  Tally t("bracket: definition = closed formula");
  Rng rng(derive_seed(seed, 401));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const Direction d0 = rng.pick(positive_direction_sample());
      const auto [p, qq] = mixed_pair(rng, d0);
      for (const Direction& d : positive_direction_sample())
        t.expect(bracket_by_definition(p, qq, d) == bracket_by_formula(p, qq, d),
                 [&, &qq = qq, &p = p] { return show(p) + " , " + show(qq) + " at " + d.to_string(); });
    });
  }
  return t.done();
}

SuiteResult bracket_depends_on_leading_terms(std::uint64_t seed, std::size_t cases) {
  Tally t("bracket ignores lower terms");
  Rng rng(derive_seed(seed, 402));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const Direction d = rng.pick(positive_direction_sample());
      const auto [p, qq] = mixed_pair(rng, d);
      const WeylElement p1 = p + below_degree(random_element(rng), p, d);
      const WeylElement q1 = qq + below_degree(random_element(rng), qq, d);
      t.expect(bracket_by_definition(p1, q1, d) == bracket_by_definition(p, qq, d),
               [&] { return show(p1) + " , " + show(q1) + " at " + d.to_string(); });
    });
  }
  return t.done();
}

SuiteResult bracket_zero_aligns_corners(std::uint64_t seed, std::size_t cases) {
  Tally t("zero bracket aligns corners");
  Rng rng(derive_seed(seed, 403));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const Direction d = rng.pick(positive_direction_sample());
      const WeylElement s = random_element(rng, kSeedShape);
      const WeylElement p = s.pow(static_cast<unsigned>(rng.range(1, 2))) * random_coefficient(rng);
      const WeylElement top = s.pow(static_cast<unsigned>(rng.range(1, 3))) * random_coefficient(rng);
      const WeylElement qq =
          rng.below(4) == 0 ? random_element(rng) : top + below_degree(random_element(rng), top, d);
      if (!bracket(p, qq, d).proportional) return;
      t.expect(cross(st(p, d), st(qq, d)).is_zero() && cross(en(p, d), en(qq, d)).is_zero(),
               [&] { return show(p) + " , " + show(qq) + " at " + d.to_string(); });
    });
  }
  return t.done();
}

SuiteResult bracket_corner_arithmetic(std::uint64_t seed, std::size_t cases) {
  Tally t("corners of a nonzero bracket");
  Rng rng(derive_seed(seed, 404));
  const SupportPoint one{Rational(1), 1};
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const Direction d = rng.pick(positive_direction_sample());
      const auto [p, qq] = mixed_pair(rng, d);
      const BracketOutcome b = bracket(p, qq, d);
      if (b.proportional) return;
      auto what = [&, &p = p, &qq = qq] { return show(p) + " , " + show(qq) + " at " + d.to_string(); };
      const bool st_apart = !cross(st(p, d), st(qq, d)).is_zero();
      t.expect(st_apart == (st(p, d) + st(qq, d) - one == st(b.value, d)), what);
      const bool en_apart = !cross(en(p, d), en(qq, d)).is_zero();
      t.expect(en_apart == (en(p, d) + en(qq, d) - one == en(b.value, d)), what);
    });
  }
  return t.done();
}

SuiteResult bracket_f_multiplicative(std::uint64_t seed, std::size_t cases) {
  Tally t("f of a product");
  Rng rng(derive_seed(seed, 405));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const WeylElement p = random_element(rng);
      const WeylElement qq = random_element(rng);
      const WeylElement pq = p * qq;
      for (const Direction& d : positive_direction_sample())
        t.expect(f_poly(pq, d) == f_poly(p, d) * f_poly(qq, d),
                 [&] { return show(p) + " , " + show(qq) + " at " + d.to_string(); });
    });
  }
  return t.done();
}

SuiteResult bracket_identity_one(std::uint64_t seed, std::size_t cases) {
  Tally t("f identity for nonzero brackets");
  Rng rng(derive_seed(seed, 406));
  const UniPoly x = UniPoly::x();
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      for (;;) {
        const Direction d = rng.pick(positive_direction_sample());
        const auto [p, qq] = mixed_pair(rng, d);
        const auto outcome = check_identity_1(p, qq, d);
        if (std::holds_alternative<ProportionalCase>(outcome)) continue;
        const PEWitness& w = std::get<PEWitness>(outcome);

        // Independent recomputation of both sides.
        const UniPoly fp = f_poly(p, d);
        const UniPoly fq = f_poly(qq, d);
        const UniPoly fr = f_poly(bracket(p, qq, d).value, d);
        const Rational rho = q(d.rho);
        const Rational a = v_deg(qq, d).value() / rho;
        const Rational b = v_deg(p, d).value() / rho;
        const Rational c = cross(st(qq, d), st(p, d));
        const UniPoly rhs = UniPoly::constant(c) * fp * fq + UniPoly::constant(a) * x * fp.derivative() * fq -
                            UniPoly::constant(b) * x * fq.derivative() * fp;
        t.expect(w.c == c && fr.shift_up(w.h) == rhs,
                 [&, &p = p, &qq = qq] { return show(p) + " , " + show(qq) + " at " + d.to_string(); });
        if (!w.c_integral)
          t.flag([&, &p = p, &qq = qq] {
            return "c = " + w.c.to_string() + " for " + show(p) + " , " + show(qq) + " at " + d.to_string();
          });
        return;
      }
    });
  }
  return t.done();
}

SuiteResult bracket_common_root_roundtrip(std::uint64_t seed, std::size_t cases) {
  Tally t("common root rebuilds the leading terms");
  Rng rng(derive_seed(seed, 407));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const Direction d = rng.pick(positive_direction_sample());
      WeylElement s;
      do {
        s = random_element(rng, kSeedShape);
      } while (v_deg(s, d).value() <= Rational(0));
      std::int64_t m = 0;
      std::int64_t n = 0;
      do {
        m = rng.range(1, 3);
        n = rng.range(1, 3);
      } while (std::gcd(m, n) != 1);
      const WeylElement sp = s.pow(static_cast<unsigned>(m)) * random_coefficient(rng);
      const WeylElement sq = s.pow(static_cast<unsigned>(n)) * random_coefficient(rng);
      const WeylElement p = sp + below_degree(random_element(rng), sp, d);
      const WeylElement qq = sq + below_degree(random_element(rng), sq, d);
      const auto root = extract_common_root(p, qq, d);
      auto what = [&] { return show(p) + " , " + show(qq) + " at " + d.to_string(); };
      t.expect(root.has_value(), what);
      if (!root) return;
      t.expect(root->m == static_cast<unsigned>(m) && root->n == static_cast<unsigned>(n), what);
      t.expect(root->r.pow(root->m) * root->lambda_p == leading(p, d), what);
      t.expect(root->r.pow(root->n) * root->lambda_q == leading(qq, d), what);
    });
  }
  return t.done();
}

SuiteResult bracket_pe_families(std::uint64_t seed, std::size_t cases) {
  Tally t("constructed PE solutions");
  Rng rng(derive_seed(seed, 408));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const auto k = static_cast<unsigned>(rng.range(1, 3));
      const auto j = static_cast<unsigned>(rng.range(0, 2));
      // eps and b are positive
      const Rational eps = random_coefficient(rng).abs();
      const Rational mu = random_coefficient(rng);
      UniPoly f;
      UniPoly g;
      Rational b;
      if (rng.coin()) {
        const std::int64_t lambda = distinct_roots(rng, 1)[0];
        const auto m = static_cast<unsigned>(rng.range(1, 3));
        do {
          b = random_coefficient(rng).abs();
        } while (eps * q(k * m) == b);
        const Rational nu = (eps * q(k * m) - b).reciprocal();
        f = UniPoly::constant(mu) * linear(lambda).pow(m);
        g = UniPoly::constant(nu) * f.pow(j) * linear(lambda);
      } else {
        const auto roots = distinct_roots(rng, 2);
        unsigned m1 = 0;
        unsigned m2 = 0;
        do {
          m1 = static_cast<unsigned>(rng.range(1, 3));
          m2 = static_cast<unsigned>(rng.range(1, 3));
        } while (m1 == m2);
        b = eps * q(k * (m1 + m2)) / Rational(2);
        const Rational w1 = eps * q(k) * (q(m1) - q(m2)) / Rational(2);
        const Rational nu = (w1 * q(roots[0] - roots[1])).reciprocal();
        f = UniPoly::constant(mu) * linear(roots[0]).pow(m1) * linear(roots[1]).pow(m2);
        g = UniPoly::constant(nu) * f.pow(j) * linear(roots[0]) * linear(roots[1]);
      }
      const PECheck pe = pe_check(f, g, k, j, eps, b, Rational(0));
      auto what = [&] {
        return "f=" + f.to_string() + " g=" + g.to_string() + " k=" + std::to_string(k) + " j=" + std::to_string(j) +
               " eps=" + eps.to_string() + " b=" + b.to_string();
      };
      t.expect(pe.holds && pe.h == 1U, what);
      t.expect(multiplicity_report(f, g, j).pass, what);
    });
  }
  return t.done();
}

SuiteResult bracket_multiplicity_classification(std::uint64_t seed, std::size_t cases) {
  Tally t("multiplicity rule classification");
  Rng rng(derive_seed(seed, 409));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const auto roots = distinct_roots(rng, static_cast<std::size_t>(rng.range(1, 3)));
      const auto extra = distinct_roots(rng, static_cast<std::size_t>(rng.range(0, 2)), roots);
      const auto j = static_cast<unsigned>(rng.range(0, 2));
      UniPoly f = UniPoly::constant(random_coefficient(rng));
      UniPoly g = UniPoly::constant(random_coefficient(rng));
      for (const std::int64_t a : roots) {
        const auto m = static_cast<unsigned>(rng.range(1, 3));
        f = f * linear(a).pow(m);
        g = g * linear(a);
      }
      for (const std::int64_t e : extra) g = g * linear(e);
      g = g * f.pow(j);

      // 0 valid, 1 one root too many, 2 one root too few, 3 a repeated new root
      std::uint64_t variant = rng.below(4);
      if (variant == 3 && extra.empty()) variant = 0;
      if (variant == 1) g = g * linear(roots[0]);
      if (variant == 2) g = exact_div(g, linear(roots[0]));
      if (variant == 3) g = g * linear(extra[0]);

      const MultiplicityReport r = multiplicity_report(f, g, j);
      t.expect(r.pass == (variant == 0), [&] {
        return "variant " + std::to_string(variant) + ": f=" + f.to_string() + " g=" + g.to_string() +
               " j=" + std::to_string(j);
      });
    });
  }
  return t.done();
}

}  // namespace weylshape::props
