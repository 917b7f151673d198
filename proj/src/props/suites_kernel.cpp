#include "tally.hpp"
#include "weylshape/props/random.hpp"
#include "weylshape/unipoly.hpp"

namespace weylshape::props {

SuiteResult kernel_squarefree_reassembles(std::uint64_t seed, std::size_t cases) {
  Tally t("squarefree decomposition reassembles p*q");
  Rng rng(derive_seed(seed, 101));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const UniPoly p = random_poly(rng, 4);
      const UniPoly q = random_poly(rng, 4) * random_poly(rng, 2);
      const UniPoly pq = p * q;
      const auto sf = squarefree_decomposition(pq);
      t.expect(sf.reassemble() == pq, [&] { return "reassembly differs for " + pq.to_string(); });
      for (const auto& [s, m] : sf.factors)
        t.expect(is_squarefree(s) && s.leading_coefficient() == Rational(1),
                 [&] { return "factor " + s.to_string() + " is not monic squarefree"; });
    });
  }
  return t.done();
}

SuiteResult kernel_kth_root_roundtrip(std::uint64_t seed, std::size_t cases) {
  Tally t("poly_kth_root(g^k, k) = g");
  Rng rng(derive_seed(seed, 102));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      UniPoly g = random_poly(rng, 3);
      g = g.monic();
      const auto k = static_cast<unsigned>(rng.range(1, 4));
      const Rational scale = random_coefficient(rng);
      const auto root = poly_kth_root(g.pow(k) * scale, k);
      t.expect(root && *root == g, [&] {
        return "root of (" + g.to_string() + ")^" + std::to_string(k) + " gave " +
               (root ? root->to_string() : std::string("Fail"));
      });
    });
  }
  return t.done();
}

SuiteResult kernel_gcd_divides(std::uint64_t seed, std::size_t cases) {
  Tally t("gcd divides both operands");
  Rng rng(derive_seed(seed, 103));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const UniPoly common = random_poly(rng, 2);
      const UniPoly p = common * random_poly(rng, 3);
      const UniPoly q = common * random_poly(rng, 3);
      const UniPoly g = gcd(p, q);
      t.expect(divmod(p, g).remainder.is_zero() && divmod(q, g).remainder.is_zero(),
               [&] { return "gcd " + g.to_string() + " of " + p.to_string() + ", " + q.to_string(); });
      t.expect(divides(common.monic(), g), [&] { return "gcd misses common factor " + common.to_string(); });
    });
  }
  return t.done();
}

SuiteResult kernel_binomial_matches_integer(std::uint64_t seed, std::size_t cases) {
  Tally t("generalized binomial agrees with Pascal's triangle");
  Rng rng(derive_seed(seed, 104));
  for (std::size_t i = 0; i < cases; ++i) {
    t.run([&] {
      const auto n = rng.range(0, 20);
      const auto k = static_cast<unsigned>(rng.range(0, 22));
      // Pascal row n
      std::vector<mpz_class> row{1};
      for (std::int64_t r = 0; r < n; ++r) {
        std::vector<mpz_class> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < row.size(); ++j) {
          next[j] += row[j];
          next[j + 1] += row[j];
        }
        row = std::move(next);
      }
      const Rational expected = k < row.size() ? Rational(row[k]) : Rational(0);
      const Rational got = generalized_binomial(Rational(static_cast<long>(n)), k);
      t.expect(got == expected, [&] {
        return "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + got.to_string() + ", expected " +
               expected.to_string();
      });
    });
  }
  return t.done();
}

}  // namespace weylshape::props
