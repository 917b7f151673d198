#include <algorithm>
#include <numeric>

#include "tally.hpp"
#include "weylshape/shape_checker.hpp"

namespace weylshape::props {

namespace {

constexpr std::int64_t kSearch = 30;

std::string show(const CornerCandidate& c) {
  return "(" + std::to_string(c.u) + "," + std::to_string(c.v) + ") F=(" + std::to_string(c.f1) + "," +
         std::to_string(c.f2) + ")";
}

}  // namespace

// The checker suites are deterministic; `seed` and `cases` do not apply.
SuiteResult checker_candidate_invariants(std::uint64_t, std::size_t) {
  Tally t("candidate invariants");
  for (const CornerCandidate& c : enumerate_candidates(kSearch)) {
    t.run([&] {
      const Direction& d = c.dir;
      t.expect(d.sigma < 0 && d.strict() && std::gcd(d.rho, d.sigma) == 1, [&] { return show(c); });
      t.expect(dir_of(SupportPoint{Rational(static_cast<long>(c.f1 - 1)), c.f2 - 1}) == d, [&] { return show(c); });
      t.expect(c.d == std::gcd(c.f1 - 1, c.f2 - 1), [&] { return show(c); });
      for (const auto& [r, s] : c.c1)
        t.expect(d.rho * c.u + d.sigma * c.v == d.rho * r + d.sigma * s && 0 <= s && s < r && r < c.u,
                 [&] { return show(c) + " C1=(" + std::to_string(r) + "," + std::to_string(s) + ")"; });
    });
  }
  return t.done();
}

SuiteResult checker_monotone(std::uint64_t, std::size_t) {
  Tally t("candidate sets grow with the bound");
  const std::vector<std::int64_t> bounds{15, 20, kSearch};
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    t.run([&] {
      const auto small = enumerate_candidates(bounds[k]);
      const auto large = enumerate_candidates(bounds[k + 1]);
      for (const CornerCandidate& c : small)
        t.expect(std::find(large.begin(), large.end(), c) != large.end(),
                 [&] { return show(c) + " missing at " + std::to_string(bounds[k + 1]); });
    });
  }
  return t.done();
}

SuiteResult checker_parallel_matches_serial(std::uint64_t, std::size_t) {
  Tally t("parallel run = serial run");
  t.run([&] {
    const std::string serial = emit_table(check_bound(kSearch, 1).reports, "json");
    for (unsigned jobs : {2U, 4U})
      t.expect(emit_table(check_bound(kSearch, jobs).reports, "json") == serial,
               [&] { return "jobs=" + std::to_string(jobs); });
  });
  return t.done();
}

}  // namespace weylshape::props
