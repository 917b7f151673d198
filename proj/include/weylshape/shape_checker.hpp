#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylshape/geometry.hpp"

namespace weylshape {

struct CornerCandidate {
  std::int64_t u = 0;  ///< C0 = (u, v)
  std::int64_t v = 0;
  std::int64_t f1 = 0;  ///< (f1, f2) = mu (u, v), 0 < mu < 1
  std::int64_t f2 = 0;
  Direction dir;  ///< dir(f1 - 1, f2 - 1)
  /// Every (r', s') with 0 <= s' < r' < u and v_dir(r', s') = v_dir(u, v).
  std::vector<std::pair<std::int64_t, std::int64_t>> c1;
  std::int64_t d = 1;  ///< gcd(f1 - 1, f2 - 1)

  friend bool operator==(const CornerCandidate&, const CornerCandidate&) = default;
};

/// The cut attached to one C1 = (r', s'); gamma and C2 only when d = 1.
struct CutAnalysis {
  std::pair<std::int64_t, std::int64_t> c1;
  std::optional<Rational> gamma;  ///< (v - s') / rho
  std::optional<std::pair<Rational, Rational>> c2;  ///< C1 + (gamma - s')(-sigma/rho, 1)
  /// C2 = (rbar - 1/rho, rbar) with rbar >= 2.
  bool forbidden = false;
};

enum class Verdict { RefutedNoC1, RefutedCondition6, Unresolved };

std::string to_string(Verdict v);

struct CandidateReport {
  CornerCandidate candidate;
  std::vector<CutAnalysis> cuts;  ///< one per C1, in the order of candidate.c1
  Verdict verdict = Verdict::Unresolved;
};

/// All candidates with 3 <= u < v, u + v <= max_sum, gcd(u, v) > 1, f1 >= 2
/// and sigma < 0, sorted by (u, v, f1). Throws PreconditionViolated when
/// max_sum < 5.
std::vector<CornerCandidate> enumerate_candidates(std::int64_t max_sum);

CandidateReport refute(const CornerCandidate& c);

struct BoundSummary {
  std::size_t candidates = 0;
  std::size_t refuted = 0;
  std::size_t unresolved = 0;
  std::int64_t max_sum = 0;

  /// "B > max_sum" when nothing is unresolved.
  std::optional<std::string> conclusion() const;
};

struct BoundResult {
  std::vector<CandidateReport> reports;
  BoundSummary summary;
};

/// enumerate + refute, spread over `jobs` threads; the result does not
/// depend on `jobs`.
BoundResult check_bound(std::int64_t max_sum, unsigned jobs = 1);

/// "md", "csv" or "json"; anything else throws UnknownFormat.
std::string emit_table(const std::vector<CandidateReport>& reports, const std::string& format);

/// Four lines: candidates, refuted, unresolved, conclusion.
std::string emit_summary(const BoundSummary& summary);

}  // namespace weylshape
