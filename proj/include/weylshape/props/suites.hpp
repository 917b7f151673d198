#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace weylshape::props {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Cases worth a note that are not failures (e.g. a non-integral c).
  std::size_t flagged = 0;
  std::string first_flag;

  bool ok() const { return failures == 0; }
};

using SuiteFn = SuiteResult (*)(std::uint64_t seed, std::size_t cases);

struct SuiteInfo {
  const char* module;
  const char* name;
  SuiteFn run;
};

/// Every suite, grouped by module.
const std::vector<SuiteInfo>& all_suites();

// exact-kernel
SuiteResult kernel_squarefree_reassembles(std::uint64_t seed, std::size_t cases);
SuiteResult kernel_kth_root_roundtrip(std::uint64_t seed, std::size_t cases);
SuiteResult kernel_gcd_divides(std::uint64_t seed, std::size_t cases);
SuiteResult kernel_binomial_matches_integer(std::uint64_t seed, std::size_t cases);

// weyl-algebra
SuiteResult algebra_ore_relation(std::uint64_t seed, std::size_t cases);
SuiteResult algebra_associativity(std::uint64_t seed, std::size_t cases);
SuiteResult algebra_distributivity_and_unit(std::uint64_t seed, std::size_t cases);
SuiteResult algebra_grading(std::uint64_t seed, std::size_t cases);
SuiteResult algebra_degree_zero_commutes(std::uint64_t seed, std::size_t cases);
SuiteResult algebra_mul_matches_rewriting(std::uint64_t seed, std::size_t cases);
SuiteResult algebra_parse_format_roundtrip(std::uint64_t seed, std::size_t cases);

// support-geometry
SuiteResult geometry_multiplicativity(std::uint64_t seed, std::size_t cases);
SuiteResult geometry_commutator_corners(std::uint64_t seed, std::size_t cases);
SuiteResult geometry_dir_of(std::uint64_t seed, std::size_t cases);
SuiteResult geometry_directions_match_brute_force(std::uint64_t seed, std::size_t cases);
SuiteResult geometry_consecutive_directions(std::uint64_t seed, std::size_t cases);
SuiteResult geometry_subrectangular_equivalence(std::uint64_t seed, std::size_t cases);
SuiteResult geometry_succ_pred(std::uint64_t seed, std::size_t cases);

// sigma-bracket
SuiteResult bracket_paths_agree(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_depends_on_leading_terms(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_zero_aligns_corners(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_corner_arithmetic(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_f_multiplicative(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_identity_one(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_common_root_roundtrip(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_pe_families(std::uint64_t seed, std::size_t cases);
SuiteResult bracket_multiplicity_classification(std::uint64_t seed, std::size_t cases);

// automorphisms
SuiteResult automorphism_degree_preserved(std::uint64_t seed, std::size_t cases);
SuiteResult automorphism_transport(std::uint64_t seed, std::size_t cases);
SuiteResult automorphism_commutators(std::uint64_t seed, std::size_t cases);
SuiteResult automorphism_rotation_degrees(std::uint64_t seed, std::size_t cases);
SuiteResult automorphism_inverse_roundtrip(std::uint64_t seed, std::size_t cases);

// shape-checker
SuiteResult checker_candidate_invariants(std::uint64_t seed, std::size_t cases);
SuiteResult checker_monotone(std::uint64_t seed, std::size_t cases);
SuiteResult checker_parallel_matches_serial(std::uint64_t seed, std::size_t cases);

}  // namespace weylshape::props
