#include "weylshape/props/suites.hpp"

namespace weylshape::props {

const std::vector<SuiteInfo>& all_suites() {
  static const std::vector<SuiteInfo> suites{
      {"exact-kernel", "squarefree_reassembles", kernel_squarefree_reassembles},
      {"exact-kernel", "kth_root_roundtrip", kernel_kth_root_roundtrip},
      {"exact-kernel", "gcd_divides", kernel_gcd_divides},
      {"exact-kernel", "binomial_matches_integer", kernel_binomial_matches_integer},
      {"weyl-algebra", "ore_relation", algebra_ore_relation},
      {"weyl-algebra", "associativity", algebra_associativity},
      {"weyl-algebra", "distributivity_and_unit", algebra_distributivity_and_unit},
      {"weyl-algebra", "grading", algebra_grading},
      {"weyl-algebra", "degree_zero_commutes", algebra_degree_zero_commutes},
      {"weyl-algebra", "mul_matches_rewriting", algebra_mul_matches_rewriting},
      {"weyl-algebra", "parse_format_roundtrip", algebra_parse_format_roundtrip},
      {"support-geometry", "multiplicativity", geometry_multiplicativity},
      {"support-geometry", "commutator_corners", geometry_commutator_corners},
      {"support-geometry", "dir_of", geometry_dir_of},
      {"support-geometry", "directions_match_brute_force", geometry_directions_match_brute_force},
      {"support-geometry", "consecutive_directions", geometry_consecutive_directions},
      {"support-geometry", "subrectangular_equivalence", geometry_subrectangular_equivalence},
      {"support-geometry", "succ_pred", geometry_succ_pred},
      {"sigma-bracket", "paths_agree", bracket_paths_agree},
      {"sigma-bracket", "depends_on_leading_terms", bracket_depends_on_leading_terms},
      {"sigma-bracket", "zero_aligns_corners", bracket_zero_aligns_corners},
      {"sigma-bracket", "corner_arithmetic", bracket_corner_arithmetic},
      {"sigma-bracket", "f_multiplicative", bracket_f_multiplicative},
      {"sigma-bracket", "identity_one", bracket_identity_one},
      {"sigma-bracket", "common_root_roundtrip", bracket_common_root_roundtrip},
      {"sigma-bracket", "pe_families", bracket_pe_families},
      {"sigma-bracket", "multiplicity_classification", bracket_multiplicity_classification},
      {"automorphisms", "degree_preserved", automorphism_degree_preserved},
      {"automorphisms", "transport", automorphism_transport},
      {"automorphisms", "commutators", automorphism_commutators},
      {"automorphisms", "rotation_degrees", automorphism_rotation_degrees},
      {"automorphisms", "inverse_roundtrip", automorphism_inverse_roundtrip},
      {"shape-checker", "candidate_invariants", checker_candidate_invariants},
      {"shape-checker", "monotone", checker_monotone},
      {"shape-checker", "parallel_matches_serial", checker_parallel_matches_serial},
  };
  return suites;
}

}  // namespace weylshape::props
