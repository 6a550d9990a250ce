#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/axioms.hpp"
#include "fuscat/pcategory.hpp"

namespace fuscat {

// --- catalog group builders ---

GroupPtr cyclic_group(int n);
GroupPtr elementary_abelian_2(int rank);  // C2^rank
GroupPtr dihedral_group(int n);           // order 2n
GroupPtr quaternion_group();              // Q8
GroupPtr symmetric_group(int n);          // n <= 4, via permutations
GroupPtr alternating_group_4();
GroupPtr semidirect_c3_c4();  // C3 ⋊ C4, the C4 acting through inversion
GroupPtr gl3_2();             // GL(3,2) acting on the 7 nonzero vectors

/// The fusion system of an ambient group: P a Sylow p-subgroup of G (given
/// or computed), morphisms induced by conjugation in G.
PCategory fusion_from_ambient(const GroupPtr& g, int p,
                              const std::optional<std::vector<int>>& sylow_elems = std::nullopt,
                              const Caps& caps = {});

struct NormalizerConditionWitness {
  int q = -1;
  std::vector<AutMap> k;
  std::string clause;  // "sylow" or "alperin"
};

struct NormalizerConditionResult {
  bool ok = false;
  bool complete = true;
  std::optional<NormalizerConditionWitness> witness;
};

/// The indirect Frobenius criterion: for every (Q, K) with Q fully
/// K-normalized, the normalizer subcategory must satisfy both the Sylow and
/// the Alperin conditions.
NormalizerConditionResult normalizer_conditions_check(const PCategory& f, const Caps& caps = {});

struct Verdict {
  FrobeniusResult direct;
  NormalizerConditionResult indirect;
  bool agreement = false;
  double seconds_direct = 0, seconds_indirect = 0;  // excluded from reports
};

/// Runs both sides of the equivalence. For complete runs a disagreement is
/// an implementation bug, not a mathematical possibility.
Verdict verify_equivalence(const PCategory& f, const Caps& caps = {});

struct CheckResult {
  bool ok = true;
  std::string witness;
};

/// Validates the contact-closure of `family` (subgroup indices), then checks
/// the two partial-category conditions: a normalizer isomorphism mapping Q
/// onto Q' for fully normalized+centralized isomorphic members, and
/// surjectivity of the restriction F(R)_Q -> N_{F(Q)}(F_R(Q)).
CheckResult partial_frobenius_check(const PCategory& f, const std::vector<int>& family);

/// Extension condition on intersected subgroups: every morphism defined on
/// an intersected Q whose transported R-automizer stays ambient extends to R.
CheckResult intersected_extension_condition(const PCategory& f);
/// Minimal-closure comparison: the divisible closure of the inner category
/// plus all F(P,Q) for intersected Q must contain every morphism of F.
CheckResult minimal_closure_contains(const PCategory& f, const Caps& caps = {});

struct SampleReport {
  int tried = 0;
  int skipped = 0;  // hypotheses unmet
  int checked = 0;
  int failed = 0;
  std::string first_failure;
};

/// Samples triples (R, J, psi) with a normal overgroup Q in the family
/// stabilizing J and an extension of psi to Q; asserts each triple is
/// extensile in the strict variant.
SampleReport normal_overgroup_extension_sample(const PCategory& f, const std::vector<int>& family,
                                               int samples, uint64_t seed);

/// Enumerates configurations (Q, R, J) and checks the iterated-normalizer
/// identity: N_P^I(Q·R) equals the J-normalizer of R inside N_P(Q), as
/// subgroups and as normalizer subcategories (hom-set-wise).
SampleReport iterated_normalizer_sample(const PCategory& f, int max_configs,
                                        const Caps& caps = {});

// --- catalog ---

struct CatalogCase {
  std::string name;
  PCategory f;
};

std::vector<CatalogCase> builtin_catalog(const Caps& caps = {});
std::vector<CatalogCase> random_categories(uint64_t seed, int count, const Caps& caps = {});

struct CatalogReport {
  std::string text;       // deterministic, byte-stable for a fixed (seed, config)
  bool all_agree = true;  // every completed case: direct == indirect verdict
  bool any_incomplete = false;
};

CatalogReport catalog_run(uint64_t seed, int n_random, const Caps& caps = {});

}  // namespace fuscat
