#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/morphism.hpp"

namespace fuscat {

/// Counterexample to the divisibility condition: phi∘psi lies in the
/// category but psi does not.
struct DivisibilityWitness {
  Morphism phi;
  Morphism psi;
  int q, r, t;  // subgroup indices
  std::string describe() const;
};

/// A divisible P-category stored as the full hom-set table over all
/// subgroup pairs of P. homs[q][r] is F(Q_q, R_r): morphisms R_r -> Q_q,
/// kept sorted in canonical morphism order.
class PCategory {
 public:
  GroupPtr group;  // P
  int p = 0;
  std::vector<Subgroup> subs;  // canonical order (order, then lex elements)
  std::vector<std::vector<std::vector<Morphism>>> homs;
  bool divisible_verified = false;

  int num_subs() const { return static_cast<int>(subs.size()); }
  int full_index() const { return num_subs() - 1; }
  const Subgroup& full() const { return subs.back(); }

  int sub_index(const std::vector<int>& elems) const;  // -1 if absent
  int sub_index(const Subgroup& s) const { return sub_index(s.elems); }

  const std::vector<Morphism>& hom(int q, int r) const { return homs[q][r]; }
  const std::vector<Morphism>& hom(const Subgroup& q, const Subgroup& r) const;
  bool contains(const Morphism& m) const;

  /// F(Q) as automorphism maps of Q (every member of F(Q,Q) is bijective).
  std::vector<AutMap> aut_maps(int q) const;
  /// F_Q(Q), the inner automorphisms, as maps.
  std::vector<AutMap> inner_maps(int q) const;

  long long total_morphisms() const;

  /// Canonical content summary in root-label coordinates; equal strings
  /// mean hom-set-wise equal categories, even across relabelings.
  std::string fingerprint() const;

 private:
  mutable std::map<std::vector<int>, int> index_;
  void build_index() const;
};

PCategory inner_category(const GroupPtr& p_group, int p, const Caps& caps = {});
PCategory divisible_closure(const GroupPtr& p_group, int p, const std::vector<Morphism>& seeds,
                            const Caps& caps = {});

std::optional<DivisibilityWitness> divisibility_witness(const PCategory& f);
bool is_divisible(const PCategory& f);

/// Full category-structure validation used by tests and by the normalizer
/// construction: contains F_P, closed under composition, divisible.
bool validate_category(const PCategory& f, std::string* why = nullptr);

/// Partition of the subgroups of P by existence of an F-isomorphism.
std::vector<std::vector<int>> iso_classes(const PCategory& f);

}  // namespace fuscat
