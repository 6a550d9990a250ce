#pragma once

#include <vector>

#include "fuscat/group.hpp"

namespace fuscat {

/// An automorphism of a subgroup Q, stored as the image vector aligned with
/// Q's sorted element list; values are element indices of Q's parent group.
using AutMap = std::vector<int>;

AutMap identity_aut(const Subgroup& q);
AutMap conjugation_aut(const Subgroup& q, int x);  // u -> x u x^-1, requires x in N(Q)
AutMap compose_aut(const Subgroup& q, const AutMap& f, const AutMap& g);  // f after g
AutMap invert_aut(const Subgroup& q, const AutMap& f);
bool is_automorphism(const Subgroup& q, const AutMap& f);

/// The full automorphism group of Q together with an abstract Cayley table
/// (identity at index 0) and the inner subgroup F_Q(Q).
struct AutGroup {
  Subgroup q;
  std::vector<AutMap> maps;  // maps[i] realizes abstract element i
  GroupPtr abstract_group;
  std::vector<int> inner;    // abstract indices of F_Q(Q), sorted

  int order() const { return static_cast<int>(maps.size()); }
  int index_of(const AutMap& m) const;  // -1 if absent
};

/// Builds the abstract group generated by the given closed set of maps.
/// The set must already be a subgroup of Aut(Q).
AutGroup group_from_maps(const Subgroup& q, std::vector<AutMap> maps);

AutGroup compute_aut(const Subgroup& q, int cap = 64);

/// All subgroups of A, each as a deterministic sorted list of maps.
std::vector<std::vector<AutMap>> subgroups_of_aut(const AutGroup& a, int cap = 400);

bool is_aut_subgroup(const Subgroup& q, const std::vector<AutMap>& k);

/// N_P^K(Q): elements of N_P(Q) whose conjugation action on Q lies in K.
Subgroup k_normalizer(const Subgroup& p, const Subgroup& q, const std::vector<AutMap>& k);

/// F_R(Q): the image of N_R(Q) acting on Q by conjugation, as a sorted
/// list of automorphism maps.
std::vector<AutMap> transporter_image(const Subgroup& r, const Subgroup& q);

/// O_p of the automorphism group spanned by `a`, returned as maps.
std::vector<AutMap> o_p_of_aut(const AutGroup& a, int p);

}  // namespace fuscat
