#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fuscat/error.hpp"

namespace fuscat {

struct Caps {
  int subgroup_cap = 64;      // order cap for groups taking the role of P
  int perm_closure_cap = 10000;
  int aut_group_cap = 400;    // cap on |A| in subgroups_of_aut
  long long hom_cap = 200000; // total morphisms in one category
  int lattice_cap = 200;      // |F(P,Q)| cap for the integer-lattice oracle
  bool reduced_k_fallback = false;
};

/// A finite group given by its multiplication table. Element 0 is the
/// identity. `root_label` tracks each element back through the chain of
/// subgroup materializations to the group it was originally carved from,
/// so subgroups of relabeled groups stay comparable.
class FiniteGroup {
 public:
  int order = 0;
  std::vector<int> table;       // row-major, table[a*order+b] = a*b
  std::vector<int> inverse;
  std::vector<int> element_order;
  int prime = 0;                // attached p, 0 if not set
  std::vector<int> root_label;
  std::vector<std::vector<int>> perms;  // element -> permutation, when built from perms

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int x, int a) const {  // x a x^-1
    return mul(mul(x, a), inverse[x]);
  }
  bool is_p_group(int p) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as the sorted list of its element indices.
class Subgroup {
 public:
  GroupPtr parent;
  std::vector<int> elems;  // sorted, contains 0

  Subgroup() = default;
  Subgroup(GroupPtr g, std::vector<int> elements);

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int e) const;
  int pos(int e) const;  // position of e in elems, -1 if absent
  bool subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elems == b.elems;
  }
  // canonical order: by order, then lexicographic element list
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  }
};

// --- construction ---

FiniteGroup validate_table(std::vector<int> table, int order);
/// Table known associative by construction (e.g. composition tables);
/// identity must already sit at index 0.
GroupPtr group_from_trusted_table(std::vector<int> table, int order);
GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table);
GroupPtr from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                           const Caps& caps = {});

/// Relabels the elements of `s` to 0..|s|-1 and returns a standalone group
/// carrying root labels, together with the element map (new -> old).
GroupPtr materialize(const Subgroup& s);

// --- subgroup machinery ---

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens);
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int cap = 64);
std::vector<Subgroup> all_subgroups(const Subgroup& s, int cap = 64);

Subgroup normalizer(const Subgroup& ambient, const Subgroup& q);
Subgroup centralizer(const Subgroup& ambient, const Subgroup& q);
Subgroup center(const Subgroup& q);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Q·N where N normalizes Q (the set product, a subgroup).
Subgroup product_subgroup(const Subgroup& q, const Subgroup& n);

bool is_normal_in(const Subgroup& h, const Subgroup& g);

int p_part(int n, int p);
Subgroup sylow_p_subgroup(const GroupPtr& g, int p);
Subgroup o_p(const GroupPtr& g, int p);

/// A short generating sequence obtained greedily (used by the
/// automorphism search to avoid factorial blowup).
std::vector<int> generating_sequence(const Subgroup& s);

}  // namespace fuscat
