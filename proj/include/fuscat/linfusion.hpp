#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/hnf.hpp"
#include "fuscat/pcategory.hpp"

namespace fuscat {

/// An integer linear combination of morphisms sharing domain and codomain
/// (an element of ZF(cod, dom)). Zero coefficients are never stored.
struct FormalSum {
  Subgroup dom;
  Subgroup cod;
  std::map<Morphism, long long> terms;

  void add(const Morphism& m, long long c);
  bool is_zero() const { return terms.empty(); }
};

long long augmentation(const FormalSum& s);
FormalSum dimorphism(const Morphism& phi_prime, const Morphism& phi);
FormalSum compose_right(const FormalSum& s, const Morphism& phi);  // term-wise m ∘ phi

/// Connected components of the factorization graph on F(P,Q): two vertices
/// share a component iff their difference lies in r_F(Q).
struct ComponentStructure {
  int q = -1;                       // subgroup index of Q
  std::vector<Morphism> vertices;   // F(P,Q), canonical order
  std::vector<int> comp;            // component id per vertex
  int ncomp = 0;
  std::vector<std::vector<int>> components;  // vertex ids per component

  int vertex_index(const Morphism& m) const;
};

ComponentStructure factorization_components(const PCategory& f, int q);
bool is_essential(const PCategory& f, int q);

/// Indices of the F-essential proper subgroups. The OpenMP kernel and the
/// serial reference must agree (checked in tests and the benchmark).
std::vector<int> essential_subgroups(const PCategory& f);
std::vector<int> essential_subgroups_serial(const PCategory& f);

/// s in r_F(Q)? Requires augmentation zero (s in w_F(Q)).
bool is_reducible(const PCategory& f, const FormalSum& s);

/// Independent brute-force oracle: decides r_F(Q) = w_F(Q) by exact
/// integer lattice comparison in the basis F(P,Q).
bool rf_lattice_oracle(const PCategory& f, int q, int cap = 200);

/// Generator-family test for w_F: family[q] is S_Q, a set of
/// augmentation-zero sums in ZF(P,Q).
bool is_generator_family(const PCategory& f, const std::map<int, std::vector<FormalSum>>& family);

/// One telescoping link: a dimorphism phi'−phi from R_i to Q_i framed by
/// mu: Q_i -> Q and nu: R -> R_i.
struct ChainLink {
  Morphism mu;
  Morphism nu;
  Morphism phi;
  Morphism phi_prime;
};

/// Telescopes the sigma-ordered links; verifies the middle equalities and
/// returns the dimorphism phi' − phi.
FormalSum chain_to_sum(const std::vector<ChainLink>& links, const std::vector<int>& sigma);

/// Searches an injective ordering of a subset of links realizing s as a
/// telescoped chain. Returns std::nullopt when no chain exists.
std::optional<std::vector<int>> sum_to_chain(const FormalSum& s,
                                             const std::vector<ChainLink>& links);

/// One Alperin link: U essential (or P), sigma in F(U), nu in F(U, R).
struct AlperinLink {
  Subgroup u;
  Morphism sigma;
  Morphism nu;
};

struct AlperinChain {
  std::vector<AlperinLink> links;
  Morphism target;  // the decomposed morphism in F(P, R)
};

AlperinChain alperin_decompose(const PCategory& f, const Morphism& psi);

/// Independent checker for the chain equations; `why` reports the first
/// failing equation when given.
bool verify_alperin_chain(const PCategory& f, const AlperinChain& chain,
                          std::string* why = nullptr);

}  // namespace fuscat
