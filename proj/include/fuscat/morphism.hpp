#pragma once

#include <vector>

#include "fuscat/aut.hpp"
#include "fuscat/group.hpp"

namespace fuscat {

/// An injective group homomorphism between subgroups of P. The codomain is
/// part of the identity: the same map with an enlarged codomain is a
/// distinct morphism. `img[i]` is the image of `dom.elems[i]`.
struct Morphism {
  Subgroup dom;
  Subgroup cod;
  std::vector<int> img;

  int apply(int e) const { return img[dom.pos(e)]; }
  std::vector<int> image_set() const;  // sorted
  bool is_iso() const;                 // bijective onto the codomain

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.dom == b.dom && a.cod == b.cod && a.img == b.img;
  }
  // canonical order: (domain key, codomain key, image tuple)
  friend bool operator<(const Morphism& a, const Morphism& b) {
    if (!(a.dom == b.dom)) return a.dom < b.dom;
    if (!(a.cod == b.cod)) return a.cod < b.cod;
    return a.img < b.img;
  }
};

/// Validates multiplicativity, injectivity and image containment.
Morphism make_morphism(Subgroup dom, Subgroup cod, std::vector<int> img);

Morphism identity_morphism(const Subgroup& q);
Morphism inclusion_morphism(const Subgroup& sub, const Subgroup& super);
/// Conjugation c_x : R -> Q, u -> x u x^-1 (requires ^xR contained in Q).
Morphism conjugation_morphism(const Subgroup& r, const Subgroup& q, int x);
Morphism from_aut_map(const Subgroup& q, const AutMap& m);

Morphism compose(const Morphism& phi, const Morphism& psi);  // phi after psi
Morphism restrict(const Morphism& phi, const Subgroup& t);
Morphism corestrict(const Morphism& phi, const Subgroup& q);
Morphism invert_iso(const Morphism& phi);

/// The automorphism of phi(Q) obtained by transporting alpha in Aut(Q)
/// along the isomorphism induced by phi.
AutMap transport_aut(const Morphism& phi, const Subgroup& image, const AutMap& alpha);
/// The reverse transport: pulls beta in Aut(phi(Q)) back to Aut(Q).
AutMap pullback_aut(const Morphism& phi, const Subgroup& image, const AutMap& beta);

}  // namespace fuscat
