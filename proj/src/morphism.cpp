#include "fuscat/morphism.hpp"

#include <algorithm>
#include <set>

namespace fuscat {

std::vector<int> Morphism::image_set() const {
  std::vector<int> s = img;
  std::sort(s.begin(), s.end());
  return s;
}

bool Morphism::is_iso() const { return image_set() == cod.elems; }

Morphism make_morphism(Subgroup dom, Subgroup cod, std::vector<int> img) {
  const auto& g = *dom.parent;
  if (static_cast<int>(img.size()) != dom.order())
    throw Error(ErrorCode::DomainMismatch, "image vector length != |domain|");
  std::set<int> image;
  for (int v : img) {
    if (!cod.contains(v))
      throw Error(ErrorCode::NotContained, "image not contained in codomain");
    image.insert(v);
  }
  if (static_cast<int>(image.size()) != dom.order())
    throw Error(ErrorCode::NotAnIsomorphism, "map is not injective");
  for (int i = 0; i < dom.order(); ++i)
    for (int j = 0; j < dom.order(); ++j) {
      int prod = g.mul(dom.elems[i], dom.elems[j]);
      int pos = dom.pos(prod);
      if (pos < 0) throw Error(ErrorCode::NotASubgroup, "domain not closed");
      if (img[pos] != g.mul(img[i], img[j]))
        throw Error(ErrorCode::DomainMismatch, "map is not multiplicative");
    }
  return Morphism{std::move(dom), std::move(cod), std::move(img)};
}

Morphism identity_morphism(const Subgroup& q) { return Morphism{q, q, q.elems}; }

Morphism inclusion_morphism(const Subgroup& sub, const Subgroup& super) {
  if (!sub.subset_of(super))
    throw Error(ErrorCode::NotContained, "inclusion requires sub within super");
  return Morphism{sub, super, sub.elems};
}

Morphism conjugation_morphism(const Subgroup& r, const Subgroup& q, int x) {
  const auto& g = *r.parent;
  std::vector<int> img(r.order());
  for (int i = 0; i < r.order(); ++i) {
    img[i] = g.conj(x, r.elems[i]);
    if (!q.contains(img[i]))
      throw Error(ErrorCode::NotContained, "conjugate of R not contained in Q");
  }
  return Morphism{r, q, std::move(img)};
}

Morphism from_aut_map(const Subgroup& q, const AutMap& m) { return Morphism{q, q, m}; }

Morphism compose(const Morphism& phi, const Morphism& psi) {
  if (!(phi.dom == psi.cod))
    throw Error(ErrorCode::DomainMismatch, "compose: domain(phi) != codomain(psi)");
  std::vector<int> img(psi.dom.order());
  for (int i = 0; i < psi.dom.order(); ++i) img[i] = phi.img[phi.dom.pos(psi.img[i])];
  return Morphism{psi.dom, phi.cod, std::move(img)};
}

Morphism restrict(const Morphism& phi, const Subgroup& t) {
  if (!t.subset_of(phi.dom))
    throw Error(ErrorCode::NotContained, "restrict: T not contained in domain");
  std::vector<int> img(t.order());
  for (int i = 0; i < t.order(); ++i) img[i] = phi.img[phi.dom.pos(t.elems[i])];
  return Morphism{t, phi.cod, std::move(img)};
}

Morphism corestrict(const Morphism& phi, const Subgroup& q) {
  for (int v : phi.img)
    if (!q.contains(v))
      throw Error(ErrorCode::NotContained, "corestrict: image not contained in target");
  return Morphism{phi.dom, q, phi.img};
}

Morphism invert_iso(const Morphism& phi) {
  if (!phi.is_iso())
    throw Error(ErrorCode::NotAnIsomorphism, "invert_iso: morphism is not bijective onto codomain");
  std::vector<int> img(phi.cod.order());
  for (int i = 0; i < phi.dom.order(); ++i) img[phi.cod.pos(phi.img[i])] = phi.dom.elems[i];
  return Morphism{phi.cod, phi.dom, std::move(img)};
}

AutMap transport_aut(const Morphism& phi, const Subgroup& image, const AutMap& alpha) {
  // ^phi alpha : phi(u) -> phi(alpha(u))
  AutMap out(image.order());
  for (int i = 0; i < phi.dom.order(); ++i) {
    int u = phi.dom.elems[i];
    int pu = phi.img[i];
    out[image.pos(pu)] = phi.img[phi.dom.pos(alpha[phi.dom.pos(u)])];
  }
  return out;
}

AutMap pullback_aut(const Morphism& phi, const Subgroup& image, const AutMap& beta) {
  // phi^* beta : u -> phi^-1(beta(phi(u)))
  AutMap out(phi.dom.order());
  for (int i = 0; i < phi.dom.order(); ++i) {
    int img = beta[image.pos(phi.img[i])];
    // find the preimage
    int pre = -1;
    for (int j = 0; j < phi.dom.order(); ++j)
      if (phi.img[j] == img) {
        pre = phi.dom.elems[j];
        break;
      }
    if (pre < 0) throw Error(ErrorCode::NotContained, "pullback: value outside image");
    out[i] = pre;
  }
  return out;
}

}  // namespace fuscat
