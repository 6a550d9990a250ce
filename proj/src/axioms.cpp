#include "fuscat/axioms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fuscat {

namespace {

Subgroup image_subgroup(const PCategory& f, const Morphism& m) {
  return Subgroup(f.group, m.image_set());
}

std::vector<AutMap> transport_family(const Morphism& phi, const Subgroup& image,
                                     const std::vector<AutMap>& k) {
  std::vector<AutMap> out;
  out.reserve(k.size());
  for (const auto& a : k) out.push_back(transport_aut(phi, image, a));
  std::sort(out.begin(), out.end());
  return out;
}

bool image_equals(const PCategory& f, const Morphism& psi, const Subgroup& n,
                  const Subgroup& target) {
  std::vector<int> img;
  img.reserve(n.elems.size());
  for (int e : n.elems) img.push_back(psi.apply(e));
  std::sort(img.begin(), img.end());
  return img == target.elems;
}

}  // namespace

bool is_fully_k_normalized(const PCategory& f, int q, const std::vector<AutMap>& k) {
  const Subgroup& qs = f.subs[q];
  const Subgroup p = f.full();
  Subgroup n = k_normalizer(p, qs, k);
  Subgroup qn = product_subgroup(qs, n);
  int qni = f.sub_index(qn);
  for (const auto& psi : f.homs[f.full_index()][qni]) {
    Morphism on_q = restrict(psi, qs);
    Subgroup psi_q = image_subgroup(f, on_q);
    std::vector<AutMap> tk = transport_family(on_q, psi_q, k);
    Subgroup expected = k_normalizer(p, psi_q, tk);
    if (!image_equals(f, psi, n, expected)) return false;
  }
  return true;
}

bool is_fully_normalized(const PCategory& f, int q) {
  const Subgroup& qs = f.subs[q];
  const Subgroup p = f.full();
  Subgroup n = normalizer(p, qs);
  Subgroup qn = product_subgroup(qs, n);
  int qni = f.sub_index(qn);
  for (const auto& psi : f.homs[f.full_index()][qni]) {
    Subgroup psi_q = image_subgroup(f, restrict(psi, qs));
    if (!image_equals(f, psi, n, normalizer(p, psi_q))) return false;
  }
  return true;
}

bool is_fully_centralized(const PCategory& f, int q) {
  const Subgroup& qs = f.subs[q];
  const Subgroup p = f.full();
  Subgroup c = centralizer(p, qs);
  Subgroup qc = product_subgroup(qs, c);
  int qci = f.sub_index(qc);
  for (const auto& psi : f.homs[f.full_index()][qci]) {
    Subgroup psi_q = image_subgroup(f, restrict(psi, qs));
    if (!image_equals(f, psi, c, centralizer(p, psi_q))) return false;
  }
  return true;
}

bool sylow_condition(const PCategory& f) {
  const int pi = f.full_index();
  std::vector<AutMap> fp = f.aut_maps(pi);
  std::vector<AutMap> inner = f.inner_maps(pi);
  int total = static_cast<int>(fp.size());
  return static_cast<int>(inner.size()) == p_part(total, f.p);
}

std::optional<ExtensionWitness> is_extensile(const PCategory& f, int q,
                                             const std::vector<AutMap>& k, const Morphism& phi,
                                             ExtensionVariant variant) {
  const Subgroup& qs = f.subs[q];
  const Subgroup p = f.full();
  Subgroup n = k_normalizer(p, qs, k);
  Subgroup qn = product_subgroup(qs, n);
  int qni = f.sub_index(qn);

  std::vector<AutMap> chis;
  if (variant == ExtensionVariant::full_twist) {
    chis = k;
  } else {
    std::set<AutMap> fq;
    for (const auto& m : f.aut_maps(q)) fq.insert(m);
    for (const auto& c : k)
      if (fq.count(c)) chis.push_back(c);
  }
  std::sort(chis.begin(), chis.end());

  for (const auto& psi : f.homs[f.full_index()][qni]) {
    for (const auto& chi : chis) {
      bool match = true;
      for (int i = 0; i < qs.order() && match; ++i) {
        int u = qs.elems[i];
        if (psi.apply(u) != phi.apply(chi[i])) match = false;
      }
      if (match) return ExtensionWitness{psi, chi, variant};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<AutMap>> k_families(const PCategory& f, int q, const Caps& caps,
                                            bool* complete) {
  const Subgroup& qs = f.subs[q];
  AutGroup aut = compute_aut(qs, caps.subgroup_cap);
  try {
    return subgroups_of_aut(aut, caps.aut_group_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrderCapExceeded || !caps.reduced_k_fallback) throw;
  }
  if (complete) *complete = false;
  std::vector<AutMap> full = aut.maps;
  std::sort(full.begin(), full.end());
  std::vector<AutMap> inner;
  for (int i : aut.inner) inner.push_back(aut.maps[i]);
  std::sort(inner.begin(), inner.end());
  std::vector<std::vector<AutMap>> out{{identity_aut(qs)}, inner, full};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// first extension-condition failure at one Q, in canonical (K, phi) order
std::optional<FrobeniusFailure> frobenius_failure_at(const PCategory& f, int q,
                                                     const Caps& caps, bool* complete) {
  const int pi = f.full_index();
  auto ks = k_families(f, q, caps, complete);
  for (const auto& k : ks) {
    for (const auto& phi : f.homs[pi][q]) {
      Morphism into_image = corestrict(phi, Subgroup(f.group, phi.image_set()));
      Subgroup phi_q = into_image.cod;
      std::vector<AutMap> tk = transport_family(into_image, phi_q, k);
      int phi_q_idx = f.sub_index(phi_q);
      if (!is_fully_k_normalized(f, phi_q_idx, tk)) continue;
      if (!is_extensile(f, q, k, phi, ExtensionVariant::full_twist))
        return FrobeniusFailure{q, k, phi, "extension"};
    }
  }
  return std::nullopt;
}

FrobeniusResult frobenius_impl(const PCategory& f, const Caps& caps, bool parallel) {
  FrobeniusResult res;
  res.complete = true;
  if (!sylow_condition(f)) {
    res.ok = false;
    res.witness = FrobeniusFailure{f.full_index(), {}, identity_morphism(f.full()), "sylow"};
    return res;
  }
  const int n = f.num_subs();
  std::vector<std::optional<FrobeniusFailure>> failures(n);
  std::vector<char> incomplete(n, 0);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int q = 0; q < n; ++q) {
      bool complete = true;
      failures[q] = frobenius_failure_at(f, q, caps, &complete);
      incomplete[q] = complete ? 0 : 1;
    }
  } else {
    for (int q = 0; q < n; ++q) {
      bool complete = true;
      failures[q] = frobenius_failure_at(f, q, caps, &complete);
      incomplete[q] = complete ? 0 : 1;
    }
  }
  for (int q = 0; q < n; ++q) {
    if (incomplete[q]) res.complete = false;
    if (failures[q] && !res.witness) res.witness = failures[q];
  }
  res.ok = !res.witness.has_value();
  return res;
}

}  // namespace

FrobeniusResult is_frobenius(const PCategory& f, const Caps& caps) {
  return frobenius_impl(f, caps, true);
}

FrobeniusResult is_frobenius_serial(const PCategory& f, const Caps& caps) {
  return frobenius_impl(f, caps, false);
}

bool is_selfcentralizing(const PCategory& f, int q) {
  const int pi = f.full_index();
  const Subgroup p = f.full();
  for (const auto& phi : f.homs[pi][q]) {
    Subgroup phi_q = image_subgroup(f, phi);
    if (!(centralizer(p, phi_q) == center(phi_q))) return false;
  }
  return true;
}

bool is_radical(const PCategory& f, int q) {
  if (!is_selfcentralizing(f, q)) return false;
  AutGroup fq = group_from_maps(f.subs[q], f.aut_maps(q));
  std::vector<AutMap> core = o_p_of_aut(fq, f.p);
  return core == f.inner_maps(q);
}

bool is_intersected(const PCategory& f, int q) {
  if (!is_selfcentralizing(f, q)) return false;
  const int pi = f.full_index();
  const Subgroup p = f.full();
  std::set<AutMap> acc;
  bool first = true;
  for (const auto& phi : f.homs[pi][q]) {
    Morphism into_image = corestrict(phi, image_subgroup(f, phi));
    std::vector<AutMap> ambient = transporter_image(p, into_image.cod);
    std::set<AutMap> pulled;
    for (const auto& b : ambient) pulled.insert(pullback_aut(into_image, into_image.cod, b));
    if (first) {
      acc = std::move(pulled);
      first = false;
    } else {
      std::set<AutMap> next;
      for (const auto& m : acc)
        if (pulled.count(m)) next.insert(m);
      acc = std::move(next);
    }
  }
  std::vector<AutMap> inner = f.inner_maps(q);
  return std::vector<AutMap>(acc.begin(), acc.end()) == inner;
}

AlperinConditionResult alperin_condition(const PCategory& f) {
  AlperinConditionResult res;
  for (int q : essential_subgroups(f)) {
    if (!is_radical(f, q)) {
      res.ok = false;
      res.witness_q = q;
      res.clause = "radical";
      return res;
    }
    ComponentStructure cs = factorization_components(f, q);
    // orbit closure of the right-composition action of F(Q) on components
    std::vector<int> parent(cs.ncomp);
    for (int i = 0; i < cs.ncomp; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& alpha : f.aut_maps(q)) {
      Morphism a = from_aut_map(f.subs[q], alpha);
      for (int c = 0; c < cs.ncomp; ++c) {
        const Morphism& rep = cs.vertices[cs.components[c][0]];
        int target = cs.comp[cs.vertex_index(compose(rep, a))];
        parent[find(c)] = find(target);
      }
    }
    std::set<int> orbits;
    for (int c = 0; c < cs.ncomp; ++c) orbits.insert(find(c));
    if (orbits.size() != 1) {
      res.ok = false;
      res.witness_q = q;
      res.clause = "transitive";
      return res;
    }
  }
  return res;
}

PCategory normalizer_category(const PCategory& f, int q, const std::vector<AutMap>& k,
                              const Caps& caps) {
  if (!is_fully_k_normalized(f, q, k))
    throw Error(ErrorCode::NotFullyKNormalized, "Q is not fully K-normalized in F");
  const Subgroup& qs = f.subs[q];
  const Subgroup p = f.full();
  Subgroup p_prime = k_normalizer(p, qs, k);
  GroupPtr local = materialize(p_prime);
  auto subs = all_subgroups(local, caps.subgroup_cap);
  std::set<AutMap> kset(k.begin(), k.end());

  PCategory out;
  out.group = local;
  out.p = f.p;
  out.subs = subs;
  const int n = static_cast<int>(subs.size());
  out.homs.assign(n, std::vector<std::vector<Morphism>>(n));

  auto lift = [&](const Subgroup& local_sub) {  // local subgroup -> subgroup of F.group
    std::vector<int> elems;
    elems.reserve(local_sub.elems.size());
    for (int e : local_sub.elems) elems.push_back(p_prime.elems[e]);
    return Subgroup(f.group, std::move(elems));
  };

  for (int ri = 0; ri < n; ++ri) {
    Subgroup r = lift(subs[ri]);
    Subgroup qr = product_subgroup(qs, r);
    int qri = f.sub_index(qr);
    for (int ti = 0; ti < n; ++ti) {
      Subgroup t = lift(subs[ti]);
      Subgroup qt = product_subgroup(qs, t);
      int qti = f.sub_index(qt);
      for (const auto& phi : f.hom(r, t)) {
        bool admitted = false;
        for (const auto& psi : f.homs[qri][qti]) {
          // psi : Q·T -> Q·R with psi|_Q in K and psi|_T = phi
          bool on_q = true;
          AutMap chi(qs.order());
          for (int i = 0; i < qs.order() && on_q; ++i) {
            int img = psi.apply(qs.elems[i]);
            if (!qs.contains(img)) on_q = false;
            chi[i] = img;
          }
          if (!on_q || !kset.count(chi)) continue;
          bool on_t = true;
          for (int i = 0; i < t.order() && on_t; ++i)
            if (psi.apply(t.elems[i]) != phi.img[i]) on_t = false;
          if (on_t) {
            admitted = true;
            break;
          }
        }
        if (!admitted) continue;
        std::vector<int> img(t.order());
        for (int i = 0; i < t.order(); ++i) img[i] = p_prime.pos(phi.img[i]);
        out.homs[ri][ti].push_back(Morphism{subs[ti], subs[ri], std::move(img)});
      }
      std::sort(out.homs[ri][ti].begin(), out.homs[ri][ti].end());
    }
  }

  std::string why;
  if (!validate_category(out, &why))
    throw Error(ErrorCode::ValidationError, "normalizer category invalid: " + why);
  out.divisible_verified = true;
  return out;
}

}  // namespace fuscat
