#include "fuscat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace fuscat {

namespace {

std::vector<std::vector<int>> table_from(int order, int (*mul)(int, int, int), int aux) {
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) t[i][j] = mul(i, j, aux);
  return t;
}

}  // namespace

GroupPtr cyclic_group(int n) {
  return from_cayley_table(table_from(n, [](int a, int b, int m) { return (a + b) % m; }, n));
}

GroupPtr elementary_abelian_2(int rank) {
  int n = 1 << rank;
  return from_cayley_table(table_from(n, [](int a, int b, int) { return a ^ b; }, 0));
}

GroupPtr dihedral_group(int n) {
  // element e*n + k realizes s^e r^k; relation: r s = s r^-1
  return from_cayley_table(table_from(2 * n, [](int x, int y, int n) {
    int e1 = x / n, k1 = x % n, e2 = y / n, k2 = y % n;
    int k = ((e2 ? n - k1 : k1) + k2) % n;
    return ((e1 + e2) % 2) * n + k;
  }, n));
}

GroupPtr quaternion_group() {
  // element a + 4b realizes i^a j^b with j^2 = i^2, j i = i^-1 j
  return from_cayley_table(table_from(8, [](int x, int y, int) {
    int a1 = x % 4, b1 = x / 4, a2 = y % 4, b2 = y / 4;
    int a = (a1 + (b1 ? 4 - a2 : a2)) % 4;
    int b = b1 + b2;
    if (b == 2) {
      a = (a + 2) % 4;
      b = 0;
    }
    return a + 4 * b;
  }, 0));
}

GroupPtr symmetric_group(int n) {
  if (n < 2 || n > 4) throw Error(ErrorCode::OrderCapExceeded, "symmetric_group supports n in 2..4");
  std::vector<int> swap01(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return from_permutations(n, {swap01, cycle});
}

GroupPtr alternating_group_4() {
  return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

GroupPtr semidirect_c3_c4() {
  // pairs (a, b) in Z3 x Z4, b acting on Z3 through inversion when odd
  return from_cayley_table(table_from(12, [](int x, int y, int) {
    int a1 = x % 3, b1 = x / 3, a2 = y % 3, b2 = y / 3;
    int a = (a1 + (b1 % 2 ? 3 - a2 : a2)) % 3;
    return a + 3 * ((b1 + b2) % 4);
  }, 0));
}

GroupPtr gl3_2() {
  // generators as images of the basis vectors e1, e2, e3 (bitmasks 1, 2, 4);
  // a vector maps to the xor of the images of its set bits
  auto perm_of = [](int im1, int im2, int im3) {
    std::vector<int> p(7);
    for (int v = 1; v <= 7; ++v) {
      int w = 0;
      if (v & 1) w ^= im1;
      if (v & 2) w ^= im2;
      if (v & 4) w ^= im3;
      p[v - 1] = w - 1;
    }
    return p;
  };
  // basis 3-cycle, basis swap, and the transvection e1 -> e1+e2
  return from_permutations(7, {perm_of(2, 4, 1), perm_of(2, 1, 4), perm_of(3, 2, 4)});
}

PCategory fusion_from_ambient(const GroupPtr& g, int p,
                              const std::optional<std::vector<int>>& sylow_elems,
                              const Caps& caps) {
  Subgroup s = sylow_elems ? Subgroup(g, *sylow_elems) : sylow_p_subgroup(g, p);
  if (s.order() != p_part(g->order, p))
    throw Error(ErrorCode::NotSylow,
                "given subgroup has order " + std::to_string(s.order()) + ", Sylow order is " +
                    std::to_string(p_part(g->order, p)));
  GroupPtr local = materialize(s);  // throws NotASubgroup if the set is not closed
  if (!local->is_p_group(p)) throw Error(ErrorCode::NotSylow, "Sylow candidate is not a p-group");

  auto subs = all_subgroups(local, caps.subgroup_cap);
  const int n = static_cast<int>(subs.size());

  PCategory f;
  f.group = local;
  f.p = p;
  f.subs = subs;
  f.homs.assign(n, std::vector<std::vector<Morphism>>(n));

  std::vector<uint64_t> masks(n);
  for (int i = 0; i < n; ++i) {
    uint64_t m = 0;
    for (int e : subs[i].elems) m |= 1ull << e;
    masks[i] = m;
  }

  for (int ri = 0; ri < n; ++ri) {
    const Subgroup& r = subs[ri];
    std::set<std::vector<int>> images;
    for (int x = 0; x < g->order; ++x) {
      std::vector<int> img(r.order());
      bool inside = true;
      for (int i = 0; i < r.order() && inside; ++i) {
        int conj = g->conj(x, s.elems[r.elems[i]]);
        int pos = s.pos(conj);
        if (pos < 0)
          inside = false;
        else
          img[i] = pos;
      }
      if (inside) images.insert(std::move(img));
    }
    for (const auto& img : images) {
      uint64_t im = 0;
      for (int e : img) im |= 1ull << e;
      for (int qi = 0; qi < n; ++qi)
        if ((im & ~masks[qi]) == 0) f.homs[qi][ri].push_back(Morphism{subs[ri], subs[qi], img});
    }
  }
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r) std::sort(f.homs[q][r].begin(), f.homs[q][r].end());
  f.divisible_verified = true;
  return f;
}

NormalizerConditionResult normalizer_conditions_check(const PCategory& f, const Caps& caps) {
  NormalizerConditionResult res;
  res.complete = true;
  for (int q = 0; q < f.num_subs(); ++q) {
    bool complete = true;
    auto ks = k_families(f, q, caps, &complete);
    if (!complete) res.complete = false;
    for (const auto& k : ks) {
      if (!is_fully_k_normalized(f, q, k)) continue;
      PCategory nf = normalizer_category(f, q, k, caps);
      if (!sylow_condition(nf)) {
        res.ok = false;
        res.witness = NormalizerConditionWitness{q, k, "sylow"};
        return res;
      }
      AlperinConditionResult ac = alperin_condition(nf);
      if (!ac.ok) {
        res.ok = false;
        res.witness = NormalizerConditionWitness{q, k, "alperin"};
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

Verdict verify_equivalence(const PCategory& f, const Caps& caps) {
  using clock = std::chrono::steady_clock;
  Verdict v;
  auto t0 = clock::now();
  v.direct = is_frobenius(f, caps);
  auto t1 = clock::now();
  v.indirect = normalizer_conditions_check(f, caps);
  auto t2 = clock::now();
  v.seconds_direct = std::chrono::duration<double>(t1 - t0).count();
  v.seconds_indirect = std::chrono::duration<double>(t2 - t1).count();
  v.agreement = v.direct.ok == v.indirect.ok;
  return v;
}

namespace {

std::string elems_str(const Subgroup& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.elems.size(); ++i) {
    if (i) os << ",";
    os << s.elems[i];
  }
  os << "}";
  return os.str();
}

std::string morphism_str(const Morphism& m) {
  std::ostringstream os;
  os << elems_str(m.dom) << "->" << elems_str(m.cod) << "[";
  for (size_t i = 0; i < m.img.size(); ++i) {
    if (i) os << ",";
    os << m.img[i];
  }
  os << "]";
  return os.str();
}

bool restricts_to(const Morphism& big, const Morphism& small) {
  for (int i = 0; i < small.dom.order(); ++i)
    if (big.apply(small.dom.elems[i]) != small.img[i]) return false;
  return true;
}

std::vector<AutMap> conjugated_family(const Subgroup& q, const AutMap& beta,
                                      const std::vector<AutMap>& fam) {
  AutMap inv = invert_aut(q, beta);
  std::vector<AutMap> out;
  out.reserve(fam.size());
  for (const auto& g : fam) out.push_back(compose_aut(q, compose_aut(q, beta, g), inv));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CheckResult partial_frobenius_check(const PCategory& f, const std::vector<int>& family) {
  if (!sylow_condition(f))
    throw Error(ErrorCode::SylowFailed, "the Sylow condition fails, partial check undefined");
  const int n = f.num_subs();
  std::vector<char> in_family(n, 0);
  for (int q : family) {
    if (q < 0 || q >= n) throw Error(ErrorCode::BadFamily, "family index out of range");
    in_family[q] = 1;
  }
  for (int r = 0; r < n; ++r) {
    if (!in_family[r]) continue;
    for (int q = 0; q < n; ++q)
      if (!f.homs[q][r].empty() && !in_family[q])
        throw Error(ErrorCode::BadFamily,
                    "family not contact-closed: " + elems_str(f.subs[q]) + " reachable from " +
                        elems_str(f.subs[r]));
  }

  const Subgroup p = f.full();
  const int pi = f.full_index();
  std::vector<char> nice(n, 0);  // fully normalized and fully centralized
  for (int q = 0; q < n; ++q)
    if (in_family[q]) nice[q] = is_fully_normalized(f, q) && is_fully_centralized(f, q);

  std::vector<int> cls(n, -1);
  {
    auto classes = iso_classes(f);
    for (size_t c = 0; c < classes.size(); ++c)
      for (int q : classes[c]) cls[q] = static_cast<int>(c);
  }

  // matched normalizer isomorphisms
  for (int a = 0; a < n; ++a) {
    if (!in_family[a] || !nice[a]) continue;
    for (int b = a + 1; b < n; ++b) {
      if (!in_family[b] || !nice[b] || cls[a] != cls[b]) continue;
      Subgroup na = normalizer(p, f.subs[a]);
      Subgroup nb = normalizer(p, f.subs[b]);
      bool found = false;
      for (const auto& zeta : f.hom(nb, na)) {
        if (!zeta.is_iso()) continue;
        std::vector<int> img;
        img.reserve(f.subs[a].elems.size());
        for (int e : f.subs[a].elems) img.push_back(zeta.apply(e));
        std::sort(img.begin(), img.end());
        if (img == f.subs[b].elems) {
          found = true;
          break;
        }
      }
      if (!found)
        return {false, "no normalizer isomorphism carrying " + elems_str(f.subs[a]) + " onto " +
                           elems_str(f.subs[b])};
    }
  }

  // surjectivity of restriction onto the automizer normalizer
  for (int q = 0; q < n; ++q) {
    if (!in_family[q] || !nice[q]) continue;
    const Subgroup& qs = f.subs[q];
    Subgroup qc = product_subgroup(qs, centralizer(p, qs));
    Subgroup nq = normalizer(p, qs);
    for (int r = 0; r < n; ++r) {
      const Subgroup& rs = f.subs[r];
      if (!qc.subset_of(rs) || !rs.subset_of(nq)) continue;
      std::set<AutMap> restricted;
      for (const auto& alpha : f.homs[r][r]) {
        std::vector<int> img;
        img.reserve(qs.elems.size());
        bool stable = true;
        AutMap beta(qs.order());
        for (int i = 0; i < qs.order() && stable; ++i) {
          beta[i] = alpha.apply(qs.elems[i]);
          if (!qs.contains(beta[i])) stable = false;
        }
        if (stable) restricted.insert(beta);
      }
      std::vector<AutMap> frq = transporter_image(rs, qs);
      for (const auto& beta : f.aut_maps(q)) {
        if (conjugated_family(qs, beta, frq) != frq) continue;
        if (!restricted.count(beta))
          return {false, "restriction F(R)_Q -> N_{F(Q)}(F_R(Q)) not surjective at Q=" +
                             elems_str(qs) + " R=" + elems_str(rs)};
      }
    }
  }
  return {true, ""};
}

CheckResult intersected_extension_condition(const PCategory& f) {
  const int n = f.num_subs();
  const Subgroup p = f.full();
  const int pi = f.full_index();
  for (int q = 0; q < n; ++q) {
    if (!is_intersected(f, q)) continue;
    const Subgroup& qs = f.subs[q];
    Subgroup nq = normalizer(p, qs);
    for (int r = 0; r < n; ++r) {
      const Subgroup& rs = f.subs[r];
      if (!qs.subset_of(rs) || !rs.subset_of(nq)) continue;
      std::vector<AutMap> frq = transporter_image(rs, qs);
      for (const auto& phi : f.homs[pi][q]) {
        Morphism into = corestrict(phi, Subgroup(f.group, phi.image_set()));
        std::vector<AutMap> ambient = transporter_image(p, into.cod);
        std::set<AutMap> ambient_set(ambient.begin(), ambient.end());
        bool inside = true;
        for (const auto& alpha : frq)
          if (!ambient_set.count(transport_aut(into, into.cod, alpha))) {
            inside = false;
            break;
          }
        if (!inside) continue;
        bool extended = false;
        for (const auto& psi : f.homs[pi][r])
          if (restricts_to(psi, phi)) {
            extended = true;
            break;
          }
        if (!extended)
          return {false, "no extension of " + morphism_str(phi) + " to " + elems_str(rs)};
      }
    }
  }
  return {true, ""};
}

CheckResult minimal_closure_contains(const PCategory& f, const Caps& caps) {
  const int pi = f.full_index();
  std::vector<Morphism> seeds;
  for (int q = 0; q < f.num_subs(); ++q)
    if (is_intersected(f, q))
      for (const auto& m : f.homs[pi][q]) seeds.push_back(m);
  PCategory closure = divisible_closure(f.group, f.p, seeds, caps);
  for (int q = 0; q < f.num_subs(); ++q)
    for (int r = 0; r < f.num_subs(); ++r)
      for (const auto& m : f.homs[q][r])
        if (!closure.contains(m))
          return {false, "closure over intersected hom-sets misses " + morphism_str(m)};
  return {true, ""};
}

SampleReport normal_overgroup_extension_sample(const PCategory& f, const std::vector<int>& family,
                                               int samples, uint64_t seed) {
  SampleReport rep;
  std::mt19937_64 rng(seed);
  const int n = f.num_subs();
  const int pi = f.full_index();
  for (int s = 0; s < samples; ++s) {
    ++rep.tried;
    int r = static_cast<int>(rng() % n);
    const Subgroup& rs = f.subs[r];
    AutGroup ar = compute_aut(rs);
    auto js = subgroups_of_aut(ar);
    const auto& j = js[rng() % js.size()];
    const auto& hom = f.homs[pi][r];
    const Morphism& psi = hom[rng() % hom.size()];

    Morphism into = corestrict(psi, Subgroup(f.group, psi.image_set()));
    std::vector<AutMap> tj;
    tj.reserve(j.size());
    for (const auto& a : j) tj.push_back(transport_aut(into, into.cod, a));
    std::sort(tj.begin(), tj.end());
    if (!is_fully_k_normalized(f, f.sub_index(into.cod), tj)) {
      ++rep.skipped;
      continue;
    }

    bool hypothesis = false;
    for (int q : family) {
      const Subgroup& qs = f.subs[q];
      if (!rs.subset_of(qs) || !is_normal_in(rs, qs)) continue;
      bool stabilizes = true;
      for (int x : qs.elems) {
        AutMap c = conjugation_aut(rs, x);
        if (conjugated_family(rs, c, {j.begin(), j.end()}) !=
            std::vector<AutMap>(j.begin(), j.end())) {
          stabilizes = false;
          break;
        }
      }
      if (!stabilizes) continue;
      for (const auto& eta : f.homs[pi][q])
        if (restricts_to(eta, psi)) {
          hypothesis = true;
          break;
        }
      if (hypothesis) break;
    }
    if (!hypothesis) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    if (!is_extensile(f, r, j, psi, ExtensionVariant::strict_twist)) {
      ++rep.failed;
      if (rep.first_failure.empty())
        rep.first_failure = "triple not extensile: psi=" + morphism_str(psi);
    }
  }
  return rep;
}

SampleReport iterated_normalizer_sample(const PCategory& f, int max_configs, const Caps& caps) {
  SampleReport rep;
  const Subgroup p = f.full();
  for (int q = 0; q < f.num_subs() && rep.checked < max_configs; ++q) {
    const Subgroup& qs = f.subs[q];
    AutGroup aq = compute_aut(qs);
    std::vector<AutMap> kfull = aq.maps;
    std::sort(kfull.begin(), kfull.end());
    if (!is_fully_k_normalized(f, q, kfull)) continue;
    PCategory fp = normalizer_category(f, q, kfull, caps);
    Subgroup pprime = k_normalizer(p, qs, kfull);
    auto lift_elem = [&](int e) { return pprime.elems[e]; };

    for (int rl = 0; rl < fp.num_subs() && rep.checked < max_configs; ++rl) {
      const Subgroup& rlocal = fp.subs[rl];
      AutGroup ar = compute_aut(rlocal);
      std::vector<std::vector<AutMap>> js;
      try {
        js = subgroups_of_aut(ar, caps.aut_group_cap);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OrderCapExceeded) throw;
        continue;
      }
      for (const auto& j : js) {
        if (rep.checked >= max_configs) break;
        ++rep.tried;
        if (!is_fully_k_normalized(fp, rl, j)) {
          ++rep.skipped;
          continue;
        }
        std::vector<int> relems;
        relems.reserve(rlocal.elems.size());
        for (int e : rlocal.elems) relems.push_back(lift_elem(e));
        Subgroup rs(f.group, relems);  // lift is monotone, positions align
        std::vector<AutMap> jlift;
        jlift.reserve(j.size());
        for (const auto& m : j) {
          AutMap lifted(m.size());
          for (size_t i = 0; i < m.size(); ++i) lifted[i] = lift_elem(m[i]);
          jlift.push_back(std::move(lifted));
        }
        std::sort(jlift.begin(), jlift.end());
        std::set<AutMap> jset(jlift.begin(), jlift.end());

        Subgroup t = product_subgroup(qs, rs);
        int ti = f.sub_index(t);
        AutGroup at = compute_aut(t);
        std::vector<AutMap> family_i;
        for (const auto& alpha : at.maps) {
          auto maps_onto = [&](const Subgroup& sub) {
            std::vector<int> img;
            img.reserve(sub.elems.size());
            for (int e : sub.elems) img.push_back(alpha[t.pos(e)]);
            std::sort(img.begin(), img.end());
            return img == sub.elems;
          };
          if (!maps_onto(qs) || !maps_onto(rs)) continue;
          AutMap on_r(rs.order());
          for (int i = 0; i < rs.order(); ++i) on_r[i] = alpha[t.pos(rs.elems[i])];
          if (jset.count(on_r)) family_i.push_back(alpha);
        }
        std::sort(family_i.begin(), family_i.end());

        Subgroup lhs = k_normalizer(p, t, family_i);
        Subgroup rhs_local = k_normalizer(fp.full(), rlocal, j);
        std::vector<int> rhs;
        rhs.reserve(rhs_local.elems.size());
        for (int e : rhs_local.elems) rhs.push_back(lift_elem(e));

        ++rep.checked;
        if (lhs.elems != rhs) {
          ++rep.failed;
          if (rep.first_failure.empty())
            rep.first_failure = "subgroup identity fails at Q=" + elems_str(qs) +
                                " R=" + elems_str(rs);
          continue;
        }
        if (is_fully_k_normalized(f, ti, family_i)) {
          PCategory a = normalizer_category(f, ti, family_i, caps);
          PCategory b = normalizer_category(fp, rl, j, caps);
          if (a.fingerprint() != b.fingerprint()) {
            ++rep.failed;
            if (rep.first_failure.empty())
              rep.first_failure = "hom-set identity fails at Q=" + elems_str(qs) +
                                  " R=" + elems_str(rs);
          }
        }
      }
    }
  }
  return rep;
}

std::vector<CatalogCase> builtin_catalog(const Caps& caps) {
  std::vector<CatalogCase> out;
  out.push_back({"inner-c2", inner_category(cyclic_group(2), 2, caps)});
  out.push_back({"inner-c4", inner_category(cyclic_group(4), 2, caps)});
  out.push_back({"inner-v4", inner_category(elementary_abelian_2(2), 2, caps)});
  out.push_back({"inner-c8", inner_category(cyclic_group(8), 2, caps)});
  out.push_back({"inner-d8", inner_category(dihedral_group(4), 2, caps)});
  out.push_back({"inner-q8", inner_category(quaternion_group(), 2, caps)});
  out.push_back({"inner-c2x2x2", inner_category(elementary_abelian_2(3), 2, caps)});
  out.push_back({"ambient-s4-p2", fusion_from_ambient(symmetric_group(4), 2, std::nullopt, caps)});
  out.push_back({"ambient-a4-p2", fusion_from_ambient(alternating_group_4(), 2, std::nullopt, caps)});
  out.push_back({"ambient-s3-p3", fusion_from_ambient(symmetric_group(3), 3, std::nullopt, caps)});
  out.push_back(
      {"ambient-c3xc4-p3", fusion_from_ambient(semidirect_c3_c4(), 3, std::nullopt, caps)});
  out.push_back({"ambient-gl32-p2", fusion_from_ambient(gl3_2(), 2, std::nullopt, caps)});
  {
    GroupPtr c4 = cyclic_group(4);
    Subgroup full = full_subgroup(c4);
    AutMap inversion{0, 3, 2, 1};
    out.push_back({"nonexample-c4-sylow",
                   divisible_closure(c4, 2, {from_aut_map(full, inversion)}, caps)});
  }
  {
    GroupPtr v4 = elementary_abelian_2(2);
    Subgroup a(v4, {0, 1});
    Subgroup b(v4, {0, 2});
    out.push_back(
        {"nonexample-v4-iso", divisible_closure(v4, 2, {make_morphism(a, b, {0, 2})}, caps)});
  }
  return out;
}

namespace {

std::vector<Morphism> all_isomorphisms(const Subgroup& a, const Subgroup& b) {
  std::vector<Morphism> out;
  if (a.order() != b.order()) return out;
  const auto& g = *a.parent;
  std::vector<int> rest(b.elems.begin() + 1, b.elems.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> img{b.elems[0]};
    img.insert(img.end(), rest.begin(), rest.end());
    bool good = true;
    for (int i = 0; i < a.order() && good; ++i)
      for (int j = 0; j < a.order(); ++j) {
        int prod = a.pos(g.mul(a.elems[i], a.elems[j]));
        if (g.mul(img[i], img[j]) != img[prod]) {
          good = false;
          break;
        }
      }
    if (good) out.push_back(Morphism{a, b, img});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

std::vector<CatalogCase> random_categories(uint64_t seed, int count, const Caps& caps) {
  std::mt19937_64 rng(seed);
  // p-groups of order <= 8 keep the richest closures within the runtime budget
  std::vector<GroupPtr> pool = {cyclic_group(4), elementary_abelian_2(2), cyclic_group(8),
                                dihedral_group(4), quaternion_group()};
  std::vector<CatalogCase> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 60) {
    ++attempts;
    GroupPtr g = pool[rng() % pool.size()];
    auto subs = all_subgroups(g, caps.subgroup_cap);
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < subs.size(); ++i)
      for (size_t j = 0; j < subs.size(); ++j)
        if (subs[i].order() == subs[j].order() && subs[i].order() > 1) pairs.emplace_back(i, j);
    int nseeds = 1 + static_cast<int>(rng() % 2);
    std::vector<Morphism> seeds;
    bool ok = true;
    for (int s = 0; s < nseeds && ok; ++s) {
      auto [ai, bi] = pairs[rng() % pairs.size()];
      auto isos = all_isomorphisms(subs[ai], subs[bi]);
      if (isos.empty())
        ok = false;
      else
        seeds.push_back(isos[rng() % isos.size()]);
    }
    if (!ok) continue;
    try {
      PCategory f = divisible_closure(g, 2, seeds, caps);
      out.push_back({"random-" + std::to_string(out.size()), std::move(f)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HomSetCapExceeded) throw;
    }
  }
  return out;
}

namespace {

std::string aut_family_str(const std::vector<AutMap>& k) {
  std::ostringstream os;
  os << "|K|=" << k.size();
  return os.str();
}

std::string frobenius_witness_str(const PCategory& f, const FrobeniusFailure& w) {
  std::ostringstream os;
  os << w.clause << " at Q=" << elems_str(f.subs[w.q]);
  if (w.clause == "extension") os << " " << aut_family_str(w.k) << " phi=" << morphism_str(w.phi);
  return os.str();
}

std::string check_line(const char* label, const CheckResult& c) {
  std::string line = std::string("  ") + label + ": ";
  line += c.ok ? "pass" : "fail (" + c.witness + ")";
  return line + "\n";
}

}  // namespace

CatalogReport catalog_run(uint64_t seed, int n_random, const Caps& caps) {
  CatalogReport rep;
  std::ostringstream os;
  os << "fuscat catalog report\n";
  os << "seed: " << seed << "\n";
  os << "random cases: " << n_random << "\n\n";

  std::vector<CatalogCase> cases = builtin_catalog(caps);
  for (auto& c : random_categories(seed, n_random, caps)) cases.push_back(std::move(c));

  int agreements = 0, completed = 0;
  for (const auto& c : cases) {
    os << "case " << c.name << "\n";
    const PCategory& f = c.f;
    os << "  |P|=" << f.group->order << " p=" << f.p << " subgroups=" << f.num_subs()
       << " morphisms=" << f.total_morphisms() << "\n";
    try {
      Verdict v = verify_equivalence(f, caps);
      os << "  frobenius (direct axioms): " << (v.direct.ok ? "yes" : "no");
      if (v.direct.witness) os << " (" << frobenius_witness_str(f, *v.direct.witness) << ")";
      os << "\n";
      os << "  frobenius (normalizer conditions): " << (v.indirect.ok ? "yes" : "no");
      if (v.indirect.witness)
        os << " (" << v.indirect.witness->clause
           << " at Q=" << elems_str(f.subs[v.indirect.witness->q]) << " "
           << aut_family_str(v.indirect.witness->k) << ")";
      os << "\n";
      bool complete = v.direct.complete && v.indirect.complete;
      os << "  agreement: " << (v.agreement ? "yes" : "no")
         << (complete ? "" : " [INCOMPLETE]") << "\n";
      if (complete) {
        ++completed;
        if (v.agreement) ++agreements;
        if (!v.agreement) rep.all_agree = false;
      } else {
        rep.any_incomplete = true;
      }

      auto ess = essential_subgroups(f);
      os << "  essential subgroups:";
      if (ess.empty()) {
        os << " none\n";
      } else {
        for (int q : ess) os << " " << elems_str(f.subs[q]);
        os << "\n";
      }

      os << check_line("intersected-extension condition",
                       sylow_condition(f) ? intersected_extension_condition(f)
                                          : CheckResult{false, "Sylow condition fails"});
      os << check_line("minimal-closure containment",
                       sylow_condition(f) ? minimal_closure_contains(f, caps)
                                          : CheckResult{false, "Sylow condition fails"});
      std::vector<int> all(f.num_subs());
      for (int i = 0; i < f.num_subs(); ++i) all[i] = i;
      CheckResult part;
      try {
        part = partial_frobenius_check(f, all);
      } catch (const Error& e) {
        part = {false, e.what()};
      }
      os << check_line("partial-category conditions (all subgroups)", part);
    } catch (const Error& e) {
      os << "  error: " << e.what() << "\n";
      rep.all_agree = false;
    }
    os << "\n";
  }
  os << "summary: cases=" << cases.size() << " agreements=" << agreements << "/" << completed
     << " incomplete=" << (rep.any_incomplete ? "yes" : "no") << "\n";
  rep.text = os.str();
  return rep;
}

}  // namespace fuscat
