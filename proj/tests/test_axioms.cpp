#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "helpers.hpp"

using namespace fuscat;
using namespace testutil;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::vector<AutMap> full_aut_family(const Subgroup& q) {
  auto maps = compute_aut(q).maps;
  std::sort(maps.begin(), maps.end());
  return maps;
}

}  // namespace

TEST_CASE("full k-normalization") {
  PCategory f = fusion_from_ambient(symmetric_group(4), 2);
  const int pi = f.full_index();

  // P itself is fully K-normalized for every K
  Caps caps;
  bool complete = true;
  for (const auto& k : k_families(f, pi, caps, &complete))
    CHECK(is_fully_k_normalized(f, pi, k));
  CHECK(complete);

  // the cyclic order-4 subgroup is normal in P, hence fully normalized
  for (int q = 0; q < f.num_subs(); ++q) {
    bool cyclic4 = f.subs[q].order() == 4 &&
                   std::any_of(f.subs[q].elems.begin(), f.subs[q].elems.end(),
                               [&](int x) { return f.group->element_order[x] == 4; });
    if (cyclic4) CHECK(is_fully_k_normalized(f, q, full_aut_family(f.subs[q])));
  }

  // inner categories: conjugate subgroups have conjugate normalizers,
  // so everything is fully normalized and fully centralized
  for (const GroupPtr& g : {dihedral_group(4), quaternion_group()}) {
    PCategory inner = inner_category(g, 2);
    for (int q = 0; q < inner.num_subs(); ++q) {
      CHECK(is_fully_normalized(inner, q));
      CHECK(is_fully_centralized(inner, q));
    }
  }
}

TEST_CASE("shortcuts agree with the general k-normalization test") {
  auto cases = builtin_catalog();
  for (const auto& c : cases) {
    const PCategory& f = c.f;
    if (f.group->order > 8) continue;  // keep the quadratic sweep cheap
    for (int q = 0; q < f.num_subs(); ++q) {
      CHECK(is_fully_normalized(f, q) ==
            is_fully_k_normalized(f, q, full_aut_family(f.subs[q])));
      CHECK(is_fully_centralized(f, q) ==
            is_fully_k_normalized(f, q, {identity_aut(f.subs[q])}));
    }
  }
}

TEST_CASE("sylow condition") {
  for (const GroupPtr& g : {cyclic_group(4), dihedral_group(4), quaternion_group()})
    CHECK(sylow_condition(inner_category(g, 2)));
  CHECK(sylow_condition(fusion_from_ambient(symmetric_group(4), 2)));
  CHECK(sylow_condition(fusion_from_ambient(gl3_2(), 2)));

  // seeding the inversion automorphism of C4 makes F(P) too big for F_P(P)
  GroupPtr c4 = cyclic_group(4);
  PCategory bad = divisible_closure(c4, 2, {from_aut_map(full_subgroup(c4), {0, 3, 2, 1})});
  CHECK_FALSE(sylow_condition(bad));
}

TEST_CASE("extension checks") {
  // the center of D8 always extends: the centralizer is all of P
  PCategory inner = inner_category(dihedral_group(4), 2);
  int zi = inner.sub_index(center(inner.full()));
  Morphism phi = inclusion_morphism(inner.subs[zi], inner.full());
  auto w = is_extensile(inner, zi, {identity_aut(inner.subs[zi])}, phi,
                        ExtensionVariant::full_twist);
  REQUIRE(w.has_value());
  CHECK(w->psi.dom == inner.full());
  CHECK(restrict(w->psi, inner.subs[zi]) == corestrict(phi, inner.full()));

  // the Klein-four seeded isomorphism never extends to the whole group
  GroupPtr v4 = elementary_abelian_2(2);
  Subgroup a(v4, {0, 1}), b(v4, {0, 2});
  PCategory bad = divisible_closure(v4, 2, {make_morphism(a, b, {0, 2})});
  int ai = bad.sub_index(a);
  Morphism seeded = compose(inclusion_morphism(b, bad.full()), make_morphism(a, b, {0, 2}));
  CHECK_FALSE(is_extensile(bad, ai, {identity_aut(a)}, seeded, ExtensionVariant::full_twist)
                  .has_value());
  CHECK_FALSE(is_extensile(bad, ai, {identity_aut(a)}, seeded, ExtensionVariant::strict_twist)
                  .has_value());
}

TEST_CASE("frobenius verdicts") {
  for (const GroupPtr& g : {cyclic_group(2), elementary_abelian_2(2), dihedral_group(4),
                            quaternion_group()})
    CHECK(is_frobenius(inner_category(g, 2)).ok);
  CHECK(is_frobenius(fusion_from_ambient(symmetric_group(4), 2)).ok);
  CHECK(is_frobenius(fusion_from_ambient(alternating_group_4(), 2)).ok);

  GroupPtr c4 = cyclic_group(4);
  PCategory bad1 = divisible_closure(c4, 2, {from_aut_map(full_subgroup(c4), {0, 3, 2, 1})});
  FrobeniusResult r1 = is_frobenius(bad1);
  REQUIRE_FALSE(r1.ok);
  CHECK(r1.witness->clause == "sylow");

  GroupPtr v4 = elementary_abelian_2(2);
  Subgroup a(v4, {0, 1}), b(v4, {0, 2});
  PCategory bad2 = divisible_closure(v4, 2, {make_morphism(a, b, {0, 2})});
  FrobeniusResult r2 = is_frobenius(bad2);
  REQUIRE_FALSE(r2.ok);
  CHECK(r2.witness->clause == "extension");
  CHECK(bad2.subs[r2.witness->q].order() == 2);

  // the parallel kernel and the serial reference agree, witness included
  for (const PCategory& f :
       {inner_category(dihedral_group(4), 2), fusion_from_ambient(symmetric_group(4), 2), bad1,
        bad2}) {
    FrobeniusResult rp = is_frobenius(f);
    FrobeniusResult rs = is_frobenius_serial(f);
    CHECK(rp.ok == rs.ok);
    CHECK(rp.complete == rs.complete);
    REQUIRE(rp.witness.has_value() == rs.witness.has_value());
    if (rp.witness) {
      CHECK(rp.witness->q == rs.witness->q);
      CHECK(rp.witness->clause == rs.witness->clause);
      CHECK(rp.witness->phi == rs.witness->phi);
    }
  }
}

TEST_CASE("selfcentralizing, radical, intersected") {
  PCategory f = fusion_from_ambient(symmetric_group(4), 2);
  auto ess = essential_subgroups(f);
  REQUIRE(ess.size() == 1);
  CHECK(is_selfcentralizing(f, ess[0]));
  CHECK(is_radical(f, ess[0]));
  CHECK(is_intersected(f, ess[0]));

  int zi = f.sub_index(center(f.full()));
  CHECK_FALSE(is_selfcentralizing(f, zi));
  CHECK_FALSE(is_radical(f, zi));
  CHECK(is_selfcentralizing(f, f.full_index()));  // C_P(P) = Z(P) always

  // radical implies intersected across the catalog
  for (const auto& c : builtin_catalog())
    for (int q = 0; q < c.f.num_subs(); ++q)
      if (is_radical(c.f, q)) CHECK(is_intersected(c.f, q));
}

TEST_CASE("alperin condition") {
  // vacuous without essential subgroups
  CHECK(alperin_condition(inner_category(dihedral_group(4), 2)).ok);
  CHECK(alperin_condition(fusion_from_ambient(alternating_group_4(), 2)).ok);
  CHECK(alperin_condition(fusion_from_ambient(symmetric_group(4), 2)).ok);
  CHECK(alperin_condition(fusion_from_ambient(gl3_2(), 2)).ok);

  // the seeded Klein-four system has essential but non-radical subgroups
  GroupPtr v4 = elementary_abelian_2(2);
  Subgroup a(v4, {0, 1}), b(v4, {0, 2});
  PCategory bad = divisible_closure(v4, 2, {make_morphism(a, b, {0, 2})});
  AlperinConditionResult r = alperin_condition(bad);
  REQUIRE_FALSE(r.ok);
  CHECK(r.clause == "radical");
  CHECK(bad.subs[r.witness_q].order() == 2);
}

TEST_CASE("normalizer categories") {
  // inner categories: the normalizer category is the inner category of the
  // K-normalizer, for every (Q, K)
  Caps caps;
  for (const GroupPtr& g : {dihedral_group(4), quaternion_group()}) {
    PCategory f = inner_category(g, 2);
    for (int q = 0; q < f.num_subs(); ++q) {
      bool complete = true;
      for (const auto& k : k_families(f, q, caps, &complete)) {
        if (!is_fully_k_normalized(f, q, k)) continue;
        PCategory nf = normalizer_category(f, q, k, caps);
        Subgroup pprime = k_normalizer(f.full(), f.subs[q], k);
        PCategory expected = inner_category(materialize(pprime), 2);
        CHECK(nf.fingerprint() == expected.fingerprint());
      }
    }
  }

  // taking Q = P in an inner category returns the category itself
  PCategory d8 = inner_category(dihedral_group(4), 2);
  PCategory same =
      normalizer_category(d8, d8.full_index(), full_aut_family(d8.full()), caps);
  CHECK(same.fingerprint() == d8.fingerprint());

  // at the essential subgroup of the S4 system the automizer survives whole
  PCategory f = fusion_from_ambient(symmetric_group(4), 2);
  auto ess = essential_subgroups(f);
  REQUIRE(ess.size() == 1);
  PCategory nf = normalizer_category(f, ess[0], full_aut_family(f.subs[ess[0]]), caps);
  CHECK(nf.group->order == 8);  // the essential Klein four is normal in P
  int local_q = -1;
  for (int i = 0; i < nf.num_subs(); ++i) {
    std::vector<int> lifted;
    for (int e : nf.subs[i].elems) lifted.push_back(nf.group->root_label[e]);
    std::sort(lifted.begin(), lifted.end());
    std::vector<int> orig;
    for (int e : f.subs[ess[0]].elems) orig.push_back(f.group->root_label[e]);
    std::sort(orig.begin(), orig.end());
    if (lifted == orig) local_q = i;
  }
  REQUIRE(local_q >= 0);
  CHECK(nf.homs[local_q][local_q].size() == 6);
  CHECK(is_frobenius(nf).ok);

  // subgroups fused to the center have smaller normalizers than the center
  // itself, so they are not fully normalized and must be refused
  int zi = f.sub_index(center(f.full()));
  int fused = -1;
  for (const auto& cls : iso_classes(f))
    if (std::find(cls.begin(), cls.end(), zi) != cls.end())
      for (int q : cls)
        if (q != zi && !is_fully_normalized(f, q)) fused = q;
  REQUIRE(fused >= 0);
  CHECK(throws_code(ErrorCode::NotFullyKNormalized, [&] {
    normalizer_category(f, fused, full_aut_family(f.subs[fused]), caps);
  }));
}

TEST_CASE("k-family fallback under a tight automorphism cap") {
  PCategory f = inner_category(elementary_abelian_2(2), 2);
  const int pi = f.full_index();

  Caps tight;
  tight.aut_group_cap = 5;  // |Aut(V4)| = 6 exceeds this
  bool complete = true;
  CHECK(throws_code(ErrorCode::OrderCapExceeded,
                    [&] { k_families(f, pi, tight, &complete); }));

  tight.reduced_k_fallback = true;
  complete = true;
  auto fams = k_families(f, pi, tight, &complete);
  CHECK_FALSE(complete);
  CHECK(fams.size() == 2);  // V4 is abelian: inner is trivial, so {1} and Aut
  for (const auto& k : fams) CHECK(is_aut_subgroup(f.subs[pi], k));

  Caps loose;
  complete = true;
  CHECK(k_families(f, pi, loose, &complete).size() == 6);
  CHECK(complete);
}
