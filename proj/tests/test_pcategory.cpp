#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

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

}  // namespace

TEST_CASE("inner category of an abelian group has only inclusions") {
  for (const GroupPtr& g : {elementary_abelian_2(2), cyclic_group(8)}) {
    PCategory f = inner_category(g, 2);
    for (int q = 0; q < f.num_subs(); ++q)
      for (int r = 0; r < f.num_subs(); ++r) {
        if (f.subs[r].subset_of(f.subs[q])) {
          REQUIRE(f.homs[q][r].size() == 1);
          CHECK(f.homs[q][r][0] == inclusion_morphism(f.subs[r], f.subs[q]));
        } else {
          CHECK(f.homs[q][r].empty());
        }
      }
  }
}

TEST_CASE("inner category agrees with direct conjugation enumeration") {
  for (const GroupPtr& g : {dihedral_group(4), quaternion_group()}) {
    PCategory f = inner_category(g, 2);
    for (int q = 0; q < f.num_subs(); ++q)
      for (int r = 0; r < f.num_subs(); ++r) {
        std::set<std::vector<int>> expected;
        for (int x = 0; x < g->order; ++x) {
          std::vector<int> img;
          bool inside = true;
          for (int u : f.subs[r].elems) {
            int c = g->conj(x, u);
            if (!f.subs[q].contains(c)) {
              inside = false;
              break;
            }
            img.push_back(c);
          }
          if (inside) expected.insert(std::move(img));
        }
        REQUIRE(f.homs[q][r].size() == expected.size());
        for (const auto& m : f.homs[q][r]) CHECK(expected.count(m.img) == 1);
      }
  }
}

TEST_CASE("automorphism hom-set of P in the inner category") {
  PCategory f = inner_category(dihedral_group(4), 2);
  CHECK(f.homs[f.full_index()][f.full_index()].size() == 4);  // = |Inn(D8)|
  CHECK(f.aut_maps(f.full_index()) == f.inner_maps(f.full_index()));
  CHECK(throws_code(ErrorCode::NotAPGroup, [] { inner_category(symmetric_group(3), 2); }));
}

TEST_CASE("morphism calculus") {
  auto d8 = dihedral_group(4);
  Subgroup p = full_subgroup(d8);
  Subgroup c4(d8, {0, 1, 2, 3});
  Subgroup z(d8, {0, 2});

  Morphism inc = inclusion_morphism(c4, p);
  Morphism conj = conjugation_morphism(c4, c4, 4);  // reflection inverts rotations
  CHECK(conj.img == std::vector<int>{0, 3, 2, 1});
  CHECK(compose(inc, conj).img == std::vector<int>{0, 3, 2, 1});
  CHECK(restrict(conj, z).img == std::vector<int>{0, 2});
  CHECK(corestrict(inc, c4) == identity_morphism(c4));
  CHECK(invert_iso(conj) == conj);

  CHECK(throws_code(ErrorCode::NotContained, [&] { restrict(conj, p); }));
  CHECK(throws_code(ErrorCode::NotContained,
                    [&] { corestrict(inc, z); }));
  CHECK(throws_code(ErrorCode::NotAnIsomorphism, [&] { invert_iso(inc); }));
  CHECK(throws_code(ErrorCode::DomainMismatch,
                    [&] { compose(conjugation_morphism(z, z, 0), inc); }));
  CHECK(throws_code(ErrorCode::NotAnIsomorphism,
                    [&] { make_morphism(z, z, {0, 0}); }));
}

TEST_CASE("divisible closure with no seeds is the inner category") {
  for (const GroupPtr& g : {elementary_abelian_2(2), dihedral_group(4), quaternion_group()}) {
    PCategory inner = inner_category(g, 2);
    PCategory closed = divisible_closure(g, 2, {});
    CHECK(closed.fingerprint() == inner.fingerprint());
  }
}

TEST_CASE("closure of a seeded isomorphism contains its inverse") {
  auto v4 = elementary_abelian_2(2);
  Subgroup a(v4, {0, 1});
  Subgroup b(v4, {0, 2});
  Morphism seed = make_morphism(a, b, {0, 2});
  PCategory f = divisible_closure(v4, 2, {seed});
  CHECK(f.contains(seed));
  CHECK(f.contains(make_morphism(b, a, {0, 1})));
  CHECK(is_divisible(f));
  CHECK(contains_all(f, inner_category(v4, 2)));
}

TEST_CASE("closure laws: idempotent, monotone, contains the inner category") {
  auto v4 = elementary_abelian_2(2);
  Subgroup a(v4, {0, 1});
  Subgroup b(v4, {0, 2});
  Subgroup c(v4, {0, 3});
  std::vector<Morphism> s1{make_morphism(a, b, {0, 2})};
  std::vector<Morphism> s2{make_morphism(a, b, {0, 2}), make_morphism(b, c, {0, 3})};

  PCategory f1 = divisible_closure(v4, 2, s1);
  PCategory f2 = divisible_closure(v4, 2, s2);
  CHECK(contains_all(f2, f1));  // monotone in the seed set
  CHECK(contains_all(f1, inner_category(v4, 2)));

  PCategory f1again = divisible_closure(v4, 2, all_morphisms(f1));
  CHECK(f1again.fingerprint() == f1.fingerprint());  // idempotent
}

TEST_CASE("divisibility witness on a hand-broken category") {
  auto v4 = elementary_abelian_2(2);
  PCategory f = inner_category(v4, 2);
  Subgroup a(v4, {0, 1});
  Subgroup b(v4, {0, 2});
  int ai = f.sub_index(a), bi = f.sub_index(b);
  // insert a lone isomorphism a -> b without closing; its inverse is missing
  f.homs[bi][ai].push_back(make_morphism(a, b, {0, 2}));
  std::sort(f.homs[bi][ai].begin(), f.homs[bi][ai].end());

  auto w = divisibility_witness(f);
  REQUIRE(w.has_value());
  CHECK_FALSE(is_divisible(f));
  CHECK_FALSE(f.contains(w->psi));
  CHECK(f.contains(w->phi));
  CHECK_FALSE(w->describe().empty());

  std::string why;
  CHECK_FALSE(validate_category(f, &why));
  CHECK(validate_category(inner_category(v4, 2)));
}

TEST_CASE("every morphism factors as inclusion after an isomorphism") {
  PCategory f = fusion_from_ambient(symmetric_group(4), 2);
  for (int q = 0; q < f.num_subs(); ++q)
    for (int r = 0; r < f.num_subs(); ++r)
      for (const auto& phi : f.homs[q][r]) {
        Subgroup image(f.group, phi.image_set());
        Morphism iso = corestrict(phi, image);
        CHECK(iso.is_iso());
        CHECK(f.contains(iso));
        CHECK(compose(inclusion_morphism(image, f.subs[q]), iso) == phi);
      }
}

TEST_CASE("nonempty hom-sets only shrink: morphisms are injective") {
  for (const auto& c : builtin_catalog()) {
    const PCategory& f = c.f;
    for (int q = 0; q < f.num_subs(); ++q)
      for (int r = 0; r < f.num_subs(); ++r)
        if (!f.homs[q][r].empty()) CHECK(f.subs[r].order() <= f.subs[q].order());
  }
}

TEST_CASE("isomorphism classes") {
  // abelian inner category: no non-identity isos, all classes are singletons
  PCategory ab = inner_category(elementary_abelian_2(2), 2);
  CHECK(iso_classes(ab).size() == static_cast<size_t>(ab.num_subs()));

  // ambient S4 fusion: order-2 subgroups split into the transposition class
  // (size 2) and the class of the center (size 3)
  PCategory f = fusion_from_ambient(symmetric_group(4), 2);
  int zi = f.sub_index(center(f.full()));
  std::vector<size_t> order2_sizes;
  bool center_in_size3 = false;
  for (const auto& cls : iso_classes(f)) {
    if (f.subs[cls[0]].order() != 2) continue;
    order2_sizes.push_back(cls.size());
    if (std::find(cls.begin(), cls.end(), zi) != cls.end() && cls.size() == 3)
      center_in_size3 = true;
  }
  std::sort(order2_sizes.begin(), order2_sizes.end());
  CHECK(order2_sizes == std::vector<size_t>{2, 3});
  CHECK(center_in_size3);
}

TEST_CASE("seeding with the full automizer of the essential subgroup regenerates the S4 fusion") {
  PCategory f = fusion_from_ambient(symmetric_group(4), 2);
  auto ess = essential_subgroups(f);
  REQUIRE(ess.size() == 1);
  std::vector<Morphism> seeds(f.homs[ess[0]][ess[0]].begin(), f.homs[ess[0]][ess[0]].end());
  PCategory g = divisible_closure(f.group, 2, seeds);
  CHECK(g.fingerprint() == f.fingerprint());
}

TEST_CASE("hom cap aborts runaway closures") {
  Caps caps;
  caps.hom_cap = 13;  // the inner category of V4 already has 12 morphisms
  auto v4 = elementary_abelian_2(2);
  Subgroup a(v4, {0, 1});
  Subgroup b(v4, {0, 2});
  CHECK(throws_code(ErrorCode::HomSetCapExceeded,
                    [&] { divisible_closure(v4, 2, {make_morphism(a, b, {0, 2})}, caps); }));
}
