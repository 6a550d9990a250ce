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

}  // namespace

TEST_CASE("cayley table construction") {
  auto triv = from_cayley_table({{0}});
  CHECK(triv->order == 1);

  auto c4 = from_cayley_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  CHECK(c4->element_order == std::vector<int>{1, 4, 2, 4});
  CHECK(c4->inv(1) == 3);

  // identity sitting away from index 0 gets relocated
  auto c2 = from_cayley_table({{1, 0}, {0, 1}});
  CHECK(c2->order == 2);
  CHECK(c2->mul(0, 0) == 0);
  CHECK(c2->element_order == std::vector<int>{1, 2});
}

TEST_CASE("cayley table rejection") {
  CHECK(throws_code(ErrorCode::MalformedTable, [] { from_cayley_table({{0, 1}, {1}}); }));
  CHECK(throws_code(ErrorCode::MalformedTable, [] { from_cayley_table({{0, 5}, {1, 0}}); }));
  CHECK(throws_code(ErrorCode::NoIdentity, [] { from_cayley_table({{0, 0}, {0, 0}}); }));
  // latin square with identity but an involution in a 5-element quasigroup:
  // cannot be a group, so associativity must fail
  CHECK(throws_code(ErrorCode::NotAssociative, [] {
    from_cayley_table({{0, 1, 2, 3, 4},
                       {1, 0, 3, 4, 2},
                       {2, 3, 4, 0, 1},
                       {3, 4, 1, 2, 0},
                       {4, 2, 0, 1, 3}});
  }));
}

TEST_CASE("permutation group construction") {
  auto c2 = from_permutations(3, {{1, 0, 2}});
  CHECK(c2->order == 2);

  auto d8 = from_permutations(4, {{1, 2, 3, 0}, {2, 1, 0, 3}});
  CHECK(d8->order == 8);

  auto a4 = from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  CHECK(a4->order == 12);

  CHECK(throws_code(ErrorCode::NotBijective, [] { from_permutations(3, {{0, 0, 1}}); }));
  CHECK(throws_code(ErrorCode::NotBijective, [] { from_permutations(3, {{0, 1}}); }));
}

TEST_CASE("subgroup enumeration against subset oracle") {
  for (const GroupPtr& g : {cyclic_group(2), elementary_abelian_2(2), cyclic_group(8),
                            dihedral_group(4), quaternion_group()}) {
    auto subs = all_subgroups(g);
    auto oracle = brute_subgroups(g);
    REQUIRE(subs.size() == oracle.size());
    for (size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].elems == oracle[i]);
  }
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);
  CHECK(all_subgroups(elementary_abelian_2(2)).size() == 5);
  CHECK(all_subgroups(quaternion_group()).size() == 6);
}

TEST_CASE("lagrange property") {
  for (const GroupPtr& g : {dihedral_group(4), quaternion_group(), symmetric_group(4),
                            semidirect_c3_c4()}) {
    for (const auto& s : all_subgroups(g)) CHECK(g->order % s.order() == 0);
  }
}

TEST_CASE("normalizer centralizer center") {
  auto d8 = dihedral_group(4);
  Subgroup p = full_subgroup(d8);
  Subgroup c4(d8, {0, 1, 2, 3});

  CHECK(centralizer(p, c4).elems == c4.elems);
  CHECK(normalizer(p, c4).elems == p.elems);  // index-2 subgroups are normal
  CHECK(center(full_subgroup(quaternion_group())).order() == 2);
  CHECK(center(p).elems == std::vector<int>{0, 2});

  // direct-definition oracle over every subgroup of D8
  for (const auto& q : all_subgroups(d8)) {
    std::vector<int> norm, cent;
    for (int x = 0; x < d8->order; ++x) {
      bool stable = true, fixes = true;
      for (int u : q.elems) {
        int c = d8->conj(x, u);
        if (!q.contains(c)) stable = false;
        if (c != u) fixes = false;
      }
      if (stable) norm.push_back(x);
      if (fixes) cent.push_back(x);
    }
    CHECK(normalizer(p, q).elems == norm);
    CHECK(centralizer(p, q).elems == cent);
  }
}

TEST_CASE("k-normalizer") {
  auto d8 = dihedral_group(4);
  Subgroup p = full_subgroup(d8);
  Subgroup c4(d8, {0, 1, 2, 3});

  auto full_k = compute_aut(c4).maps;
  CHECK(k_normalizer(p, c4, full_k).elems == normalizer(p, c4).elems);
  CHECK(k_normalizer(p, c4, full_k).order() == 8);
  CHECK(k_normalizer(p, c4, {identity_aut(c4)}).elems == centralizer(p, c4).elems);

  // monotone in K
  for (const auto& q : all_subgroups(d8)) {
    AutGroup aut = compute_aut(q);
    std::vector<AutMap> inner;
    for (int i : aut.inner) inner.push_back(aut.maps[i]);
    Subgroup n1 = k_normalizer(p, q, {identity_aut(q)});
    Subgroup n2 = k_normalizer(p, q, inner);
    Subgroup n3 = k_normalizer(p, q, aut.maps);
    CHECK(n1.subset_of(n2));
    CHECK(n2.subset_of(n3));
    CHECK(n3.elems == normalizer(p, q).elems);
  }
}

TEST_CASE("automorphism groups against bijection oracle") {
  auto v4 = elementary_abelian_2(2);
  CHECK(compute_aut(full_subgroup(cyclic_group(2))).order() == 1);
  CHECK(compute_aut(full_subgroup(cyclic_group(4))).order() == 2);
  CHECK(compute_aut(full_subgroup(v4)).order() == 6);

  for (const GroupPtr& g : {cyclic_group(4), v4, dihedral_group(4), quaternion_group()}) {
    for (const auto& q : all_subgroups(g)) {
      AutGroup aut = compute_aut(q);
      std::vector<AutMap> got = aut.maps;
      std::sort(got.begin(), got.end());
      CHECK(got == brute_auts(q));
      // automorphisms preserve element orders
      for (const auto& m : aut.maps)
        for (int i = 0; i < q.order(); ++i)
          CHECK(g->element_order[m[i]] == g->element_order[q.elems[i]]);
      // |F_Q(Q)| = |Q| / |Z(Q)|
      CHECK(static_cast<int>(aut.inner.size()) == q.order() / center(q).order());
    }
  }
}

TEST_CASE("subgroups of an automorphism group") {
  CHECK(subgroups_of_aut(compute_aut(full_subgroup(cyclic_group(2)))).size() == 1);
  CHECK(subgroups_of_aut(compute_aut(full_subgroup(cyclic_group(4)))).size() == 2);
  // Aut(V4) has order 6 and exactly 6 subgroups
  auto fams = subgroups_of_aut(compute_aut(full_subgroup(elementary_abelian_2(2))));
  CHECK(fams.size() == 6);
  for (const auto& k : fams) CHECK(is_aut_subgroup(full_subgroup(elementary_abelian_2(2)), k));
}

TEST_CASE("transporter image") {
  auto d8 = dihedral_group(4);
  Subgroup p = full_subgroup(d8);
  Subgroup v(d8, {0, 2, 4, 6});
  CHECK(transporter_image(p, v).size() == 2);
  // F_Q(Q) for abelian Q is trivial
  Subgroup c4(d8, {0, 1, 2, 3});
  CHECK(transporter_image(c4, c4).size() == 1);
  // F_P(P) is the inner automorphism group
  CHECK(transporter_image(p, p).size() == 4);
}

TEST_CASE("p-core and sylow subgroups") {
  auto s3 = symmetric_group(3);
  CHECK(o_p(s3, 2).order() == 1);
  CHECK(o_p(s3, 3).order() == 3);
  CHECK(o_p(dihedral_group(4), 2).order() == 8);  // p-group is its own core

  auto s4 = symmetric_group(4);
  CHECK(sylow_p_subgroup(s4, 2).order() == 8);
  CHECK(sylow_p_subgroup(s4, 3).order() == 3);
  CHECK(sylow_p_subgroup(s3, 5).order() == 1);  // coprime prime
  CHECK(p_part(24, 2) == 8);
  CHECK(p_part(24, 3) == 3);

  // a Sylow subgroup really is a p-subgroup of the right order
  for (int prime : {2, 3}) {
    Subgroup s = sylow_p_subgroup(semidirect_c3_c4(), prime);
    CHECK(s.order() == p_part(12, prime));
    CHECK(materialize(s)->is_p_group(prime));
  }
}

TEST_CASE("generated subgroups and materialization") {
  auto d8 = dihedral_group(4);
  CHECK(generated_subgroup(d8, {1, 4}).order() == 8);
  CHECK(generated_subgroup(d8, {2}).elems == std::vector<int>{0, 2});

  Subgroup c4(d8, {0, 1, 2, 3});
  auto gens = generating_sequence(c4);
  CHECK(generated_subgroup(d8, gens).elems == c4.elems);

  GroupPtr local = materialize(c4);
  CHECK(local->order == 4);
  CHECK(local->root_label == std::vector<int>{0, 1, 2, 3});
  CHECK(local->element_order == std::vector<int>{1, 4, 2, 4});
}
