#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "fuscat/verify.hpp"

namespace testutil {

using namespace fuscat;

// every subgroup by direct subset enumeration (order <= 16)
inline std::vector<std::vector<int>> brute_subgroups(const GroupPtr& g) {
  const int n = g->order;
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain the identity
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) elems.push_back(i);
    bool closed = true;
    for (int a : elems) {
      for (int b : elems)
        if (!(mask >> g->mul(a, b) & 1u)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// every automorphism by filtering all identity-fixing bijections (order <= 8)
inline std::vector<AutMap> brute_auts(const Subgroup& q) {
  const auto& g = *q.parent;
  std::vector<int> rest(q.elems.begin() + 1, q.elems.end());
  std::sort(rest.begin(), rest.end());
  std::vector<AutMap> out;
  do {
    AutMap img{0};
    img.insert(img.end(), rest.begin(), rest.end());
    bool hom = true;
    for (int i = 0; i < q.order() && hom; ++i)
      for (int j = 0; j < q.order(); ++j) {
        int prod = q.pos(g.mul(q.elems[i], q.elems[j]));
        if (g.mul(img[i], img[j]) != img[prod]) {
          hom = false;
          break;
        }
      }
    if (hom) out.push_back(std::move(img));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// a contains every morphism of b
inline bool contains_all(const PCategory& a, const PCategory& b) {
  for (int q = 0; q < b.num_subs(); ++q)
    for (int r = 0; r < b.num_subs(); ++r)
      for (const auto& m : b.homs[q][r])
        if (!a.contains(m)) return false;
  return true;
}

inline std::vector<int> all_subgroup_indices(const PCategory& f) {
  std::vector<int> out(f.num_subs());
  for (int i = 0; i < f.num_subs(); ++i) out[i] = i;
  return out;
}

// collect every morphism of f into one list (usable as closure seeds)
inline std::vector<Morphism> all_morphisms(const PCategory& f) {
  std::vector<Morphism> out;
  for (const auto& row : f.homs)
    for (const auto& hs : row) out.insert(out.end(), hs.begin(), hs.end());
  return out;
}

}  // namespace testutil
