#include "fuscat/aut.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fuscat {

AutMap identity_aut(const Subgroup& q) { return q.elems; }

AutMap conjugation_aut(const Subgroup& q, int x) {
  const auto& g = *q.parent;
  AutMap m(q.order());
  for (int i = 0; i < q.order(); ++i) {
    int img = g.conj(x, q.elems[i]);
    if (!q.contains(img))
      throw Error(ErrorCode::NotASubgroup, "conjugating element does not normalize Q");
    m[i] = img;
  }
  return m;
}

AutMap compose_aut(const Subgroup& q, const AutMap& f, const AutMap& g) {
  AutMap m(q.order());
  for (int i = 0; i < q.order(); ++i) m[i] = f[q.pos(g[i])];
  return m;
}

AutMap invert_aut(const Subgroup& q, const AutMap& f) {
  AutMap m(q.order());
  for (int i = 0; i < q.order(); ++i) m[q.pos(f[i])] = q.elems[i];
  return m;
}

bool is_automorphism(const Subgroup& q, const AutMap& f) {
  const auto& g = *q.parent;
  if (static_cast<int>(f.size()) != q.order()) return false;
  std::set<int> image;
  for (int v : f) {
    if (!q.contains(v)) return false;
    image.insert(v);
  }
  if (static_cast<int>(image.size()) != q.order()) return false;
  for (int i = 0; i < q.order(); ++i)
    for (int j = 0; j < q.order(); ++j) {
      int prod = g.mul(q.elems[i], q.elems[j]);
      if (f[q.pos(prod)] != g.mul(f[i], f[j])) return false;
    }
  return true;
}

int AutGroup::index_of(const AutMap& m) const {
  auto it = std::lower_bound(maps.begin() + 1, maps.end(), m);  // maps[1..] sorted
  if (it != maps.end() && *it == m) return static_cast<int>(it - maps.begin());
  if (maps[0] == m) return 0;
  return -1;
}

AutGroup group_from_maps(const Subgroup& q, std::vector<AutMap> maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  // identity first, remainder sorted (kept sorted for index_of)
  AutMap id = identity_aut(q);
  auto it = std::find(maps.begin(), maps.end(), id);
  if (it == maps.end()) throw Error(ErrorCode::KNotClosed, "map set lacks the identity");
  std::rotate(maps.begin(), it, it + 1);

  std::map<AutMap, int> index;
  for (size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<int>(i);

  const int n = static_cast<int>(maps.size());
  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      AutMap prod = compose_aut(q, maps[a], maps[b]);
      auto pit = index.find(prod);
      if (pit == index.end())
        throw Error(ErrorCode::KNotClosed, "map set not closed under composition");
      table[a * n + b] = pit->second;
    }
  GroupPtr abstract = group_from_trusted_table(std::move(table), n);
  const_cast<FiniteGroup*>(abstract.get())->prime = q.parent->prime;

  AutGroup out;
  out.q = q;
  out.maps = std::move(maps);
  out.abstract_group = abstract;
  std::set<int> inner;
  for (int x : q.elems) inner.insert(index.at(conjugation_aut(q, x)));
  out.inner.assign(inner.begin(), inner.end());
  return out;
}

namespace {

// DFS assignment of generator images, extending the partial map by closure.
void aut_search(const Subgroup& q, const std::vector<int>& gens, size_t level,
                std::map<int, int>& partial, std::vector<AutMap>& found) {
  const auto& g = *q.parent;
  if (level == gens.size()) {
    if (partial.size() != q.elems.size()) return;  // not surjective on Q
    AutMap m(q.order());
    std::set<int> image;
    for (int i = 0; i < q.order(); ++i) {
      auto it = partial.find(q.elems[i]);
      if (it == partial.end()) return;
      m[i] = it->second;
      image.insert(it->second);
    }
    if (static_cast<int>(image.size()) == q.order()) found.push_back(m);
    return;
  }
  int gen = gens[level];
  for (int cand : q.elems) {
    if (g.element_order[cand] != g.element_order[gen]) continue;
    // extend the partial homomorphism by gen -> cand and close under products
    std::map<int, int> ext = partial;
    auto set_pair = [&ext](int a, int b) {
      auto it = ext.find(a);
      if (it != ext.end()) return it->second == b;
      ext[a] = b;
      return true;
    };
    if (!set_pair(gen, cand)) continue;
    bool ok = true;
    bool changed = true;
    while (ok && changed) {
      changed = false;
      std::vector<std::pair<int, int>> pairs(ext.begin(), ext.end());
      for (const auto& [a, fa] : pairs) {
        for (const auto& [b, fb] : pairs) {
          size_t before = ext.size();
          if (!set_pair(g.mul(a, b), g.mul(fa, fb))) {
            ok = false;
            break;
          }
          if (ext.size() != before) changed = true;
        }
        if (!ok) break;
      }
    }
    if (!ok) continue;
    // injectivity on the closed part
    std::set<int> vals;
    for (const auto& [a, fa] : ext) vals.insert(fa);
    if (vals.size() != ext.size()) continue;
    aut_search(q, gens, level + 1, ext, found);
  }
}

}  // namespace

AutGroup compute_aut(const Subgroup& q, int cap) {
  if (q.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded, "subgroup too large for compute_aut");
  std::vector<int> gens = generating_sequence(q);
  std::vector<AutMap> found;
  if (gens.empty()) {
    found.push_back(identity_aut(q));
  } else {
    std::map<int, int> partial{{0, 0}};
    aut_search(q, gens, 0, partial, found);
  }
  return group_from_maps(q, std::move(found));
}

std::vector<std::vector<AutMap>> subgroups_of_aut(const AutGroup& a, int cap) {
  if (a.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "automorphism group order " + std::to_string(a.order()) + " exceeds cap " +
                    std::to_string(cap));
  auto subs = all_subgroups(a.abstract_group, std::max(cap, a.abstract_group->order));
  std::vector<std::vector<AutMap>> out;
  out.reserve(subs.size());
  for (const auto& s : subs) {
    std::vector<AutMap> maps;
    maps.reserve(s.elems.size());
    for (int e : s.elems) maps.push_back(a.maps[e]);
    std::sort(maps.begin(), maps.end());
    out.push_back(std::move(maps));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

bool is_aut_subgroup(const Subgroup& q, const std::vector<AutMap>& k) {
  if (k.empty()) return false;
  std::set<AutMap> set(k.begin(), k.end());
  if (!set.count(identity_aut(q))) return false;
  for (const auto& f : k) {
    if (!is_automorphism(q, f)) return false;
    if (!set.count(invert_aut(q, f))) return false;
    for (const auto& g : k)
      if (!set.count(compose_aut(q, f, g))) return false;
  }
  return true;
}

Subgroup k_normalizer(const Subgroup& p, const Subgroup& q, const std::vector<AutMap>& k) {
  if (!is_aut_subgroup(q, k))
    throw Error(ErrorCode::KNotClosed, "K is not a subgroup of Aut(Q)");
  Subgroup n = normalizer(p, q);
  std::set<AutMap> kset(k.begin(), k.end());
  std::vector<int> out;
  for (int x : n.elems)
    if (kset.count(conjugation_aut(q, x))) out.push_back(x);
  return Subgroup(p.parent, std::move(out));
}

std::vector<AutMap> transporter_image(const Subgroup& r, const Subgroup& q) {
  std::set<AutMap> maps;
  Subgroup nr = normalizer(r, q);
  for (int x : nr.elems) maps.insert(conjugation_aut(q, x));
  return std::vector<AutMap>(maps.begin(), maps.end());
}

std::vector<AutMap> o_p_of_aut(const AutGroup& a, int p) {
  Subgroup core = o_p(a.abstract_group, p);
  std::vector<AutMap> out;
  out.reserve(core.elems.size());
  for (int e : core.elems) out.push_back(a.maps[e]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fuscat
