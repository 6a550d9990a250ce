#include "fuscat/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

namespace fuscat {

namespace {

void finalize(FiniteGroup& g) {
  const int n = g.order;
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0)
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }
  g.element_order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    g.element_order[a] = k;
  }
  if (g.root_label.empty()) {
    g.root_label.resize(n);
    std::iota(g.root_label.begin(), g.root_label.end(), 0);
  }
}

uint64_t table_hash(const FiniteGroup& g) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(g.order));
  for (int v : g.table) mix(static_cast<uint64_t>(v) + 1);
  return h;
}

}  // namespace

bool FiniteGroup::is_p_group(int p) const {
  int n = order;
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup::Subgroup(GroupPtr g, std::vector<int> elements)
    : parent(std::move(g)), elems(std::move(elements)) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

bool Subgroup::contains(int e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

int Subgroup::pos(int e) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), e);
  if (it == elems.end() || *it != e) return -1;
  return static_cast<int>(it - elems.begin());
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
}

FiniteGroup validate_table(std::vector<int> table, int order) {
  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  if (static_cast<long long>(g.table.size()) != 1ll * order * order)
    throw Error(ErrorCode::MalformedTable, "table is not square");
  for (size_t i = 0; i < g.table.size(); ++i)
    if (g.table[i] < 0 || g.table[i] >= order)
      throw Error(ErrorCode::MalformedTable,
                  "entry " + std::to_string(i / order) + "," + std::to_string(i % order) +
                      " out of range");

  int e = -1;
  for (int c = 0; c < order; ++c) {
    bool ident = true;
    for (int a = 0; a < order; ++a)
      if (g.mul(c, a) != a || g.mul(a, c) != a) {
        ident = false;
        break;
      }
    if (ident) {
      e = c;
      break;
    }
  }
  if (e < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  if (e != 0) {
    // relabel by swapping labels 0 and e
    std::vector<int> relabel(order);
    std::iota(relabel.begin(), relabel.end(), 0);
    relabel[0] = e;
    relabel[e] = 0;
    std::vector<int> nt(g.table.size());
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        nt[a * order + b] = relabel[g.table[relabel[a] * order + relabel[b]]];
    g.table = std::move(nt);
  }

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::NotAssociative,
                      "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");

  finalize(g);
  return g;
}

GroupPtr group_from_trusted_table(std::vector<int> table, int order) {
  auto g = std::make_shared<FiniteGroup>();
  g->order = order;
  g->table = std::move(table);
  finalize(*g);
  return g;
}

GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::MalformedTable, "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::MalformedTable, "row length != table size");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<FiniteGroup>(validate_table(std::move(flat), n));
}

GroupPtr from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                           const Caps& caps) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(ErrorCode::NotBijective, "generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw Error(ErrorCode::NotBijective, "generator is not a bijection");
      seen[v] = true;
    }
  }
  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  elems.push_back(ident);
  index[ident] = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gp : generators) {
      // left-multiply by each generator
      std::vector<int> prod(degree);
      for (int k = 0; k < degree; ++k) prod[k] = gp[elems[i][k]];
      if (!index.count(prod)) {
        if (static_cast<int>(elems.size()) >= caps.perm_closure_cap)
          throw Error(ErrorCode::OrderCapExceeded,
                      "permutation closure exceeds cap " + std::to_string(caps.perm_closure_cap));
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->table.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int k = 0; k < degree; ++k) prod[k] = elems[a][elems[b][k]];
      g->table[a * n + b] = index.at(prod);
    }
  g->perms = elems;
  finalize(*const_cast<FiniteGroup*>(g.get()));
  return g;
}

GroupPtr materialize(const Subgroup& s) {
  const auto& p = *s.parent;
  const int m = s.order();
  auto g = std::make_shared<FiniteGroup>();
  g->order = m;
  g->prime = p.prime;
  g->table.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = p.mul(s.elems[i], s.elems[j]);
      int pos = s.pos(prod);
      if (pos < 0) throw Error(ErrorCode::NotASubgroup, "set not closed under product");
      g->table[i * m + j] = pos;
    }
  g->root_label.resize(m);
  for (int i = 0; i < m; ++i) g->root_label[i] = p.root_label[s.elems[i]];
  finalize(*g);
  return g;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens) {
  std::set<int> have{0};
  std::vector<int> work{0};
  for (int x : gens)
    if (have.insert(x).second) work.push_back(x);
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      int prod = g->mul(work[i], work[j]);
      if (have.insert(prod).second) work.push_back(prod);
    }
  return Subgroup(g, std::vector<int>(have.begin(), have.end()));
}

namespace {

std::mutex g_subgroups_mutex;
std::map<uint64_t, std::vector<std::vector<int>>> g_subgroups_cache;

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int cap) {
  if (g->order > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "group order " + std::to_string(g->order) + " exceeds cap " + std::to_string(cap));
  const uint64_t key = table_hash(*g);
  {
    std::lock_guard<std::mutex> lock(g_subgroups_mutex);
    auto it = g_subgroups_cache.find(key);
    if (it != g_subgroups_cache.end()) {
      std::vector<Subgroup> out;
      out.reserve(it->second.size());
      for (const auto& e : it->second) out.emplace_back(g, e);
      return out;
    }
  }

  // breadth-first generator extension: grow each known subgroup by one element
  std::set<std::vector<int>> known;
  known.insert({0});
  std::vector<std::vector<int>> work{{0}};
  for (size_t i = 0; i < work.size(); ++i) {
    const auto base = work[i];
    Subgroup h(g, base);
    for (int x = 1; x < g->order; ++x) {
      if (h.contains(x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      Subgroup ext = generated_subgroup(g, gens);
      if (known.insert(ext.elems).second) work.push_back(ext.elems);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& e : known) out.emplace_back(g, e);
  std::sort(out.begin(), out.end());
  {
    std::lock_guard<std::mutex> lock(g_subgroups_mutex);
    auto& slot = g_subgroups_cache[key];
    slot.clear();
    for (const auto& s : out) slot.push_back(s.elems);
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const Subgroup& s, int cap) {
  if (s.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded, "subgroup order exceeds cap");
  // breadth-first extension restricted to the elements of s
  std::set<std::vector<int>> known;
  known.insert({0});
  std::vector<std::vector<int>> work{{0}};
  for (size_t i = 0; i < work.size(); ++i) {
    const auto base = work[i];
    Subgroup h(s.parent, base);
    for (int x : s.elems) {
      if (x == 0 || h.contains(x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      Subgroup ext = generated_subgroup(s.parent, gens);
      if (known.insert(ext.elems).second) work.push_back(ext.elems);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& e : known) out.emplace_back(s.parent, e);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_nested(const Subgroup& ambient, const Subgroup& q) {
  if (ambient.parent != q.parent || !q.subset_of(ambient))
    throw Error(ErrorCode::NotASubgroup, "Q is not contained in the ambient subgroup");
}

}  // namespace

Subgroup normalizer(const Subgroup& ambient, const Subgroup& q) {
  require_nested(ambient, q);
  const auto& g = *ambient.parent;
  std::vector<int> out;
  for (int x : ambient.elems) {
    bool ok = true;
    for (int a : q.elems)
      if (!q.contains(g.conj(x, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(ambient.parent, std::move(out));
}

Subgroup centralizer(const Subgroup& ambient, const Subgroup& q) {
  require_nested(ambient, q);
  const auto& g = *ambient.parent;
  std::vector<int> out;
  for (int x : ambient.elems) {
    bool ok = true;
    for (int a : q.elems)
      if (g.mul(x, a) != g.mul(a, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(ambient.parent, std::move(out));
}

Subgroup center(const Subgroup& q) { return centralizer(q, q); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(out));
  return Subgroup(a.parent, std::move(out));
}

Subgroup product_subgroup(const Subgroup& q, const Subgroup& n) {
  std::vector<int> gens = q.elems;
  gens.insert(gens.end(), n.elems.begin(), n.elems.end());
  return generated_subgroup(q.parent, gens);
}

bool is_normal_in(const Subgroup& h, const Subgroup& g) {
  if (!h.subset_of(g)) return false;
  const auto& grp = *g.parent;
  for (int x : g.elems)
    for (int a : h.elems)
      if (!h.contains(grp.conj(x, a))) return false;
  return true;
}

int p_part(int n, int p) {
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

Subgroup sylow_p_subgroup(const GroupPtr& g, int p) {
  const int target = p_part(g->order, p);
  Subgroup h = trivial_subgroup(g);
  if (target == 1) return h;
  // iterated normalizer extension from a p-element
  while (h.order() < target) {
    Subgroup n = normalizer(full_subgroup(g), h);
    bool grown = false;
    for (int x : n.elems) {
      if (h.contains(x)) continue;
      // replace x by its p-element power
      int ord = g->element_order[x];
      int coprime = ord / p_part(ord, p);
      int y = 0;
      for (int k = 0; k < coprime; ++k) y = g->mul(y, x);
      if (y == 0 || h.contains(y)) continue;
      std::vector<int> gens = h.elems;
      gens.push_back(y);
      Subgroup ext = generated_subgroup(g, gens);
      if (p_part(ext.order(), p) == ext.order()) {
        h = std::move(ext);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw Error(ErrorCode::NoInverse, "internal: Sylow extension stalled");  // unreachable
  }
  return h;
}

Subgroup o_p(const GroupPtr& g, int p) {
  // intersection of all Sylow p-subgroups = intersection of the conjugates of one
  Subgroup s = sylow_p_subgroup(g, p);
  Subgroup acc = s;
  for (int x = 0; x < g->order; ++x) {
    std::vector<int> conj;
    conj.reserve(s.elems.size());
    for (int a : s.elems) conj.push_back(g->conj(x, a));
    acc = intersect(acc, Subgroup(g, std::move(conj)));
    if (acc.order() == 1) break;
  }
  return acc;
}

std::vector<int> generating_sequence(const Subgroup& s) {
  const auto& g = *s.parent;
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(s.parent);
  while (cur.order() < s.order()) {
    int best = -1, best_ord = 0;
    for (int x : s.elems) {
      if (cur.contains(x)) continue;
      if (g.element_order[x] > best_ord) {
        best = x;
        best_ord = g.element_order[x];
      }
    }
    gens.push_back(best);
    std::vector<int> all = gens;
    cur = generated_subgroup(s.parent, all);
  }
  return gens;
}

}  // namespace fuscat
