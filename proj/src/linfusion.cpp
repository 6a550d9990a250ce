#include "fuscat/linfusion.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fuscat {

void FormalSum::add(const Morphism& m, long long c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

long long augmentation(const FormalSum& s) {
  long long total = 0;
  for (const auto& [m, c] : s.terms) total += c;
  return total;
}

FormalSum dimorphism(const Morphism& phi_prime, const Morphism& phi) {
  if (!(phi.dom == phi_prime.dom) || !(phi.cod == phi_prime.cod))
    throw Error(ErrorCode::DomainMismatch, "dimorphism terms must share domain and codomain");
  FormalSum s{phi.dom, phi.cod, {}};
  s.add(phi_prime, 1);
  s.add(phi, -1);
  return s;
}

FormalSum compose_right(const FormalSum& s, const Morphism& phi) {
  FormalSum out{phi.dom, s.cod, {}};
  for (const auto& [m, c] : s.terms) out.add(compose(m, phi), c);
  return out;
}

int ComponentStructure::vertex_index(const Morphism& m) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
  if (it == vertices.end() || !(*it == m)) return -1;
  return static_cast<int>(it - vertices.begin());
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ComponentStructure factorization_components(const PCategory& f, int q) {
  const int pi = f.full_index();
  if (q == pi) throw Error(ErrorCode::QNotProper, "Q must be a proper subgroup of P");
  ComponentStructure cs;
  cs.q = q;
  cs.vertices = f.homs[pi][q];  // already sorted
  const int nv = static_cast<int>(cs.vertices.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);

  const int qsize = f.subs[q].order();
  for (int r = 0; r < f.num_subs(); ++r) {
    if (f.subs[r].order() <= qsize) continue;
    for (const auto& mu : f.homs[r][q]) {
      // union the whole clique {psi ∘ mu : psi in F(P, R)}
      int first = -1;
      for (const auto& psi : f.homs[pi][r]) {
        int v = cs.vertex_index(compose(psi, mu));
        if (v < 0)
          throw Error(ErrorCode::NotContained, "category not composition-closed at F(P,Q)");
        if (first < 0)
          first = uf_find(parent, v);
        else
          parent[uf_find(parent, v)] = first = uf_find(parent, first);
      }
    }
  }

  cs.comp.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    int root = uf_find(parent, v);
    if (cs.comp[root] < 0) {
      cs.comp[root] = cs.ncomp++;
      cs.components.emplace_back();
    }
    cs.comp[v] = cs.comp[root];
    cs.components[cs.comp[v]].push_back(v);
  }
  return cs;
}

bool is_essential(const PCategory& f, int q) {
  return factorization_components(f, q).ncomp >= 2;
}

std::vector<int> essential_subgroups_serial(const PCategory& f) {
  std::vector<int> out;
  for (int q = 0; q < f.full_index(); ++q)
    if (is_essential(f, q)) out.push_back(q);
  return out;
}

std::vector<int> essential_subgroups(const PCategory& f) {
  const int n = f.full_index();
  std::vector<char> flag(n, 0);
#pragma omp parallel for schedule(dynamic)
  for (int q = 0; q < n; ++q) flag[q] = is_essential(f, q) ? 1 : 0;
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (flag[q]) out.push_back(q);
  return out;
}

bool is_reducible(const PCategory& f, const FormalSum& s) {
  if (augmentation(s) != 0)
    throw Error(ErrorCode::NotInKernel, "sum has nonzero augmentation");
  if (s.is_zero()) return true;
  int q = f.sub_index(s.dom);
  if (q < 0) throw Error(ErrorCode::NotASubgroup, "unknown domain subgroup");
  ComponentStructure cs = factorization_components(f, q);
  std::vector<long long> acc(cs.ncomp, 0);
  for (const auto& [m, c] : s.terms) {
    int v = cs.vertex_index(m);
    if (v < 0) throw Error(ErrorCode::NotContained, "term is not an F-morphism into P");
    acc[cs.comp[v]] += c;
  }
  return std::all_of(acc.begin(), acc.end(), [](long long x) { return x == 0; });
}

bool rf_lattice_oracle(const PCategory& f, int q, int cap) {
  const int pi = f.full_index();
  if (q == pi) throw Error(ErrorCode::QNotProper, "Q must be proper");
  const auto& vertices = f.homs[pi][q];
  const int nv = static_cast<int>(vertices.size());
  if (nv > cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "|F(P,Q)| = " + std::to_string(nv) + " exceeds oracle cap");
  auto vidx = [&](const Morphism& m) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    return static_cast<int>(it - vertices.begin());
  };

  IntMatrix rows;
  const int qsize = f.subs[q].order();
  for (int r = 0; r < f.num_subs(); ++r) {
    if (f.subs[r].order() <= qsize) continue;
    for (const auto& mu : f.homs[r][q]) {
      const auto& psis = f.homs[pi][r];
      if (psis.empty()) continue;
      int base = vidx(compose(psis[0], mu));
      for (size_t k = 1; k < psis.size(); ++k) {
        IntRow row(nv, 0);
        row[base] -= 1;
        row[vidx(compose(psis[k], mu))] += 1;
        rows.push_back(std::move(row));
      }
    }
  }
  return same_lattice(rows, augmentation_kernel_basis(nv));
}

bool is_generator_family(const PCategory& f,
                         const std::map<int, std::vector<FormalSum>>& family) {
  const int pi = f.full_index();
  for (const auto& [r, sums] : family) {
    for (const auto& a : sums) {
      if (augmentation(a) != 0)
        throw Error(ErrorCode::NotInKernel, "family element has nonzero augmentation");
      if (!(a.cod == f.full()) || !(f.sub_index(a.dom) == r))
        throw Error(ErrorCode::NotInKernel, "family element not in w_F(Q)");
      for (const auto& [m, c] : a.terms)
        if (!f.contains(m))
          throw Error(ErrorCode::NotInKernel, "family term is not an F-morphism");
    }
  }

  for (int q = 0; q < pi; ++q) {
    const auto& vertices = f.homs[pi][q];
    const int nv = static_cast<int>(vertices.size());
    auto vidx = [&](const Morphism& m) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
      return static_cast<int>(it - vertices.begin());
    };
    IntMatrix rows;
    const int qsize = f.subs[q].order();
    for (int r = 0; r < f.num_subs(); ++r) {
      if (f.subs[r].order() < qsize) continue;
      auto it = family.find(r);
      if (it == family.end()) continue;
      for (const auto& phi : f.homs[r][q]) {
        for (const auto& a : it->second) {
          IntRow row(nv, 0);
          for (const auto& [m, c] : a.terms) row[vidx(compose(m, phi))] += c;
          rows.push_back(std::move(row));
        }
      }
    }
    if (!same_lattice(rows, augmentation_kernel_basis(nv))) return false;
  }
  return true;
}

namespace {

Morphism link_composite(const ChainLink& l, bool primed) {
  return compose(l.mu, compose(primed ? l.phi_prime : l.phi, l.nu));
}

}  // namespace

FormalSum chain_to_sum(const std::vector<ChainLink>& links, const std::vector<int>& sigma) {
  if (sigma.empty()) throw Error(ErrorCode::ChainBroken, "sigma is empty");
  std::set<int> used(sigma.begin(), sigma.end());
  if (used.size() != sigma.size())
    throw Error(ErrorCode::ChainBroken, "sigma is not injective");
  for (int i : sigma)
    if (i < 0 || i >= static_cast<int>(links.size()))
      throw Error(ErrorCode::ChainBroken, "sigma index out of range");

  Morphism phi = link_composite(links[sigma[0]], false);
  for (size_t l = 1; l < sigma.size(); ++l) {
    Morphism lhs = link_composite(links[sigma[l - 1]], true);
    Morphism rhs = link_composite(links[sigma[l]], false);
    if (!(lhs == rhs))
      throw Error(ErrorCode::ChainBroken,
                  "middle equality fails at position " + std::to_string(l));
  }
  Morphism phi_prime = link_composite(links[sigma.back()], true);

  FormalSum out{phi.dom, phi.cod, {}};
  out.add(phi_prime, 1);
  out.add(phi, -1);
  return out;
}

namespace {

bool chain_dfs(const std::vector<ChainLink>& links, const Morphism& current,
               const Morphism& goal, std::vector<char>& used, std::vector<int>& order) {
  if (!order.empty() && current == goal) return true;
  for (size_t i = 0; i < links.size(); ++i) {
    if (used[i]) continue;
    Morphism lo = link_composite(links[i], false);
    if (!(lo == current)) continue;
    used[i] = 1;
    order.push_back(static_cast<int>(i));
    if (chain_dfs(links, link_composite(links[i], true), goal, used, order)) return true;
    order.pop_back();
    used[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> sum_to_chain(const FormalSum& s,
                                             const std::vector<ChainLink>& links) {
  if (s.is_zero()) return std::vector<int>{};
  if (s.terms.size() != 2) return std::nullopt;
  const Morphism* phi = nullptr;
  const Morphism* phi_prime = nullptr;
  for (const auto& [m, c] : s.terms) {
    if (c == 1)
      phi_prime = &m;
    else if (c == -1)
      phi = &m;
  }
  if (!phi || !phi_prime) return std::nullopt;
  std::vector<char> used(links.size(), 0);
  std::vector<int> order;
  if (chain_dfs(links, *phi, *phi_prime, used, order)) return order;
  return std::nullopt;
}

AlperinChain alperin_decompose(const PCategory& f, const Morphism& psi) {
  const int pi = f.full_index();
  const Subgroup& p = f.full();
  if (!(psi.cod == p) || !f.contains(psi))
    throw Error(ErrorCode::NotContained, "psi must lie in F(P, R)");
  const Subgroup& r_sub = psi.dom;
  const int ri = f.sub_index(r_sub);
  Morphism start = inclusion_morphism(r_sub, p);

  if (psi == start) {
    AlperinChain chain;
    chain.links.push_back(AlperinLink{p, identity_morphism(p), start});
    chain.target = psi;
    return chain;
  }

  std::vector<int> through = essential_subgroups_serial(f);
  through.push_back(pi);

  const auto& vertices = f.homs[pi][ri];
  auto vidx = [&](const Morphism& m) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    if (it == vertices.end() || !(*it == m))
      throw Error(ErrorCode::NotContained, "category not closed at F(P,R)");
    return static_cast<int>(it - vertices.begin());
  };

  struct Pred {
    int from = -1;
    int u = -1;
    Morphism sigma;
  };
  std::vector<Pred> pred(vertices.size());
  std::vector<char> seen(vertices.size(), 0);
  const int start_v = vidx(start);
  const int goal_v = vidx(psi);
  std::queue<int> bfs;
  bfs.push(start_v);
  seen[start_v] = 1;
  while (!bfs.empty() && !seen[goal_v]) {
    const int cur = bfs.front();
    bfs.pop();
    const Morphism& chi = vertices[cur];
    std::vector<int> chi_image = chi.image_set();
    for (int u : through) {
      const Subgroup& usub = f.subs[u];
      if (!std::includes(usub.elems.begin(), usub.elems.end(), chi_image.begin(),
                         chi_image.end()))
        continue;
      Morphism nu{r_sub, usub, chi.img};
      if (!f.contains(nu)) continue;  // divisibility gives this for divisible F
      for (const auto& sigma : f.homs[u][u]) {
        Morphism next{r_sub, p, {}};
        next.img.resize(r_sub.order());
        for (int i = 0; i < r_sub.order(); ++i) next.img[i] = sigma.img[usub.pos(nu.img[i])];
        int v = vidx(next);
        if (!seen[v]) {
          seen[v] = 1;
          pred[v] = Pred{cur, u, sigma};
          bfs.push(v);
          if (v == goal_v) break;
        }
      }
      if (seen[goal_v]) break;
    }
  }
  if (!seen[goal_v])
    throw Error(ErrorCode::NotAlperin,
                "morphism not reachable through essential subgroups; the Alperin condition fails");

  // reconstruct the edge sequence, then rebuild the links forward
  std::vector<std::pair<int, Morphism>> steps;  // (u, sigma) from start to goal
  for (int v = goal_v; v != start_v; v = pred[v].from)
    steps.emplace_back(pred[v].u, pred[v].sigma);
  std::reverse(steps.begin(), steps.end());

  AlperinChain chain;
  chain.target = psi;
  Morphism chi = start;
  for (const auto& [u, sigma] : steps) {
    const Subgroup& usub = f.subs[u];
    Morphism nu{r_sub, usub, chi.img};
    chain.links.push_back(AlperinLink{usub, sigma, nu});
    std::vector<int> img(r_sub.order());
    for (int i = 0; i < r_sub.order(); ++i) img[i] = sigma.img[usub.pos(nu.img[i])];
    chi = Morphism{r_sub, p, std::move(img)};
  }
  return chain;
}

bool verify_alperin_chain(const PCategory& f, const AlperinChain& chain, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (chain.links.empty()) return fail("empty chain");
  const Subgroup& p = f.full();
  const Subgroup& r = chain.target.dom;
  std::vector<int> essentials = essential_subgroups_serial(f);

  for (size_t i = 0; i < chain.links.size(); ++i) {
    const auto& link = chain.links[i];
    int u = f.sub_index(link.u);
    if (u < 0) return fail("link subgroup unknown");
    if (!(link.u == p) &&
        !std::binary_search(essentials.begin(), essentials.end(), u))
      return fail("link subgroup is neither essential nor P");
    if (!f.contains(link.sigma) || !(link.sigma.dom == link.u) || !(link.sigma.cod == link.u))
      return fail("sigma not in F(U)");
    if (!f.contains(link.nu) || !(link.nu.dom == r) || !(link.nu.cod == link.u))
      return fail("nu not in F(U, R)");
  }

  Morphism expected = inclusion_morphism(r, p);
  for (size_t i = 0; i < chain.links.size(); ++i) {
    const auto& link = chain.links[i];
    Morphism lifted = compose(inclusion_morphism(link.u, p), link.nu);
    if (!(lifted == expected))
      return fail("chain equation fails entering link " + std::to_string(i));
    expected = compose(inclusion_morphism(link.u, p), compose(link.sigma, link.nu));
  }
  if (!(expected == chain.target)) return fail("final chain equation fails");
  return true;
}

}  // namespace fuscat
