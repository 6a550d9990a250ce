#include "fuscat/pcategory.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace fuscat {

namespace {

struct MKey {
  int dom, cod;
  std::vector<int> img;
  friend bool operator<(const MKey& a, const MKey& b) {
    if (a.dom != b.dom) return a.dom < b.dom;
    if (a.cod != b.cod) return a.cod < b.cod;
    return a.img < b.img;
  }
};

uint64_t mask_of(const std::vector<int>& elems) {
  uint64_t m = 0;
  for (int e : elems) m |= 1ull << e;
  return m;
}

PCategory assemble(const GroupPtr& g, int p, const std::vector<Subgroup>& subs,
                   const std::set<MKey>& morphs) {
  PCategory f;
  f.group = g;
  f.p = p;
  f.subs = subs;
  const int n = f.num_subs();
  f.homs.assign(n, std::vector<std::vector<Morphism>>(n));
  for (const auto& m : morphs)
    f.homs[m.cod][m.dom].push_back(Morphism{subs[m.dom], subs[m.cod], m.img});
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r) std::sort(f.homs[q][r].begin(), f.homs[q][r].end());
  return f;
}

}  // namespace

std::string DivisibilityWitness::describe() const {
  std::ostringstream os;
  os << "phi: R" << r << "->Q" << q << ", psi: T" << t << "->R" << r
     << " with phi∘psi in F but psi missing";
  return os.str();
}

void PCategory::build_index() const {
  if (!index_.empty() || subs.empty()) return;
  for (int i = 0; i < num_subs(); ++i) index_[subs[i].elems] = i;
}

int PCategory::sub_index(const std::vector<int>& elems) const {
  build_index();
  auto it = index_.find(elems);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<Morphism>& PCategory::hom(const Subgroup& q, const Subgroup& r) const {
  int qi = sub_index(q), ri = sub_index(r);
  if (qi < 0 || ri < 0) throw Error(ErrorCode::NotASubgroup, "hom: unknown subgroup");
  return homs[qi][ri];
}

bool PCategory::contains(const Morphism& m) const {
  int qi = sub_index(m.cod), ri = sub_index(m.dom);
  if (qi < 0 || ri < 0) return false;
  const auto& hs = homs[qi][ri];
  return std::binary_search(hs.begin(), hs.end(), m);
}

std::vector<AutMap> PCategory::aut_maps(int q) const {
  std::vector<AutMap> out;
  for (const auto& m : homs[q][q]) out.push_back(m.img);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AutMap> PCategory::inner_maps(int q) const {
  std::set<AutMap> maps;
  for (int x : subs[q].elems) maps.insert(conjugation_aut(subs[q], x));
  return std::vector<AutMap>(maps.begin(), maps.end());
}

long long PCategory::total_morphisms() const {
  long long total = 0;
  for (const auto& row : homs)
    for (const auto& hs : row) total += static_cast<long long>(hs.size());
  return total;
}

std::string PCategory::fingerprint() const {
  std::vector<std::string> entries;
  for (const auto& row : homs)
    for (const auto& hs : row)
      for (const auto& m : hs) {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < m.dom.order(); ++i) {
          if (i) os << ",";
          os << group->root_label[m.dom.elems[i]] << ">" << group->root_label[m.img[i]];
        }
        os << "]cod[";
        std::vector<int> cr;
        for (int e : m.cod.elems) cr.push_back(group->root_label[e]);
        std::sort(cr.begin(), cr.end());
        for (size_t i = 0; i < cr.size(); ++i) {
          if (i) os << ",";
          os << cr[i];
        }
        os << "]";
        entries.push_back(os.str());
      }
  std::sort(entries.begin(), entries.end());
  std::string out;
  for (const auto& e : entries) {
    out += e;
    out += ";";
  }
  return out;
}

PCategory inner_category(const GroupPtr& p_group, int p, const Caps& caps) {
  if (!p_group->is_p_group(p))
    throw Error(ErrorCode::NotAPGroup, "group order is not a power of p");
  auto subs = all_subgroups(p_group, caps.subgroup_cap);
  std::set<MKey> morphs;
  const int n = static_cast<int>(subs.size());
  std::vector<uint64_t> masks(n);
  for (int i = 0; i < n; ++i) masks[i] = mask_of(subs[i].elems);
  for (int ri = 0; ri < n; ++ri) {
    for (int x = 0; x < p_group->order; ++x) {
      std::vector<int> img(subs[ri].order());
      for (int i = 0; i < subs[ri].order(); ++i) img[i] = p_group->conj(x, subs[ri].elems[i]);
      uint64_t im = mask_of(img);
      for (int qi = 0; qi < n; ++qi)
        if ((im & ~masks[qi]) == 0) morphs.insert(MKey{ri, qi, img});
    }
  }
  PCategory f = assemble(p_group, p, subs, morphs);
  f.divisible_verified = true;
  return f;
}

PCategory divisible_closure(const GroupPtr& p_group, int p, const std::vector<Morphism>& seeds,
                            const Caps& caps) {
  PCategory base = inner_category(p_group, p, caps);
  const auto& subs = base.subs;
  const int n = static_cast<int>(subs.size());
  std::vector<uint64_t> masks(n);
  for (int i = 0; i < n; ++i) masks[i] = mask_of(subs[i].elems);

  std::set<MKey> seen;
  std::vector<MKey> morphs;
  std::vector<std::vector<int>> by_dom(n), by_cod(n);
  std::deque<int> work;

  auto push = [&](MKey m) {
    auto [it, fresh] = seen.insert(m);
    if (!fresh) return;
    if (static_cast<long long>(morphs.size()) >= caps.hom_cap)
      throw Error(ErrorCode::HomSetCapExceeded,
                  "closure exceeds hom cap " + std::to_string(caps.hom_cap));
    int id = static_cast<int>(morphs.size());
    morphs.push_back(std::move(m));
    by_dom[morphs[id].dom].push_back(id);
    by_cod[morphs[id].cod].push_back(id);
    work.push_back(id);
  };

  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r)
      for (const auto& m : base.homs[q][r]) push(MKey{r, q, m.img});
  for (const auto& s : seeds) {
    Morphism checked = make_morphism(s.dom, s.cod, s.img);  // revalidate
    int d = base.sub_index(checked.dom), c = base.sub_index(checked.cod);
    if (d < 0 || c < 0) throw Error(ErrorCode::NotASubgroup, "seed between unknown subgroups");
    push(MKey{d, c, checked.img});
  }

  while (!work.empty()) {
    const int id = work.front();
    work.pop_front();
    const MKey m = morphs[id];  // copy: morphs may reallocate
    const Subgroup& dom = subs[m.dom];

    // (b) domain restriction
    for (int t = 0; t < n; ++t) {
      if (t == m.dom || (masks[t] & ~masks[m.dom]) != 0) continue;
      std::vector<int> img(subs[t].order());
      for (int i = 0; i < subs[t].order(); ++i) img[i] = m.img[dom.pos(subs[t].elems[i])];
      push(MKey{t, m.cod, std::move(img)});
    }
    // (c) corestriction / codomain extension
    uint64_t im = mask_of(m.img);
    for (int c = 0; c < n; ++c)
      if (c != m.cod && (im & ~masks[c]) == 0) push(MKey{m.dom, c, m.img});
    // (d) inverse of an isomorphism
    if (im == masks[m.cod]) {
      const Subgroup& cod = subs[m.cod];
      std::vector<int> inv(cod.order());
      for (int i = 0; i < dom.order(); ++i) inv[cod.pos(m.img[i])] = dom.elems[i];
      push(MKey{m.cod, m.dom, std::move(inv)});
    }
    // (a) composition, both sides; snapshot the index lists because push may
    // append to them (later entries still meet m when they leave the queue)
    const std::vector<int> left = by_dom[m.cod];
    for (int other : left) {
      const MKey phi = morphs[other];  // copy: morphs may reallocate
      std::vector<int> img(dom.order());
      const Subgroup& pd = subs[phi.dom];
      for (int i = 0; i < dom.order(); ++i) img[i] = phi.img[pd.pos(m.img[i])];
      push(MKey{m.dom, phi.cod, std::move(img)});
    }
    const std::vector<int> right = by_cod[m.dom];
    for (int other : right) {
      const MKey psi = morphs[other];
      std::vector<int> img(subs[psi.dom].order());
      for (size_t i = 0; i < img.size(); ++i) img[i] = m.img[dom.pos(psi.img[i])];
      push(MKey{psi.dom, m.cod, std::move(img)});
    }
  }

  PCategory f = assemble(p_group, p, subs, seen);
  f.divisible_verified = true;
  return f;
}

std::optional<DivisibilityWitness> divisibility_witness(const PCategory& f) {
  const int n = f.num_subs();
  for (int q = 0; q < n; ++q) {
    for (int r = 0; r < n; ++r) {
      for (const auto& phi : f.homs[q][r]) {
        // position of each image value within phi
        std::vector<std::pair<int, int>> img_pos;  // (image value, domain element)
        for (int i = 0; i < phi.dom.order(); ++i)
          img_pos.emplace_back(phi.img[i], phi.dom.elems[i]);
        std::sort(img_pos.begin(), img_pos.end());
        uint64_t phi_mask = 0;
        for (auto& [v, u] : img_pos) phi_mask |= 1ull << v;

        for (int t = 0; t < n; ++t) {
          for (const auto& chi : f.homs[q][t]) {
            bool inside = true;
            for (int v : chi.img)
              if (!(phi_mask >> v & 1)) {
                inside = false;
                break;
              }
            if (!inside) continue;
            // psi = phi^-1 ∘ chi : T -> R
            std::vector<int> img(chi.dom.order());
            for (int i = 0; i < chi.dom.order(); ++i) {
              auto it = std::lower_bound(img_pos.begin(), img_pos.end(),
                                         std::make_pair(chi.img[i], -1));
              img[i] = it->second;
            }
            Morphism psi{chi.dom, phi.dom, std::move(img)};
            if (!f.contains(psi))
              return DivisibilityWitness{phi, psi, q, r, t};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_divisible(const PCategory& f) { return !divisibility_witness(f).has_value(); }

bool validate_category(const PCategory& f, std::string* why) {
  const int n = f.num_subs();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  // contains F_P
  PCategory inner = inner_category(f.group, f.p);
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r)
      for (const auto& m : inner.homs[q][r])
        if (!f.contains(m)) return fail("missing inner morphism");
  // closed under composition
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r)
      for (const auto& phi : f.homs[q][r])
        for (int t = 0; t < n; ++t)
          for (const auto& psi : f.homs[r][t])
            if (!f.contains(compose(phi, psi))) return fail("not closed under composition");
  if (auto w = divisibility_witness(f)) return fail("not divisible: " + w->describe());
  return true;
}

std::vector<std::vector<int>> iso_classes(const PCategory& f) {
  const int n = f.num_subs();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r)
      for (const auto& m : f.homs[q][r])
        if (m.is_iso()) parent[find(q)] = find(r);
  std::vector<std::vector<int>> classes(n);
  for (int i = 0; i < n; ++i) classes[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& c : classes)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

}  // namespace fuscat
