#include "fuscat/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fuscat/linfusion.hpp"

namespace fuscat {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw Error(ErrorCode::ParseError, where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw Error(ErrorCode::ValidationError, where + ": unknown key \"" + key + "\"");
  }
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::ParseError, where + ": expected an integer");
  return j.get<int>();
}

std::vector<int> get_int_list(const json& j, const std::string& where, int bound) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, where + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    int x = get_int(v, where);
    if (x < 0 || (bound > 0 && x >= bound))
      throw Error(ErrorCode::ValidationError, where + ": index " + std::to_string(x) +
                                                  " out of range");
    out.push_back(x);
  }
  return out;
}

ParsedGroup group_from_json(const json& j, const std::string& where) {
  ParsedGroup out;
  if (j.contains("table")) {
    check_keys(j, where, {"name", "order", "table"});
    if (j.contains("name")) out.name = j.at("name").get<std::string>();
    int order = get_int(j.at("order"), where + ".order");
    const json& tj = j.at("table");
    if (!tj.is_array() || static_cast<int>(tj.size()) != order)
      throw Error(ErrorCode::ValidationError, where + ".table: expected " + std::to_string(order) +
                                                  " rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : tj) {
      auto r = get_int_list(row, where + ".table", order);
      if (static_cast<int>(r.size()) != order)
        throw Error(ErrorCode::ValidationError, where + ".table: ragged row");
      table.push_back(std::move(r));
    }
    out.group = from_cayley_table(table);
  } else if (j.contains("perm_gens")) {
    check_keys(j, where, {"name", "degree", "perm_gens"});
    if (j.contains("name")) out.name = j.at("name").get<std::string>();
    int degree = get_int(j.at("degree"), where + ".degree");
    std::vector<std::vector<int>> gens;
    for (const auto& g : j.at("perm_gens")) gens.push_back(get_int_list(g, where + ".perm_gens", degree));
    out.group = from_permutations(degree, gens);
  } else {
    throw Error(ErrorCode::ValidationError, where + ": need either \"table\" or \"perm_gens\"");
  }
  return out;
}

ParsedGroup group_from_inline_or_path(const json& j, const std::string& where,
                                      const std::string& base_path) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_path).parent_path() / p;
    return group_from_json(load_json(p.string()), p.string());
  }
  return group_from_json(j, where);
}

}  // namespace

ParsedGroup parse_group_file(const std::string& path) {
  return group_from_json(load_json(path), path);
}

Morphism complete_seed_morphism(const Subgroup& dom, const Subgroup& cod,
                                const std::vector<std::pair<int, int>>& assignments) {
  const auto& g = *dom.parent;
  std::map<int, int> img{{0, 0}};
  for (auto [a, b] : assignments) {
    if (!dom.contains(a))
      throw Error(ErrorCode::IncompleteMap,
                  "map source " + std::to_string(a) + " outside the domain");
    auto [it, fresh] = img.emplace(a, b);
    if (!fresh && it->second != b)
      throw Error(ErrorCode::IncompleteMap, "conflicting images for " + std::to_string(a));
  }
  // multiplicative completion to a fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, fa] : std::map<int, int>(img))
      for (auto [b, fb] : std::map<int, int>(img)) {
        int ab = g.mul(a, b);
        int fab = g.mul(fa, fb);
        auto [it, fresh] = img.emplace(ab, fab);
        if (fresh)
          changed = true;
        else if (it->second != fab)
          throw Error(ErrorCode::IncompleteMap, "seed map is not a homomorphism");
      }
  }
  if (static_cast<int>(img.size()) != dom.order())
    throw Error(ErrorCode::IncompleteMap, "seed map given on a non-generating set");
  std::vector<int> vec(dom.order());
  for (int i = 0; i < dom.order(); ++i) vec[i] = img.at(dom.elems[i]);
  return make_morphism(dom, cod, std::move(vec));  // validates injectivity and containment
}

PCategory parse_fusion_file(const std::string& path, const Caps& caps) {
  json j = load_json(path);
  check_keys(j, path, {"group", "p", "seed_morphisms"});
  if (!j.contains("group") || !j.contains("p"))
    throw Error(ErrorCode::ValidationError, path + ": \"group\" and \"p\" are required");
  ParsedGroup pg = group_from_inline_or_path(j.at("group"), path + ".group", path);
  int p = get_int(j.at("p"), path + ".p");

  std::vector<Morphism> seeds;
  if (j.contains("seed_morphisms")) {
    const json& sj = j.at("seed_morphisms");
    if (!sj.is_array()) throw Error(ErrorCode::ParseError, path + ".seed_morphisms: expected array");
    for (const auto& s : sj) {
      check_keys(s, path + ".seed_morphisms[]", {"domain", "codomain", "map"});
      Subgroup dom(pg.group, get_int_list(s.at("domain"), path + ".domain", pg.group->order));
      Subgroup cod(pg.group, get_int_list(s.at("codomain"), path + ".codomain", pg.group->order));
      std::vector<std::pair<int, int>> assignments;
      const json& mj = s.at("map");
      if (!mj.is_object()) throw Error(ErrorCode::ParseError, path + ".map: expected object");
      for (const auto& [key, val] : mj.items()) {
        int a;
        try {
          a = std::stoi(key);
        } catch (...) {
          throw Error(ErrorCode::ParseError, path + ".map: non-numeric key \"" + key + "\"");
        }
        int b = get_int(val, path + ".map");
        if (a < 0 || a >= pg.group->order || b < 0 || b >= pg.group->order)
          throw Error(ErrorCode::ValidationError, path + ".map: index out of range");
        assignments.emplace_back(a, b);
      }
      seeds.push_back(complete_seed_morphism(dom, cod, assignments));
    }
  }

  try {
    if (auto cached = cache_load(pg.group, p, seeds, caps)) return *cached;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CacheCorrupt) throw;
    std::cerr << "warning: " << e.what() << "; recomputing\n";
  }
  PCategory f = divisible_closure(pg.group, p, seeds, caps);
  cache_store(pg.group, p, seeds, f);
  return f;
}

PCategory parse_ambient_file(const std::string& path, const Caps& caps) {
  json j = load_json(path);
  check_keys(j, path, {"ambient", "p", "sylow"});
  if (!j.contains("ambient") || !j.contains("p"))
    throw Error(ErrorCode::ValidationError, path + ": \"ambient\" and \"p\" are required");
  ParsedGroup pg = group_from_inline_or_path(j.at("ambient"), path + ".ambient", path);
  int p = get_int(j.at("p"), path + ".p");
  std::optional<std::vector<int>> sylow;
  if (j.contains("sylow")) sylow = get_int_list(j.at("sylow"), path + ".sylow", pg.group->order);
  return fusion_from_ambient(pg.group, p, sylow, caps);
}

InputKind detect_input(const std::string& path) {
  json j = load_json(path);
  if (j.is_object() && j.contains("ambient")) return InputKind::ambient;
  if (j.is_object() && j.contains("group")) return InputKind::fusion;
  if (j.is_object() && (j.contains("table") || j.contains("perm_gens"))) return InputKind::group;
  throw Error(ErrorCode::ValidationError, path + ": unrecognized file shape");
}

PCategory parse_category_file(const std::string& path, const Caps& caps) {
  switch (detect_input(path)) {
    case InputKind::ambient:
      return parse_ambient_file(path, caps);
    case InputKind::fusion:
      return parse_fusion_file(path, caps);
    default:
      throw Error(ErrorCode::ValidationError,
                  path + ": a bare group file has no prime; use a fusion file");
  }
}

std::string render_group_json(const GroupPtr& g, const std::string& name) {
  json j;
  j["name"] = name;
  j["order"] = g->order;
  json rows = json::array();
  for (int i = 0; i < g->order; ++i) {
    json row = json::array();
    for (int k = 0; k < g->order; ++k) row.push_back(g->mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string render_essentials_text(const PCategory& f) {
  std::ostringstream os;
  auto ess = essential_subgroups(f);
  if (ess.empty()) {
    os << "essential subgroups: none\n";
    return os.str();
  }
  os << "essential subgroups (" << ess.size() << "):\n";
  for (int q : ess) {
    ComponentStructure cs = factorization_components(f, q);
    os << "  {";
    for (size_t i = 0; i < f.subs[q].elems.size(); ++i) {
      if (i) os << ",";
      os << f.subs[q].elems[i];
    }
    os << "}  order=" << f.subs[q].order() << "  aut-in-category=" << f.aut_maps(q).size()
       << "  components=" << cs.ncomp << "\n";
  }
  return os.str();
}

std::string render_essentials_json(const PCategory& f) {
  json j;
  j["essentials"] = json::array();
  for (int q : essential_subgroups(f)) {
    ComponentStructure cs = factorization_components(f, q);
    json e;
    e["subgroup"] = f.subs[q].elems;
    e["order"] = f.subs[q].order();
    e["category_automorphisms"] = f.aut_maps(q).size();
    e["components"] = cs.ncomp;
    j["essentials"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

namespace {

uint64_t fnv1a(uint64_t h, uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::string> cache_path(uint64_t key) {
  const char* dir = std::getenv("FUSCAT_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ostringstream os;
  os << dir << "/" << std::hex << key << ".json";
  return os.str();
}

}  // namespace

uint64_t content_fingerprint(const GroupPtr& g, int p, const std::vector<Morphism>& seeds) {
  uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, static_cast<uint64_t>(g->order));
  for (int v : g->table) h = fnv1a(h, static_cast<uint64_t>(v));
  h = fnv1a(h, static_cast<uint64_t>(p));
  for (const auto& m : seeds) {
    for (int e : m.dom.elems) h = fnv1a(h, static_cast<uint64_t>(e) + 1);
    for (int e : m.cod.elems) h = fnv1a(h, static_cast<uint64_t>(e) + 2);
    for (int e : m.img) h = fnv1a(h, static_cast<uint64_t>(e) + 3);
  }
  return h;
}

std::optional<PCategory> cache_load(const GroupPtr& g, int p, const std::vector<Morphism>& seeds,
                                    const Caps& caps) {
  uint64_t key = content_fingerprint(g, p, seeds);
  auto path = cache_path(key);
  if (!path || !std::filesystem::exists(*path)) return std::nullopt;

  json j;
  try {
    j = load_json(*path);
  } catch (const Error& e) {
    throw Error(ErrorCode::CacheCorrupt, *path + ": unreadable cache entry");
  }
  try {
    if (!j.is_object() || j.at("fingerprint").get<std::string>() != std::to_string(key))
      throw Error(ErrorCode::CacheCorrupt, *path + ": fingerprint mismatch");
    PCategory f;
    f.group = g;
    f.p = p;
    f.subs = all_subgroups(g, caps.subgroup_cap);
    const int n = f.num_subs();
    f.homs.assign(n, std::vector<std::vector<Morphism>>(n));
    for (const auto& m : j.at("morphisms")) {
      int q = m.at(0).get<int>(), r = m.at(1).get<int>();
      std::vector<int> img = m.at(2).get<std::vector<int>>();
      if (q < 0 || q >= n || r < 0 || r >= n ||
          img.size() != f.subs[r].elems.size())
        throw Error(ErrorCode::CacheCorrupt, *path + ": malformed morphism record");
      f.homs[q][r].push_back(Morphism{f.subs[r], f.subs[q], std::move(img)});
    }
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) std::sort(f.homs[q][r].begin(), f.homs[q][r].end());
    f.divisible_verified = true;
    return f;
  } catch (const json::exception&) {
    throw Error(ErrorCode::CacheCorrupt, *path + ": malformed cache entry");
  }
}

void cache_store(const GroupPtr& g, int p, const std::vector<Morphism>& seeds,
                 const PCategory& f) {
  uint64_t key = content_fingerprint(g, p, seeds);
  auto path = cache_path(key);
  if (!path) return;
  json j;
  j["fingerprint"] = std::to_string(key);
  json ms = json::array();
  for (int q = 0; q < f.num_subs(); ++q)
    for (int r = 0; r < f.num_subs(); ++r)
      for (const auto& m : f.homs[q][r]) ms.push_back(json::array({q, r, m.img}));
  j["morphisms"] = std::move(ms);
  std::ofstream out(*path);
  out << j.dump();
}

}  // namespace fuscat
