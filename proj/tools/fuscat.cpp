#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuscat/io.hpp"
#include "fuscat/linfusion.hpp"
#include "fuscat/verify.hpp"

using namespace fuscat;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

std::vector<int> parse_elems(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected a:b pairs");
    out.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
  }
  return out;
}

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
  os << elems_str(m.dom) << "->" << elems_str(m.cod) << " [";
  for (size_t i = 0; i < m.img.size(); ++i) {
    if (i) os << ",";
    os << m.dom.elems[i] << ":" << m.img[i];
  }
  os << "]";
  return os.str();
}

int run_check(const std::string& file, const std::string& mode, const Caps& caps) {
  PCategory f = parse_category_file(file, caps);
  if (mode == "divisible") {
    auto w = divisibility_witness(f);
    std::cout << "DIVISIBLE: " << (w ? "no" : "yes") << "\n";
    if (w) std::cout << "witness: " << w->describe() << "\n";
    return w ? kExitFails : kExitHolds;
  }
  if (mode == "sylow") {
    bool ok = sylow_condition(f);
    std::cout << "SYLOW: " << (ok ? "yes" : "no") << "\n";
    if (!ok)
      std::cout << "witness: inner automorphisms of P are not a Sylow p-subgroup of F(P)\n";
    return ok ? kExitHolds : kExitFails;
  }
  if (mode == "frobenius") {
    FrobeniusResult r = is_frobenius(f, caps);
    std::cout << "FROBENIUS: " << (r.ok ? "yes" : "no") << (r.complete ? "" : " [INCOMPLETE]")
              << "\n";
    if (r.witness)
      std::cout << "witness: " << r.witness->clause << " at Q=" << elems_str(f.subs[r.witness->q])
                << " phi=" << morphism_str(r.witness->phi) << "\n";
    if (!r.complete) return kExitIncomplete;
    return r.ok ? kExitHolds : kExitFails;
  }
  if (mode == "alperin") {
    AlperinConditionResult r = alperin_condition(f);
    std::cout << "ALPERIN: " << (r.ok ? "yes" : "no") << "\n";
    if (!r.ok)
      std::cout << "witness: " << r.clause << " fails at Q=" << elems_str(f.subs[r.witness_q])
                << "\n";
    return r.ok ? kExitHolds : kExitFails;
  }
  throw Error(ErrorCode::ValidationError, "unknown check mode");
}

int run_essentials(const std::string& file, bool as_json, const Caps& caps) {
  PCategory f = parse_category_file(file, caps);
  std::cout << (as_json ? render_essentials_json(f) : render_essentials_text(f));
  return kExitHolds;
}

int run_decompose(const std::string& file, const std::string& domain, const std::string& map,
                  const Caps& caps) {
  PCategory f = parse_category_file(file, caps);
  Subgroup dom(f.group, parse_elems(domain));
  Morphism psi = complete_seed_morphism(dom, f.full(), parse_pairs(map));
  if (!f.contains(psi))
    throw Error(ErrorCode::ValidationError, "the given morphism is not in the category");
  AlperinChain chain = alperin_decompose(f, psi);
  std::cout << "decomposition of " << morphism_str(psi) << " (" << chain.links.size()
            << " links):\n";
  for (size_t i = 0; i < chain.links.size(); ++i) {
    const auto& l = chain.links[i];
    std::cout << "  link " << i << ": U=" << elems_str(l.u) << " sigma=" << morphism_str(l.sigma)
              << " nu=" << morphism_str(l.nu) << "\n";
  }
  std::string why;
  bool ok = verify_alperin_chain(f, chain, &why);
  std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
  if (!ok) std::cout << "reason: " << why << "\n";
  return ok ? kExitHolds : kExitFails;
}

std::vector<AutMap> parse_k_spec(const PCategory& f, int q, const std::string& spec) {
  const Subgroup& qs = f.subs[q];
  if (spec == "full") {
    AutGroup a = compute_aut(qs);
    std::vector<AutMap> k = a.maps;
    std::sort(k.begin(), k.end());
    return k;
  }
  if (spec == "trivial") return {identity_aut(qs)};
  if (spec == "inner") return f.inner_maps(q);
  if (spec.rfind("gens:", 0) == 0) {
    std::vector<AutMap> gens;
    std::stringstream ss(spec.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      AutMap m = parse_elems(tok);
      if (static_cast<int>(m.size()) != qs.order() || !is_automorphism(qs, m))
        throw Error(ErrorCode::ValidationError, "gens: entry is not an automorphism");
      gens.push_back(std::move(m));
    }
    // close under composition and inversion
    std::set<AutMap> k{identity_aut(qs)};
    std::vector<AutMap> work(k.begin(), k.end());
    for (const auto& g : gens)
      if (k.insert(g).second) work.push_back(g);
    for (size_t i = 0; i < work.size(); ++i) {
      for (size_t j = 0; j < work.size(); ++j) {
        AutMap c = compose_aut(qs, work[i], work[j]);
        if (k.insert(c).second) work.push_back(c);
      }
      AutMap inv = invert_aut(qs, work[i]);
      if (k.insert(inv).second) work.push_back(inv);
    }
    return {k.begin(), k.end()};
  }
  throw Error(ErrorCode::ValidationError, "unknown --k spec: " + spec);
}

int run_normalizer(const std::string& file, const std::string& subgroup, const std::string& kspec,
                   const Caps& caps) {
  PCategory f = parse_category_file(file, caps);
  int q = f.sub_index(Subgroup(f.group, parse_elems(subgroup)).elems);
  if (q < 0) throw Error(ErrorCode::NotASubgroup, "--subgroup is not a subgroup of P");
  std::vector<AutMap> k = parse_k_spec(f, q, kspec);
  PCategory nf = normalizer_category(f, q, k, caps);
  std::cout << "normalizer subcategory at Q=" << elems_str(f.subs[q]) << " |K|=" << k.size()
            << "\n";
  std::cout << "ambient order: " << nf.group->order << "\n";
  std::cout << "subgroups: " << nf.num_subs() << "\n";
  std::cout << "morphisms: " << nf.total_morphisms() << "\n";
  for (int a = 0; a < nf.num_subs(); ++a)
    for (int b = 0; b < nf.num_subs(); ++b)
      if (!nf.homs[a][b].empty())
        std::cout << "  |F(" << elems_str(nf.subs[a]) << ", " << elems_str(nf.subs[b])
                  << ")| = " << nf.homs[a][b].size() << "\n";
  std::cout << "sylow condition: " << (sylow_condition(nf) ? "yes" : "no") << "\n";
  std::cout << "alperin condition: " << (alperin_condition(nf).ok ? "yes" : "no") << "\n";
  return kExitHolds;
}

int run_verify(const std::string& file, const Caps& caps) {
  PCategory f = parse_category_file(file, caps);
  Verdict v = verify_equivalence(f, caps);
  std::cout << "frobenius (direct axioms): " << (v.direct.ok ? "yes" : "no") << "\n";
  std::cout << "frobenius (normalizer conditions): " << (v.indirect.ok ? "yes" : "no") << "\n";
  bool complete = v.direct.complete && v.indirect.complete;
  std::cout << "agreement: " << (v.agreement ? "yes" : "no") << (complete ? "" : " [INCOMPLETE]")
            << "\n";
  if (!complete) return kExitIncomplete;
  return v.agreement ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuscat: fusion-system categories over finite p-groups"};
  app.require_subcommand(1);

  Caps caps;
  app.add_option("--hom-cap", caps.hom_cap, "total morphism cap for closures");
  app.add_option("--max-aut-subgroups", caps.aut_group_cap,
                 "largest automorphism group whose subgroups are enumerated");

  std::string file, domain, map, subgroup, kspec = "full";
  bool as_json = false;
  bool divisible = false, sylow = false, frobenius = false, alperin = false;
  uint64_t seed = 0;
  int n_random = 25;

  auto* check = app.add_subcommand("check", "check a single property");
  check->add_option("file", file)->required();
  check->add_flag("--divisible", divisible);
  check->add_flag("--sylow", sylow);
  check->add_flag("--frobenius", frobenius);
  check->add_flag("--alperin", alperin);

  auto* essentials = app.add_subcommand("essentials", "list the essential subgroups");
  essentials->add_option("file", file)->required();
  essentials->add_flag("--json", as_json);

  auto* decompose = app.add_subcommand("decompose", "decompose a morphism through essentials");
  decompose->add_option("file", file)->required();
  decompose->add_option("--domain", domain)->required();
  decompose->add_option("--map", map)->required();

  auto* normalizer = app.add_subcommand("normalizer", "build a normalizer subcategory");
  normalizer->add_option("file", file)->required();
  normalizer->add_option("--subgroup", subgroup)->required();
  normalizer->add_option("--k", kspec);

  auto* verify = app.add_subcommand("verify-thm113", "run both Frobenius criteria and compare");
  verify->add_option("file", file)->required();

  auto* catalog = app.add_subcommand("catalog", "built-in catalog commands");
  auto* catalog_run_cmd = catalog->add_subcommand("run", "run the verification catalog");
  catalog_run_cmd->add_option("--seed", seed);
  catalog_run_cmd->add_option("--random-cases", n_random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      int modes = divisible + sylow + frobenius + alperin;
      if (modes != 1) {
        std::cerr << "check: pass exactly one of --divisible --sylow --frobenius --alperin\n";
        return kExitUsage;
      }
      std::string mode = divisible ? "divisible" : sylow ? "sylow" : frobenius ? "frobenius"
                                                                               : "alperin";
      return run_check(file, mode, caps);
    }
    if (*essentials) return run_essentials(file, as_json, caps);
    if (*decompose) return run_decompose(file, domain, map, caps);
    if (*normalizer) return run_normalizer(file, subgroup, kspec, caps);
    if (*verify) return run_verify(file, caps);
    if (*catalog_run_cmd) {
      CatalogReport rep = catalog_run(seed, n_random, caps);
      std::cout << rep.text;
      if (rep.any_incomplete) return kExitIncomplete;
      return rep.all_agree ? kExitHolds : kExitFails;
    }
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::OrderCapExceeded:
      case ErrorCode::HomSetCapExceeded:
      case ErrorCode::SizeCapExceeded:
        return kExitIncomplete;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
