// Compares the OpenMP kernels against their serial reference implementations
// on the heavier catalog cases.
#include <chrono>
#include <iostream>

#include "fuscat/linfusion.hpp"
#include "fuscat/verify.hpp"

using namespace fuscat;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_of(F&& fn, int reps) {
  auto t0 = clk::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = clk::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  struct Case {
    const char* name;
    PCategory f;
  };
  std::vector<Case> cases;
  cases.push_back({"s4-fusion", fusion_from_ambient(symmetric_group(4), 2)});
  cases.push_back({"inner-c2x2x2", inner_category(elementary_abelian_2(3), 2)});
  auto randoms = random_categories(7, 3);
  for (auto& r : randoms) cases.push_back({"random", std::move(r.f)});

  std::cout << "kernel                      case            serial(s)   parallel(s)  agree\n";
  for (const auto& c : cases) {
    const PCategory& f = c.f;
    auto es = essential_subgroups_serial(f);
    auto ep = essential_subgroups(f);
    double ts = time_of([&] { essential_subgroups_serial(f); }, 5);
    double tp = time_of([&] { essential_subgroups(f); }, 5);
    std::cout << "essential_subgroups         " << c.name << "    " << ts << "  " << tp << "  "
              << (es == ep ? "yes" : "NO") << "\n";

    FrobeniusResult rs = is_frobenius_serial(f);
    FrobeniusResult rp = is_frobenius(f);
    double fs = time_of([&] { is_frobenius_serial(f); }, 2);
    double fp = time_of([&] { is_frobenius(f); }, 2);
    std::cout << "is_frobenius                " << c.name << "    " << fs << "  " << fp << "  "
              << (rs.ok == rp.ok ? "yes" : "NO") << "\n";
  }
  return 0;
}
