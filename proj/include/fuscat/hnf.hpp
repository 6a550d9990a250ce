#pragma once

#include <vector>

namespace fuscat {

using IntRow = std::vector<long long>;
using IntMatrix = std::vector<IntRow>;

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Zero rows are dropped; the result is a canonical basis, so two row sets
/// span the same integer lattice iff their forms are equal.
IntMatrix hermite_normal_form(IntMatrix rows);

bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Basis rows e_i - e_0 of the augmentation kernel in Z^n.
IntMatrix augmentation_kernel_basis(int n);

}  // namespace fuscat
