#include "fuscat/hnf.hpp"

#include <algorithm>
#include <cstdlib>

namespace fuscat {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const int n = static_cast<int>(rows[0].size());
  const int m = static_cast<int>(rows.size());
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    // euclidean elimination below row r until one nonzero entry remains
    while (true) {
      int piv = -1;
      for (int i = r; i < m; ++i)
        if (rows[i][col] != 0 &&
            (piv < 0 || std::llabs(rows[i][col]) < std::llabs(rows[piv][col])))
          piv = i;
      if (piv < 0) break;
      std::swap(rows[r], rows[piv]);
      bool others = false;
      for (int i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        long long q = floor_div(rows[i][col], rows[r][col]);
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    for (int i = 0; i < r; ++i) {
      long long q = floor_div(rows[i][col], rows[r][col]);
      if (q != 0)
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

IntMatrix augmentation_kernel_basis(int n) {
  IntMatrix rows;
  for (int i = 1; i < n; ++i) {
    IntRow row(n, 0);
    row[0] = -1;
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fuscat
