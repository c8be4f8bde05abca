#include "nlhorn/simplex.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace nlhorn {

namespace {
using Rat = boost::multiprecision::cpp_rational;
}

// Phase-1 simplex: minimize the sum of artificial variables subject to
// A x = b, x >= 0, where the columns of A are the generators. target lies in
// the cone iff the minimum is zero. The z-row stores reduced costs z_j - c_j.
bool in_nonneg_cone(const std::vector<std::vector<long long>>& generators,
                    const std::vector<long long>& target) {
  const int d = static_cast<int>(target.size());
  const int m = static_cast<int>(generators.size());
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("in_nonneg_cone: dimension mismatch");
  if (d == 0) return true;

  const int cols = m + d + 1;  // generator columns, artificials, rhs
  std::vector<std::vector<Rat>> t(d + 1, std::vector<Rat>(cols, 0));
  for (int i = 0; i < d; ++i) {
    const int sign = target[i] < 0 ? -1 : 1;
    for (int j = 0; j < m; ++j) t[i][j] = sign * generators[j][i];
    t[i][m + i] = 1;
    t[i][cols - 1] = sign * target[i];
  }
  // price out the artificial basis
  for (int j = 0; j < cols; ++j) {
    Rat s = 0;
    for (int i = 0; i < d; ++i) s += t[i][j];
    t[d][j] = j < m || j == cols - 1 ? s : 0;
  }

  std::vector<int> basis(d);
  for (int i = 0; i < d; ++i) basis[i] = m + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < m + d; ++j) {
      if (t[d][j] > 0) {
        enter = j;  // Bland: lowest eligible index
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < d; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded; cannot happen with bounded phase-1 objective
    Rat piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= d; ++i) {
      if (i == leave) continue;
      Rat f = t[i][enter];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[d][cols - 1] == 0;
}

}  // namespace nlhorn
