// Copyright 2026 hardybox contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simplex.hpp"

#include <cmath>
#include <cstddef>

#include "hardybox/errors.hpp"

namespace hardybox::detail {

namespace {
constexpr double kPivotEps = 1e-11;
}

Phase1Result phase1_feasibility(const std::vector<std::vector<double>>& a,
                                const std::vector<double>& b, int max_iters) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();

  // Tableau: n structural columns, m artificial columns, one rhs column.
  // Rows are the constraints; the artificial for row i starts basic.
  std::vector<std::vector<double>> t(m, std::vector<double>(n + m + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1.0;
    t[i][n + m] = sign * b[i];
    basis[i] = n + i;
  }

  // Reduced cost of column j for the phase-1 objective (sum of artificials
  // with unit cost, structural variables free of charge).
  std::vector<double> cost(n + m, 0.0);
  for (std::size_t j = 0; j < n + m; ++j) {
    double z = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) z += t[i][j];  // basic artificials have cost 1
    }
    const double cj = j >= n ? 1.0 : 0.0;
    cost[j] = cj - z;
  }

  for (int iter = 0; iter < max_iters; ++iter) {
    // Bland: first column with negative reduced cost enters.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;  // optimal

    // Ratio test; ties resolved toward the smallest basis label (Bland).
    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotEps) {
        const double ratio = t[i][n + m] / t[i][enter];
        if (leave == m || ratio < best_ratio - kPivotEps ||
            (std::abs(ratio - best_ratio) <= kPivotEps &&
             basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) {
      // Phase-1 objective is bounded below by zero, so an unbounded ray
      // here means the arithmetic has gone bad.
      throw LpNotConverged("feasibility solve found an unbounded direction");
    }

    // Pivot.
    const double piv = t[leave][enter];
    for (std::size_t j = 0; j <= n + m; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    const double fc = cost[enter];
    if (fc != 0.0) {
      for (std::size_t j = 0; j < n + m; ++j) cost[j] -= fc * t[leave][j];
    }
    basis[leave] = enter;

    if (iter + 1 == max_iters) {
      throw LpNotConverged("feasibility solve exceeded its iteration cap");
    }
  }

  Phase1Result result;
  result.x.assign(n, 0.0);
  result.objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = t[i][n + m];
    if (basis[i] < n) {
      result.x[basis[i]] = v;
    } else {
      result.objective += std::abs(v);
    }
  }
  return result;
}

}  // namespace hardybox::detail
