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

#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace hardybox::detail {

struct NelderMeadResult {
  std::vector<double> x;
  double f;
  int evals;
};

/// Classic Nelder-Mead simplex descent (reflect 1, expand 2, contract 1/2,
/// shrink 1/2). Stops when the simplex function spread drops below `ftol`
/// or `max_evals` objective evaluations are spent. Fully deterministic.
inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, double step, int max_evals,
    double ftol = 1e-14) {
  const std::size_t n = x0.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (evals < max_evals) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[n];
    const std::size_t second_worst = order[n - 1];
    if (fv[worst] - fv[best] < ftol) break;

    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i != worst) s += pts[i][j];
      }
      centroid[j] = s / static_cast<double>(n);
    }

    for (std::size_t j = 0; j < n; ++j) {
      xr[j] = centroid[j] + (centroid[j] - pts[worst][j]);
    }
    const double fr = eval(xr);
    if (fr < fv[best]) {
      for (std::size_t j = 0; j < n; ++j) {
        xe[j] = centroid[j] + 2.0 * (centroid[j] - pts[worst][j]);
      }
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      pts[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    for (std::size_t j = 0; j < n; ++j) {
      const double towards = outside ? xr[j] : pts[worst][j];
      xc[j] = centroid[j] + 0.5 * (towards - centroid[j]);
    }
    const double fc = eval(xc);
    if (fc < std::min(fr, fv[worst])) {
      pts[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    // Shrink toward the best point.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
      }
      fv[i] = eval(pts[i]);
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (fv[i] < fv[best]) best = i;
  }
  return {pts[best], fv[best], evals};
}

}  // namespace hardybox::detail
