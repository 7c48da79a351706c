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

#include "hardybox/oracles.hpp"

#include <vector>

#include "hardybox/errors.hpp"

namespace hardybox::oracles {

namespace {

/// Largest c6 in [0, 1] with c6^2 + 2 u c6 + 2 u (u - 1) <= 0, located by
/// bisection on the sign only.
double bisect_cap(double u) {
  const auto admissible = [u](double c6) {
    return c6 * c6 + 2.0 * u * c6 + 2.0 * u * (u - 1.0) <= 0.0;
  };
  if (!admissible(0.0)) return 0.0;
  if (admissible(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (admissible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

DenseGridOptimum ic_grid_reference(int resolution) {
  if (resolution < 10) {
    throw PreconditionError("grid resolution must be at least 10");
  }
  const double step = 1.0 / resolution;

  // Both quadratics depend on the free weights only through the sums
  // c4 + c5 and c2 + c5, which live on the same grid; cache the bisected
  // cap per grid sum.
  std::vector<double> cap(2 * resolution + 1);
  for (int k = 0; k < static_cast<int>(cap.size()); ++k) {
    cap[k] = bisect_cap(k * step);
  }

  DenseGridOptimum best{-1.0, -0.5, {0.0, 0.0, 0.0}, 0};
  for (int i2 = 0; i2 <= resolution; ++i2) {
    for (int i4 = 0; i2 + i4 <= resolution; ++i4) {
      for (int i5 = 0; i2 + i4 + i5 <= resolution; ++i5) {
        ++best.cells_scanned;
        const double budget = 1.0 - (i2 + i4 + i5) * step;
        double c6 = cap[i4 + i5];
        if (cap[i2 + i5] < c6) c6 = cap[i2 + i5];
        if (budget < c6) c6 = budget;
        if (c6 > best.c6) {
          best.c6 = c6;
          best.params = {i2 * step, i4 * step, i5 * step};
        }
      }
    }
  }
  best.success = 0.5 * best.c6;
  return best;
}

}  // namespace hardybox::oracles
