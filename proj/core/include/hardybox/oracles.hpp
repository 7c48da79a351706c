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

#include <array>

#include "hardybox/hardy.hpp"

namespace hardybox::oracles {

/// Result of the brute-force reference search of max_success_under_ic.
struct DenseGridOptimum {
  double c6;       // largest admissible nonlocal weight found
  double success;  // c6 / 2
  std::array<double, 3> params;  // (c2, c4, c5) at the optimum
  long cells_scanned;
};

/// Exhaustive reference maximization of the success probability under the
/// two decomposition-space quadratics, independent of the production
/// optimizer.
///
/// The free weights (c2, c4, c5) walk a uniform grid of the given
/// resolution (grid spacing 1 / resolution) over the simplex; for each cell
/// the largest admissible c6 is min(cap(c4 + c5), cap(c2 + c5),
/// 1 - c2 - c4 - c5), where cap(u) is found by 80 continuous bisection
/// steps on the sign of c6^2 + 2 u c6 + 2 u (u - 1) and memoized per grid
/// sum. Ties keep the lexicographically first (c2, c4, c5).
DenseGridOptimum ic_grid_reference(int resolution = 1000);

}  // namespace hardybox::oracles
