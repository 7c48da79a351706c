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

#include <vector>

namespace hardybox::detail {

struct Phase1Result {
  double objective;        // minimal total artificial mass (0 iff feasible)
  std::vector<double> x;   // structural solution at the optimum
};

/// Phase-1 simplex for the feasibility of  A x = b, x >= 0.
///
/// Minimizes the sum of artificial variables with Bland's anti-cycling rule
/// (lowest eligible index enters; ratio ties leave by lowest basis index).
/// The objective is the L1 distance to feasibility, so `objective == 0`
/// within rounding means the system is solvable. Throws LpNotConverged when
/// `max_iters` pivots are exhausted.
Phase1Result phase1_feasibility(const std::vector<std::vector<double>>& a,
                                const std::vector<double>& b, int max_iters);

}  // namespace hardybox::detail
