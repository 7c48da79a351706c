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
#include <cstdint>
#include <optional>

#include "hardybox/box.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/local_randomness.hpp"

namespace hardybox {

/// Direction of the random-access protocol behind the necessary condition:
/// which party holds the database and which one guesses.
enum class Orientation { AliceToBob, BobToAlice };

/// Success statistics of the two guessing games.
///
///   P1 = [p(a=b|00) + p(a=b|10)] / 2
///   P2 = [p(a=b|01) + p(a<>b|11)] / 2
///
/// with bias E_j = 2 P_j - 1. BobToAlice evaluates the same expressions on
/// the role-swapped box.
struct IcStatistics {
  double p1, p2;
  double e1, e2;
  Orientation orientation;
};

/// Outcome of the necessary condition E1^2 + E2^2 <= 1 in both orientations.
struct IcVerdict {
  bool satisfied;
  double lhs;  // worst orientation's E1^2 + E2^2
  IcStatistics alice_to_bob;
  IcStatistics bob_to_alice;
  /// The two decomposition-space quadratics, present when the box passes
  /// the zero-condition check and decomposes.
  std::optional<std::array<double, 2>> hardy_quadratics;
};

/// The box with roles swapped: outputs a<->b and inputs x<->y.
BipartiteBox transpose_roles(const BipartiteBox& box);

IcStatistics ic_statistics(const BipartiteBox& box, Orientation orientation);

/// Necessary condition E1^2 + E2^2 <= 1 + tol, enforced in both
/// orientations.
IcVerdict satisfies_ic_necessary(const BipartiteBox& box,
                                 double tol = kDefaultTol);

/// The necessary condition specialized to the decomposition: with
/// s = c4 + c5 and t = c2 + c5 the two orientations read
///
///   c6^2 + 2 s c6 + 2 s (s - 1) <= 0
///   c6^2 + 2 t c6 + 2 t (t - 1) <= 0
///
/// Returns the pair of left-hand sides.
std::array<double, 2> hardy_ic_lhs(const HardyCoefficients& c);

enum class CaseVerdict { AlwaysViolated, Feasible };

/// Verdict for one randomness case against the necessary condition.
struct CaseIcReport {
  int case_index;
  CaseVerdict verdict;
  std::optional<HardyCoefficients> witness;  // present for Feasible
  long samples_checked;
  long violating_samples;
  /// Analytic flags: the family forces c4 + c5 = 0 (first) or c2 + c5 = 0
  /// (second), which makes the matching quadratic equal c6^2 > 0.
  bool forces_first_sum_zero;
  bool forces_second_sum_zero;
};

/// Samples the case family and classifies it. AlwaysViolated requires the
/// analytic zero-sum argument plus violation of every sample; Feasible
/// requires a sampled witness with both quadratics <= 0 and c6 > 0.
CaseIcReport case_ic_verdict(const RandomnessCase& c, int n_samples,
                             std::uint64_t seed);

/// Result of maximizing the success probability c6/2.
struct IcOptimum {
  HardyCoefficients coefficients;
  double success;
  std::array<double, 2> quadratic_lhs;
};

/// Maximum success probability over the decomposition simplex subject to
/// both quadratics (skipped when `enforce_ic` is false, in which case the
/// maximum is the extremal nonlocal point c6 = 1).
///
/// Deterministic two-stage search: a coarse grid over the symmetric slice
/// s = t = c5, then golden-section refinement of the feasible ridge
/// c6(s) = -s + sqrt(2s - s^2). `grid_resolution` must be at least 100.
IcOptimum max_success_under_ic(int grid_resolution = 2000,
                               int refine_iterations = 200,
                               bool enforce_ic = true);

}  // namespace hardybox
