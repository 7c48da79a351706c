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

#include "hardybox/info_causality.hpp"

#include <cmath>

namespace hardybox {

BipartiteBox transpose_roles(const BipartiteBox& box) {
  BipartiteBox::Grid grid{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          grid[(x << 1) | y][(a << 1) | b] =
              box.p(Bit(y), Bit(x), Bit(b), Bit(a));
        }
      }
    }
  }
  return BipartiteBox(grid, box.label().empty() ? "" : box.label() + "^T");
}

IcStatistics ic_statistics(const BipartiteBox& box, Orientation orientation) {
  const BipartiteBox& view =
      orientation == Orientation::AliceToBob ? box : transpose_roles(box);
  auto equal = [&view](int x, int y) {
    return view.p(Bit(x), Bit(y), Bit(0), Bit(0)) +
           view.p(Bit(x), Bit(y), Bit(1), Bit(1));
  };
  auto differ = [&view](int x, int y) {
    return view.p(Bit(x), Bit(y), Bit(0), Bit(1)) +
           view.p(Bit(x), Bit(y), Bit(1), Bit(0));
  };
  IcStatistics stats{};
  stats.orientation = orientation;
  stats.p1 = 0.5 * (equal(0, 0) + equal(1, 0));
  stats.p2 = 0.5 * (equal(0, 1) + differ(1, 1));
  stats.e1 = 2.0 * stats.p1 - 1.0;
  stats.e2 = 2.0 * stats.p2 - 1.0;
  return stats;
}

IcVerdict satisfies_ic_necessary(const BipartiteBox& box, double tol) {
  IcVerdict verdict{};
  verdict.alice_to_bob = ic_statistics(box, Orientation::AliceToBob);
  verdict.bob_to_alice = ic_statistics(box, Orientation::BobToAlice);
  const double lhs_ab = verdict.alice_to_bob.e1 * verdict.alice_to_bob.e1 +
                        verdict.alice_to_bob.e2 * verdict.alice_to_bob.e2;
  const double lhs_ba = verdict.bob_to_alice.e1 * verdict.bob_to_alice.e1 +
                        verdict.bob_to_alice.e2 * verdict.bob_to_alice.e2;
  verdict.lhs = std::max(lhs_ab, lhs_ba);
  verdict.satisfied = verdict.lhs <= 1.0 + tol;
  if (is_hardy(box, tol).is_hardy) {
    try {
      verdict.hardy_quadratics = hardy_ic_lhs(decompose(box, tol));
    } catch (const Error&) {
      // Zero conditions hold but the box is outside the decomposition
      // cone; leave the quadratics unset.
    }
  }
  return verdict;
}

std::array<double, 2> hardy_ic_lhs(const HardyCoefficients& c) {
  auto quadratic = [&c](double u) {
    return c.c6 * c.c6 + 2.0 * u * c.c6 + 2.0 * u * (u - 1.0);
  };
  return {quadratic(c.c4 + c.c5), quadratic(c.c2 + c.c5)};
}

CaseIcReport case_ic_verdict(const RandomnessCase& c, int n_samples,
                             std::uint64_t seed) {
  if (n_samples <= 0) throw PreconditionError("need a positive sample count");
  const CaseFamily family = solve_case(c);

  CaseIcReport report{};
  report.case_index = c.index;
  report.samples_checked = n_samples;
  // c4 + c5 = 0 forces the first quadratic to c6^2, c2 + c5 = 0 the second;
  // either way every member with c6 > 0 violates the condition.
  report.forces_first_sum_zero =
      family.forces_zero({0.0, 0.0, 0.0, 1.0, 1.0, 0.0});
  report.forces_second_sum_zero =
      family.forces_zero({0.0, 1.0, 0.0, 0.0, 1.0, 0.0});

  const std::vector<HardyCoefficients> samples =
      sample_case(c, n_samples, seed);
  for (const HardyCoefficients& member : samples) {
    const std::array<double, 2> lhs = hardy_ic_lhs(member);
    if (lhs[0] > 0.0 || lhs[1] > 0.0) {
      ++report.violating_samples;
    } else if (!report.witness && member.c6 > 0.0) {
      report.witness = member;
    }
  }

  if (report.witness) {
    report.verdict = CaseVerdict::Feasible;
    return report;
  }
  const bool proven =
      report.forces_first_sum_zero || report.forces_second_sum_zero;
  if (proven && report.violating_samples == report.samples_checked) {
    report.verdict = CaseVerdict::AlwaysViolated;
    return report;
  }
  throw Error("case verdict undetermined: no witness and no analytic proof");
}

namespace {

// Largest c6 on the symmetric slice s = t = c5 that keeps the quadratic
// nonpositive, capped by the simplex room 1 - s.
double symmetric_cap(double s, bool enforce_ic) {
  const double room = 1.0 - s;
  if (!enforce_ic) return room;
  const double radicand = 2.0 * s - s * s;
  if (radicand <= 0.0) return 0.0;
  const double root = -s + std::sqrt(radicand);
  return std::min(std::max(root, 0.0), room);
}

}  // namespace

IcOptimum max_success_under_ic(int grid_resolution, int refine_iterations,
                               bool enforce_ic) {
  if (grid_resolution < 100) {
    throw PreconditionError("grid resolution must be at least 100");
  }
  if (refine_iterations < 0) {
    throw PreconditionError("refinement iteration count must be nonnegative");
  }

  // Stage 1: coarse scan of the slice. Strict improvement keeps the
  // smallest maximizing s, so partitioned scans merge deterministically.
  double best_s = 0.0;
  double best_c6 = symmetric_cap(0.0, enforce_ic);
  for (int i = 1; i <= grid_resolution; ++i) {
    const double s = static_cast<double>(i) / grid_resolution;
    const double c6 = symmetric_cap(s, enforce_ic);
    if (c6 > best_c6) {
      best_c6 = c6;
      best_s = s;
    }
  }

  // Stage 2: golden-section refinement around the best grid point.
  const double step = 1.0 / grid_resolution;
  double lo = std::max(0.0, best_s - step);
  double hi = std::min(1.0, best_s + step);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = symmetric_cap(x1, enforce_ic);
  double f2 = symmetric_cap(x2, enforce_ic);
  for (int it = 0; it < refine_iterations; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = symmetric_cap(x2, enforce_ic);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = symmetric_cap(x1, enforce_ic);
    }
  }
  for (const double s : {lo, hi, x1, x2}) {
    const double c6 = symmetric_cap(s, enforce_ic);
    if (c6 > best_c6) {
      best_c6 = c6;
      best_s = s;
    }
  }

  // Realize the slice point: c5 carries s = t, the leftover splits evenly
  // between c1 and c3.
  const double rest = std::max(0.0, 1.0 - best_c6 - best_s);
  const HardyCoefficients coefficients(0.5 * rest, 0.0, 0.5 * rest, 0.0,
                                       best_s, best_c6);
  IcOptimum optimum{coefficients, success_probability(coefficients),
                    hardy_ic_lhs(coefficients)};
  return optimum;
}

}  // namespace hardybox
