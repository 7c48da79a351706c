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
#include <complex>
#include <cstdint>
#include <vector>

#include "hardybox/box.hpp"
#include "hardybox/info_causality.hpp"
#include "hardybox/local_randomness.hpp"

namespace hardybox::quantum {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;

/// Pure two-qubit state cos(beta)|00> + e^{i gamma} sin(beta)|11>.
///
/// Any beta is accepted; the single-random-observable results need the
/// entangled non-maximal range beta in (0, pi/2) excluding pi/4, while
/// beta = pi/4 is the maximally entangled edge case. gamma is wrapped to
/// (-pi, pi].
struct TwoQubitState {
  double beta;
  double gamma;

  TwoQubitState(double beta, double gamma);
};

/// Projective qubit measurement along the Bloch direction
/// (sin t cos p, sin t sin p, cos t), outcomes +1 / -1. theta is clamped to
/// [0, pi] and phi wrapped to (-pi, pi].
struct Observable {
  double theta;
  double phi;

  Observable(double theta, double phi);

  std::array<double, 3> direction() const;
};

/// The four measurement choices: x selects a0/a1 for Alice, y selects
/// b0/b1 for Bob. Output bit 0 encodes outcome +1, bit 1 encodes -1.
struct MeasurementSetup {
  Observable a0;
  Observable a1;
  Observable b0;
  Observable b1;
};

/// Full and reduced density matrices of the state.
struct DensityMatrices {
  Mat4 rho_ab;
  Mat2 rho_a;
  Mat2 rho_b;
};

DensityMatrices density_matrices(const TwoQubitState& state);

/// Projector onto the +1 or -1 eigenspace of the observable.
Mat2 projector(const Observable& o, int outcome);

/// Born-rule joint probability Tr[(Pa x Pb) rho] evaluated with explicit
/// matrices. outcome_a and outcome_b are +1 or -1.
double joint_probability(const TwoQubitState& state, const Observable& oa,
                         const Observable& ob, int outcome_a, int outcome_b);

/// The 4x4 behavior of measuring the state with the setup.
BipartiteBox quantum_box(const TwoQubitState& state,
                         const MeasurementSetup& setup);

/// True when the observable's outcome is an unbiased coin on the reduced
/// state, i.e. |cos(2 beta) cos(theta)| vanishes (within 1e-12). For
/// beta = pi/4 this holds for every direction; otherwise it needs the
/// equatorial theta = pi/2.
bool is_observable_random(const TwoQubitState& state, const Observable& o);

/// Closed-form values of the four constrained entries of the behavior:
/// the probabilities that must vanish and the success probability.
struct HardyResiduals {
  double p00_00;   // both +1 under (a0, b0)
  double p11_01;   // both -1 under (a0, b1)
  double p11_10;   // both -1 under (a1, b0)
  double success;  // both -1 under (a1, b1)
};

HardyResiduals hardy_residuals(const TwoQubitState& state,
                               const MeasurementSetup& setup);

/// Value of a vanished-entry condition after restricting both observables
/// of a pair to the equator (theta = pi/2), as a function of the state and
/// the combined phase delta = phi_a + phi_b - gamma:
///
///   (1 + sin(2 beta) cos(delta)) / 4.
///
/// For beta away from pi/4 this is bounded away from zero, which is the
/// obstruction to two simultaneously random inputs.
double reduced_zero_condition(double beta, double delta_phi);

/// The input pairs whose simultaneous randomness is ruled out by a
/// vanished-entry condition.
enum class RandomPair { AliceZeroBobZero, AliceZeroBobOne, AliceOneBobZero };

/// Grid certificate that the reduced zero condition cannot vanish for any
/// non-maximal state: the scanned minimum stays positive and matches the
/// analytic envelope (1 - |sin 2 beta|)/4 where the phase hits
/// cos(delta) = -1.
struct InfeasibilityCertificate {
  RandomPair pair;
  int beta_points;
  int phase_points;
  double grid_min;
  double beta_at_min;
  double phase_at_min;
  double lower_bound;   // (1 - max grid |sin 2 beta|)/4
  bool bound_attained;  // every beta row attains its envelope at cos = -1
  bool valid;           // grid_min positive and no row dips below envelope
};

InfeasibilityCertificate two_random_infeasibility(RandomPair pair,
                                                  int beta_points = 1000,
                                                  int phase_points = 1000);

/// Best found feasible point of the constrained maximization of the
/// success entry.
struct QuantumOptimum {
  TwoQubitState state;
  MeasurementSetup setup;
  double success;
  std::array<double, 3> residuals;  // the three vanished-entry values
  bool residual_warning;            // best residuals exceed 1e-6
  int best_start;
};

/// Maximizes the success entry subject to the three zero conditions via
/// seeded multistart penalized simplex descent (squared-residual penalty
/// escalated to 1e6) with a final least-squares feasibility polish.
/// `multistarts` must be at least 16; `iterations` caps the function
/// evaluations of each descent stage. Deterministic for a given seed.
QuantumOptimum max_quantum_hardy(int multistarts, std::uint64_t seed,
                                 int iterations = 2000);

/// The library's reference single-random-observable configuration:
/// beta = pi/6, gamma = pi, a0 equatorial, and the partner angles chosen so
/// all three constrained entries vanish with success probability 3/40.
struct ReferenceExample {
  TwoQubitState state;
  MeasurementSetup setup;
  HardyResiduals values;
  BipartiteBox box;
  std::vector<InputLabel> classification;
  IcVerdict ic;
};

ReferenceExample reference_example();

}  // namespace hardybox::quantum
