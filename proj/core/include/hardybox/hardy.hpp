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

#include "hardybox/box.hpp"

namespace hardybox {

/// Weights of the six-vertex decomposition
///
///   c1 L0001 + c2 L0011 + c3 L0100 + c4 L1100 + c5 L1111 + c6 NL001.
///
/// A box of this shape has P(00|00) = P(11|01) = P(11|10) = 0 and
/// P(11|11) = c6/2.
struct HardyCoefficients {
  double c1, c2, c3, c4, c5, c6;

  /// Validates the simplex constraints: every weight >= 0 (slack of 1e-12
  /// is clamped to zero) and the sum equals one within 1e-12.
  HardyCoefficients(double c1, double c2, double c3, double c4, double c5,
                    double c6);

  static HardyCoefficients from_array(const std::array<double, 6>& c);
  std::array<double, 6> as_array() const { return {c1, c2, c3, c4, c5, c6}; }
};

/// Result of testing the three zero conditions and the success entry.
struct HardyVerdict {
  bool is_hardy;
  double residual_p00_00;  // value of P(00|00), must vanish
  double residual_p11_01;  // value of P(11|01), must vanish
  double residual_p11_10;  // value of P(11|10), must vanish
  double success;          // P(11|11), must be positive
};

/// The six vertices supporting the decomposition, in coefficient order.
std::array<VertexId, 6> hardy_support();

/// Box of the decomposition with the given weights. The three constrained
/// entries vanish exactly and P(11|11) equals c6/2 exactly.
BipartiteBox hardy_box(const HardyCoefficients& c);

/// Checks the zero conditions within `tol` and requires success > tol.
HardyVerdict is_hardy(const BipartiteBox& box, double tol = kDefaultTol);

/// Recovers the six weights from a box of the decomposition shape.
///
/// The weights are read off closed-form: c5 = P(11|00), c2 = P(00|01),
/// c4 = P(00|10), c1 = P(01|11), c3 = P(10|11), c6 = 2 P(11|11). The box is
/// then rebuilt and all 16 entries compared within `tol`.
///
/// Throws NotHardyForm when a zero condition or the reconstruction fails,
/// InvalidWeights when the recovered weights leave the simplex by more than
/// the validation slack, and PreconditionError for signaling input.
HardyCoefficients decompose(const BipartiteBox& box, double tol = kDefaultTol);

/// Success probability of the decomposition: c6/2.
double success_probability(const HardyCoefficients& c);

}  // namespace hardybox
