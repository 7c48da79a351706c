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

#include "hardybox/hardy.hpp"

#include <cmath>

namespace hardybox {

namespace {

double clamp_weight(double v, const char* what) {
  if (v < 0.0) {
    if (v < -1e-12) throw InvalidWeights(what);
    return 0.0;
  }
  return v;
}

}  // namespace

HardyCoefficients::HardyCoefficients(double c1, double c2, double c3,
                                     double c4, double c5, double c6)
    : c1(clamp_weight(c1, "c1 is negative")),
      c2(clamp_weight(c2, "c2 is negative")),
      c3(clamp_weight(c3, "c3 is negative")),
      c4(clamp_weight(c4, "c4 is negative")),
      c5(clamp_weight(c5, "c5 is negative")),
      c6(clamp_weight(c6, "c6 is negative")) {
  const double sum = c1 + c2 + c3 + c4 + c5 + c6;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidWeights("decomposition weights do not sum to one");
  }
}

HardyCoefficients HardyCoefficients::from_array(
    const std::array<double, 6>& c) {
  return HardyCoefficients(c[0], c[1], c[2], c[3], c[4], c[5]);
}

std::array<VertexId, 6> hardy_support() {
  return {VertexId::parse("L0001"), VertexId::parse("L0011"),
          VertexId::parse("L0100"), VertexId::parse("L1100"),
          VertexId::parse("L1111"), VertexId::parse("NL001")};
}

BipartiteBox hardy_box(const HardyCoefficients& c) {
  const std::array<VertexId, 6> support = hardy_support();
  const std::array<double, 6> w = c.as_array();
  std::vector<WeightedVertex> entries;
  entries.reserve(6);
  for (int i = 0; i < 6; ++i) entries.push_back({support[i], w[i]});
  return mix(ConvexWeights(std::move(entries)));
}

HardyVerdict is_hardy(const BipartiteBox& box, double tol) {
  HardyVerdict verdict{};
  verdict.residual_p00_00 = box.p(Bit(0), Bit(0), Bit(0), Bit(0));
  verdict.residual_p11_01 = box.p(Bit(0), Bit(1), Bit(1), Bit(1));
  verdict.residual_p11_10 = box.p(Bit(1), Bit(0), Bit(1), Bit(1));
  verdict.success = box.p(Bit(1), Bit(1), Bit(1), Bit(1));
  verdict.is_hardy = verdict.residual_p00_00 <= tol &&
                     verdict.residual_p11_01 <= tol &&
                     verdict.residual_p11_10 <= tol && verdict.success > tol;
  return verdict;
}

HardyCoefficients decompose(const BipartiteBox& box, double tol) {
  if (!is_no_signaling(box, tol)) {
    throw PreconditionError("decompose requires a no-signaling box");
  }
  if (box.p(Bit(0), Bit(0), Bit(0), Bit(0)) > tol ||
      box.p(Bit(0), Bit(1), Bit(1), Bit(1)) > tol ||
      box.p(Bit(1), Bit(0), Bit(1), Bit(1)) > tol) {
    throw NotHardyForm("a constrained entry is nonzero");
  }

  // Each weight is a single box entry (c6 twice the success entry).
  const double c5 = box.p(Bit(0), Bit(0), Bit(1), Bit(1));
  const double c2 = box.p(Bit(0), Bit(1), Bit(0), Bit(0));
  const double c4 = box.p(Bit(1), Bit(0), Bit(0), Bit(0));
  const double c1 = box.p(Bit(1), Bit(1), Bit(0), Bit(1));
  const double c3 = box.p(Bit(1), Bit(1), Bit(1), Bit(0));
  const double c6 = 2.0 * box.p(Bit(1), Bit(1), Bit(1), Bit(1));

  const double sum = c1 + c2 + c3 + c4 + c5 + c6;
  if (std::abs(sum - 1.0) > tol) {
    throw NotHardyForm("recovered weights do not sum to one");
  }
  // Repair rounding in the sum before the strict simplex validation.
  const HardyCoefficients coefficients(c1 / sum, c2 / sum, c3 / sum, c4 / sum,
                                       c5 / sum, c6 / sum);

  const BipartiteBox rebuilt = hardy_box(coefficients);
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      if (std::abs(rebuilt.entry(row, col) - box.entry(row, col)) > tol) {
        throw NotHardyForm("box is not in the six-vertex decomposition cone");
      }
    }
  }
  return coefficients;
}

double success_probability(const HardyCoefficients& c) { return 0.5 * c.c6; }

}  // namespace hardybox
