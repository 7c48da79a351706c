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

#include <optional>
#include <string>

#include "hardybox/box.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/quantum.hpp"

namespace hardybox {

// Text-based serialization of the project's data types. The functions take
// and return JSON documents as strings so that the underlying JSON library
// stays an implementation detail of the core; malformed or schema-violating
// documents raise ParseError, while domain validation (simplex constraints,
// vertex names) raises the corresponding domain error.

/// Box document: {"p": [[..4 numbers..] x 4], "label": "optional"}.
/// Rows are input pairs 00, 01, 10, 11; columns outcome pairs in the same
/// order. Parsing forgives entry noise down to -1e-9 (clamped to zero) and
/// row sums within 1e-6 of one; anything worse is rejected.
std::string box_to_json(const BipartiteBox& box, int indent = 2);
BipartiteBox box_from_json(const std::string& text);

/// Coefficient document: {"c": [c1, c2, c3, c4, c5, c6]}. The values must
/// satisfy the simplex constraints enforced by HardyCoefficients.
std::string coefficients_to_json(const HardyCoefficients& c, int indent = 2);
HardyCoefficients coefficients_from_json(const std::string& text);

/// Measurement document: {"A": [theta, phi], "Ap": [theta, phi],
/// "B": [theta, phi], "Bp": [theta, phi]} in radians, optionally with
/// "state": [beta, gamma]. theta must lie in [0, pi] up to 1e-9 slack;
/// phases are wrapped.
struct SetupDocument {
  std::optional<quantum::TwoQubitState> state;
  quantum::MeasurementSetup setup;
};

std::string setup_to_json(const quantum::MeasurementSetup& setup,
                          int indent = 2);
std::string setup_to_json(const quantum::TwoQubitState& state,
                          const quantum::MeasurementSetup& setup,
                          int indent = 2);
SetupDocument setup_from_json(const std::string& text);

/// Mixture document: {"weights": [{"vertex": "L0001", "w": 0.5}, ...]}.
/// Vertex names follow VertexId::name(); the weights must form a convex
/// combination.
std::string weights_to_json(const ConvexWeights& weights, int indent = 2);
ConvexWeights weights_from_json(const std::string& text);

}  // namespace hardybox
