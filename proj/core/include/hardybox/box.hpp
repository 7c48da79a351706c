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
#include <string>
#include <vector>

#include "hardybox/errors.hpp"

namespace hardybox {

/// Default numerical tolerance for validity / feasibility checks.
inline constexpr double kDefaultTol = 1e-9;

/// A classical bit. Box inputs and outputs are bits.
class Bit {
 public:
  constexpr explicit Bit(int v) : value_(static_cast<std::uint8_t>(v)) {
    if (v != 0 && v != 1) {
      throw PreconditionError("Bit value must be 0 or 1");
    }
  }

  constexpr int value() const { return value_; }

  friend constexpr Bit operator^(Bit a, Bit b) {
    return Bit(a.value_ ^ b.value_);
  }
  friend constexpr bool operator==(Bit a, Bit b) { return a.value_ == b.value_; }

 private:
  std::uint8_t value_;
};

enum class Side { Alice, Bob };

/// Joint conditional distribution P(ab|xy) of a bipartite box with binary
/// inputs x, y and binary outputs a, b.
///
/// Rows are input pairs xy and columns are outcome pairs ab, both in
/// lexicographic order 00, 01, 10, 11. This layout is fixed and shared by
/// every serializer in the project.
class BipartiteBox {
 public:
  using Grid = std::array<std::array<double, 4>, 4>;

  /// Validates that entries are nonnegative (a slack of 1e-12 is forgiven
  /// and clamped to zero) and that each row sums to one within `row_tol`.
  /// Boxes built by the library are exact; parsed boxes may carry the
  /// looser serialization tolerance.
  explicit BipartiteBox(const Grid& p, std::string label = "",
                        double row_tol = 1e-12);

  /// Entry P(ab|xy).
  double p(Bit x, Bit y, Bit a, Bit b) const {
    return p_[(x.value() << 1) | y.value()][(a.value() << 1) | b.value()];
  }

  /// Raw entry by row (input pair) and column (outcome pair) index.
  double entry(int row, int col) const { return p_.at(row).at(col); }

  const Grid& grid() const { return p_; }
  const std::string& label() const { return label_; }

  double row_sum(int row) const;

 private:
  Grid p_;
  std::string label_;
};

/// Kind of an extreme point of the no-signaling set.
enum class VertexKind { LocalDeterministic, ExtremalNonlocal };

/// Names one of the 24 extreme points: 16 local deterministic boxes
/// (a = alpha*x + beta, b = gamma*y + delta, arithmetic mod 2) or 8
/// extremal nonlocal boxes (uniform over a + b = x*y + alpha*x + beta*y
/// + gamma).
struct VertexId {
  VertexKind kind;
  Bit alpha;
  Bit beta;
  Bit gamma;
  std::optional<Bit> delta;  // present exactly for local vertices

  static VertexId local(Bit alpha, Bit beta, Bit gamma, Bit delta);
  static VertexId nonlocal(Bit alpha, Bit beta, Bit gamma);

  /// Compact text form: "L" + alpha beta gamma delta or "NL" + alpha beta
  /// gamma, e.g. "L0001", "NL001".
  std::string name() const;
  static VertexId parse(const std::string& text);

  friend bool operator==(const VertexId& a, const VertexId& b);
};

struct WeightedVertex {
  VertexId vertex;
  double weight;
};

/// A convex combination over vertices: weights nonnegative, summing to one
/// within 1e-12, with no vertex repeated. Violations raise InvalidWeights.
class ConvexWeights {
 public:
  explicit ConvexWeights(std::vector<WeightedVertex> entries);

  const std::vector<WeightedVertex>& entries() const { return entries_; }

 private:
  std::vector<WeightedVertex> entries_;
};

/// The local deterministic box with a = alpha*x + beta, b = gamma*y + delta
/// (mod 2). Entries are exactly 0 or 1.
BipartiteBox local_vertex(Bit alpha, Bit beta, Bit gamma, Bit delta);

/// The extremal nonlocal box: 1/2 on outcome pairs with
/// a + b = x*y + alpha*x + beta*y + gamma (mod 2), 0 elsewhere.
BipartiteBox nonlocal_vertex(Bit alpha, Bit beta, Bit gamma);

/// Box for an arbitrary vertex id.
BipartiteBox vertex_box(const VertexId& id);

std::vector<VertexId> local_vertices();     // all 16
std::vector<VertexId> nonlocal_vertices();  // all 8
std::vector<VertexId> all_vertices();       // all 24, locals first

/// Entrywise convex combination of vertex boxes.
BipartiteBox mix(const ConvexWeights& weights);

/// P(outcome = 0 on `side` | own input, other side's input).
double marginal(const BipartiteBox& box, Side side, Bit input,
                Bit conditioning_input);

/// True when each party's outcome distribution is independent of the other
/// party's input, within `tol`.
bool is_no_signaling(const BipartiteBox& box, double tol = kDefaultTol);

/// True when the box is a convex combination of the 16 local deterministic
/// vertices, i.e. the phase-1 feasibility solve reconstructs every entry
/// with total absolute slack at most `tol`.
///
/// Precondition: the box is no-signaling within `tol` (signaling input
/// raises PreconditionError). The solve uses Bland's rule and raises
/// LpNotConverged if the iteration cap is hit.
bool is_local(const BipartiteBox& box, double tol = kDefaultTol);

}  // namespace hardybox
