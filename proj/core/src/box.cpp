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

#include "hardybox/box.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "simplex.hpp"

namespace hardybox {

namespace {

constexpr double kEntryTol = 1e-12;

int vertex_code(const VertexId& id) {
  // Unique small integer per vertex, used for duplicate detection.
  if (id.kind == VertexKind::LocalDeterministic) {
    return (id.alpha.value() << 3) | (id.beta.value() << 2) |
           (id.gamma.value() << 1) | id.delta->value();
  }
  return 16 + ((id.alpha.value() << 2) | (id.beta.value() << 1) |
               id.gamma.value());
}

}  // namespace

BipartiteBox::BipartiteBox(const Grid& p, std::string label, double row_tol)
    : p_(p), label_(std::move(label)) {
  for (int row = 0; row < 4; ++row) {
    double sum = 0.0;
    for (int col = 0; col < 4; ++col) {
      double& v = p_[row][col];
      if (v < 0.0) {
        if (v < -kEntryTol) {
          throw PreconditionError("box entry is negative");
        }
        v = 0.0;
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > row_tol) {
      throw PreconditionError("box row does not sum to one");
    }
  }
}

double BipartiteBox::row_sum(int row) const {
  double sum = 0.0;
  for (int col = 0; col < 4; ++col) sum += p_.at(row)[col];
  return sum;
}

VertexId VertexId::local(Bit alpha, Bit beta, Bit gamma, Bit delta) {
  return VertexId{VertexKind::LocalDeterministic, alpha, beta, gamma, delta};
}

VertexId VertexId::nonlocal(Bit alpha, Bit beta, Bit gamma) {
  return VertexId{VertexKind::ExtremalNonlocal, alpha, beta, gamma,
                  std::nullopt};
}

std::string VertexId::name() const {
  std::string out = kind == VertexKind::LocalDeterministic ? "L" : "NL";
  out += static_cast<char>('0' + alpha.value());
  out += static_cast<char>('0' + beta.value());
  out += static_cast<char>('0' + gamma.value());
  if (kind == VertexKind::LocalDeterministic) {
    out += static_cast<char>('0' + delta->value());
  }
  return out;
}

VertexId VertexId::parse(const std::string& text) {
  auto bit_at = [&text](std::size_t i) {
    const char c = text.at(i);
    if (c != '0' && c != '1') {
      throw PreconditionError("vertex name must use binary digits: " + text);
    }
    return Bit(c - '0');
  };
  if (text.size() == 5 && text[0] == 'L') {
    return local(bit_at(1), bit_at(2), bit_at(3), bit_at(4));
  }
  if (text.size() == 5 && text[0] == 'N' && text[1] == 'L') {
    return nonlocal(bit_at(2), bit_at(3), bit_at(4));
  }
  throw PreconditionError("unrecognized vertex name: " + text);
}

bool operator==(const VertexId& a, const VertexId& b) {
  return vertex_code(a) == vertex_code(b);
}

ConvexWeights::ConvexWeights(std::vector<WeightedVertex> entries)
    : entries_(std::move(entries)) {
  double sum = 0.0;
  std::set<int> seen;
  for (const auto& e : entries_) {
    if (e.weight < -kEntryTol) {
      throw InvalidWeights("mixing weight is negative");
    }
    if (!seen.insert(vertex_code(e.vertex)).second) {
      throw InvalidWeights("vertex repeated in convex combination: " +
                           e.vertex.name());
    }
    sum += e.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidWeights("mixing weights do not sum to one");
  }
}

BipartiteBox local_vertex(Bit alpha, Bit beta, Bit gamma, Bit delta) {
  BipartiteBox::Grid grid{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int a = (alpha.value() & x) ^ beta.value();
      const int b = (gamma.value() & y) ^ delta.value();
      grid[(x << 1) | y][(a << 1) | b] = 1.0;
    }
  }
  return BipartiteBox(
      grid, VertexId::local(alpha, beta, gamma, delta).name());
}

BipartiteBox nonlocal_vertex(Bit alpha, Bit beta, Bit gamma) {
  BipartiteBox::Grid grid{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int parity =
          (x & y) ^ (alpha.value() & x) ^ (beta.value() & y) ^ gamma.value();
      for (int a = 0; a < 2; ++a) {
        const int b = a ^ parity;
        grid[(x << 1) | y][(a << 1) | b] = 0.5;
      }
    }
  }
  return BipartiteBox(grid, VertexId::nonlocal(alpha, beta, gamma).name());
}

BipartiteBox vertex_box(const VertexId& id) {
  if (id.kind == VertexKind::LocalDeterministic) {
    return local_vertex(id.alpha, id.beta, id.gamma, *id.delta);
  }
  return nonlocal_vertex(id.alpha, id.beta, id.gamma);
}

std::vector<VertexId> local_vertices() {
  std::vector<VertexId> out;
  out.reserve(16);
  for (int code = 0; code < 16; ++code) {
    out.push_back(VertexId::local(Bit((code >> 3) & 1), Bit((code >> 2) & 1),
                                  Bit((code >> 1) & 1), Bit(code & 1)));
  }
  return out;
}

std::vector<VertexId> nonlocal_vertices() {
  std::vector<VertexId> out;
  out.reserve(8);
  for (int code = 0; code < 8; ++code) {
    out.push_back(VertexId::nonlocal(Bit((code >> 2) & 1), Bit((code >> 1) & 1),
                                     Bit(code & 1)));
  }
  return out;
}

std::vector<VertexId> all_vertices() {
  std::vector<VertexId> out = local_vertices();
  const std::vector<VertexId> nl = nonlocal_vertices();
  out.insert(out.end(), nl.begin(), nl.end());
  return out;
}

BipartiteBox mix(const ConvexWeights& weights) {
  BipartiteBox::Grid grid{};
  for (const auto& e : weights.entries()) {
    const BipartiteBox v = vertex_box(e.vertex);
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        grid[row][col] += e.weight * v.entry(row, col);
      }
    }
  }
  return BipartiteBox(grid);
}

double marginal(const BipartiteBox& box, Side side, Bit input,
                Bit conditioning_input) {
  if (side == Side::Alice) {
    const int row = (input.value() << 1) | conditioning_input.value();
    return box.entry(row, 0) + box.entry(row, 1);  // a = 0 columns 00, 01
  }
  const int row = (conditioning_input.value() << 1) | input.value();
  return box.entry(row, 0) + box.entry(row, 2);  // b = 0 columns 00, 10
}

bool is_no_signaling(const BipartiteBox& box, double tol) {
  for (const Side side : {Side::Alice, Side::Bob}) {
    for (int input = 0; input < 2; ++input) {
      const double m0 = marginal(box, side, Bit(input), Bit(0));
      const double m1 = marginal(box, side, Bit(input), Bit(1));
      if (std::abs(m0 - m1) > tol) return false;
    }
  }
  return true;
}

bool is_local(const BipartiteBox& box, double tol) {
  if (!is_no_signaling(box, tol)) {
    throw PreconditionError("is_local requires a no-signaling box");
  }

  // 16 entry equations plus explicit normalization over the 16 local
  // deterministic vertices.
  const std::vector<VertexId> locals = local_vertices();
  std::vector<std::vector<double>> a(17, std::vector<double>(16, 0.0));
  std::vector<double> b(17, 0.0);
  for (std::size_t v = 0; v < locals.size(); ++v) {
    const BipartiteBox vb = vertex_box(locals[v]);
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        a[row * 4 + col][v] = vb.entry(row, col);
      }
    }
    a[16][v] = 1.0;
  }
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) b[row * 4 + col] = box.entry(row, col);
  }
  b[16] = 1.0;

  const detail::Phase1Result solved =
      detail::phase1_feasibility(a, b, /*max_iters=*/10000);
  return solved.objective <= tol;
}

}  // namespace hardybox
