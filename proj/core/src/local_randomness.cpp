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

#include "hardybox/local_randomness.hpp"

#include <cmath>
#include <utility>

#include "hardybox/rng.hpp"

namespace hardybox {

std::string to_string(InputLabel input) {
  switch (input) {
    case InputLabel::A0:
      return "0A";
    case InputLabel::A1:
      return "1A";
    case InputLabel::B0:
      return "0B";
    case InputLabel::B1:
      return "1B";
  }
  throw PreconditionError("unknown input label");
}

InputLabel input_label_from_string(const std::string& text) {
  for (const InputLabel input : kAllInputs) {
    if (to_string(input) == text) return input;
  }
  throw PreconditionError("unrecognized input label: " + text);
}

Side input_side(InputLabel input) {
  return input == InputLabel::A0 || input == InputLabel::A1 ? Side::Alice
                                                            : Side::Bob;
}

Bit input_bit(InputLabel input) {
  return Bit(input == InputLabel::A1 || input == InputLabel::B1 ? 1 : 0);
}

double LinearCondition::residual(const HardyCoefficients& c) const {
  const std::array<double, 6> v = c.as_array();
  double lhs = 0.0;
  for (int i = 0; i < 6; ++i) lhs += coeffs[i] * v[i];
  return lhs - rhs;
}

bool LinearCondition::holds(const HardyCoefficients& c, double tol) const {
  return std::abs(residual(c)) <= tol;
}

LinearCondition randomness_conditions(InputLabel input) {
  switch (input) {
    case InputLabel::A0:
      return {{1.0, 1.0, 0.0, 0.0, 0.0, 0.5}, 0.5};
    case InputLabel::A1:
      return {{0.0, 0.0, 1.0, 0.0, 0.0, 0.5}, 0.5};
    case InputLabel::B0:
      return {{0.0, 0.0, 1.0, 1.0, 0.0, 0.5}, 0.5};
    case InputLabel::B1:
      return {{1.0, 0.0, 0.0, 0.0, 0.0, 0.5}, 0.5};
  }
  throw PreconditionError("unknown input label");
}

std::array<LinearCondition, 2> randomness_condition_pair(InputLabel input) {
  // The companion condition covers the complementary weights; the pair
  // always sums to the normalization c1 + ... + c6 = 1. (The companion of
  // 1B is c2 + c3 + c4 + c5 + c6/2 = 1/2; each weight appears once.)
  const LinearCondition primary = randomness_conditions(input);
  LinearCondition companion{};
  for (int i = 0; i < 5; ++i) companion.coeffs[i] = 1.0 - primary.coeffs[i];
  companion.coeffs[5] = 0.5;
  companion.rhs = 0.5;
  return {primary, companion};
}

RandomnessCase randomness_case(int index) {
  if (index < 1 || index > 15) {
    throw PreconditionError("case index must be in 1..15");
  }
  return all_cases()[index - 1];
}

const std::array<RandomnessCase, 15>& all_cases() {
  using L = InputLabel;
  static const std::array<RandomnessCase, 15> cases = {{
      {1, {L::A0, L::A1, L::B0, L::B1}},
      {2, {L::A0, L::A1, L::B0}},
      {3, {L::A0, L::A1, L::B1}},
      {4, {L::A0, L::B0, L::B1}},
      {5, {L::A1, L::B0, L::B1}},
      {6, {L::A0, L::A1}},
      {7, {L::B0, L::B1}},
      {8, {L::A1, L::B1}},
      {9, {L::A0, L::B0}},
      {10, {L::A0, L::B1}},
      {11, {L::A1, L::B0}},
      {12, {L::A0}},
      {13, {L::A1}},
      {14, {L::B0}},
      {15, {L::B1}},
  }};
  return cases;
}

CaseFamily::CaseFamily(RandomnessCase c, std::vector<std::string> free_names,
                       std::array<double, 6> offsets,
                       std::array<std::vector<double>, 6> coeffs)
    : case_(std::move(c)),
      free_names_(std::move(free_names)),
      offsets_(offsets),
      coeffs_(std::move(coeffs)) {
  for (const auto& row : coeffs_) {
    if (row.size() != free_names_.size()) {
      throw PreconditionError("family coefficient row size mismatch");
    }
  }
}

std::vector<LinearCondition> CaseFamily::equalities() const {
  std::vector<LinearCondition> out;
  out.reserve(case_.inputs.size() + 1);
  for (const InputLabel input : case_.inputs) {
    out.push_back(randomness_conditions(input));
  }
  out.push_back({{1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 1.0});
  return out;
}

HardyCoefficients CaseFamily::member(std::span<const double> free_values) const {
  if (free_values.size() != free_names_.size()) {
    throw PreconditionError("wrong number of free parameter values");
  }
  std::array<double, 6> c{};
  for (int i = 0; i < 6; ++i) {
    double v = offsets_[i];
    for (std::size_t j = 0; j < free_values.size(); ++j) {
      v += coeffs_[i][j] * free_values[j];
    }
    c[i] = v;
  }
  return HardyCoefficients::from_array(c);
}

bool CaseFamily::forces_zero(const std::array<double, 6>& selector) const {
  double constant = 0.0;
  for (int i = 0; i < 6; ++i) constant += selector[i] * offsets_[i];
  if (std::abs(constant) > 1e-15) return false;
  for (std::size_t j = 0; j < free_names_.size(); ++j) {
    double slope = 0.0;
    for (int i = 0; i < 6; ++i) slope += selector[i] * coeffs_[i][j];
    if (std::abs(slope) > 1e-15) return false;
  }
  return true;
}

namespace {

// Builds the affine description of a family. Rows are the six weights; the
// free parameters are a subset of the weights themselves, c6 always last.
// `h` stands for the repeated quantity (1 - c6)/2, i.e. offset 1/2 with
// slope -1/2 on c6.
struct FamilyBuilder {
  std::vector<std::string> names;
  std::array<double, 6> offsets{};
  std::array<std::vector<double>, 6> coeffs;

  explicit FamilyBuilder(std::vector<std::string> free_names)
      : names(std::move(free_names)) {
    for (auto& row : coeffs) row.assign(names.size(), 0.0);
  }

  std::size_t param(const std::string& name) const {
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (names[j] == name) return j;
    }
    throw PreconditionError("unknown free parameter " + name);
  }

  // c_i = the free parameter with the same name.
  void self(int i, const std::string& name) { coeffs[i][param(name)] = 1.0; }

  // c_i = h - (sum of listed free parameters).
  void h_minus(int i, const std::vector<std::string>& subtract) {
    offsets[i] = 0.5;
    coeffs[i][param("c6")] = -0.5;
    for (const auto& name : subtract) coeffs[i][param(name)] -= 1.0;
  }
};

CaseFamily build_family(const RandomnessCase& c) {
  // The four conditions pin c3 (1A), c1 (1B), and tie c2 to c1 (0A) and c4
  // to c3 (0B); normalization fixes one remaining weight. Families for the
  // 15 cases, with h = (1 - c6)/2:
  switch (c.index) {
    case 1:
    case 3:
    case 5:
    case 8: {
      // Fully pinned: c1 = c3 = h, the rest zero. (For cases 3, 5 and 8
      // normalization plus nonnegativity collapses the leftover weights.)
      FamilyBuilder f({"c6"});
      f.h_minus(0, {});
      f.h_minus(2, {});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 2:
    case 6: {
      FamilyBuilder f({"c1", "c6"});
      f.self(0, "c1");
      f.h_minus(1, {"c1"});
      f.h_minus(2, {});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 4:
    case 7: {
      FamilyBuilder f({"c3", "c6"});
      f.h_minus(0, {});
      f.self(2, "c3");
      f.h_minus(3, {"c3"});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 9: {
      FamilyBuilder f({"c1", "c3", "c6"});
      f.self(0, "c1");
      f.h_minus(1, {"c1"});
      f.self(2, "c3");
      f.h_minus(3, {"c3"});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 10: {
      FamilyBuilder f({"c3", "c4", "c6"});
      f.h_minus(0, {});
      f.self(2, "c3");
      f.self(3, "c4");
      f.h_minus(4, {"c3", "c4"});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 11: {
      FamilyBuilder f({"c1", "c2", "c6"});
      f.self(0, "c1");
      f.self(1, "c2");
      f.h_minus(2, {});
      f.h_minus(4, {"c1", "c2"});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 12: {
      FamilyBuilder f({"c1", "c3", "c4", "c6"});
      f.self(0, "c1");
      f.h_minus(1, {"c1"});
      f.self(2, "c3");
      f.self(3, "c4");
      f.h_minus(4, {"c3", "c4"});
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 13: {
      FamilyBuilder f({"c1", "c4", "c5", "c6"});
      f.self(0, "c1");
      f.h_minus(1, {"c1", "c4", "c5"});
      f.h_minus(2, {});
      f.self(3, "c4");
      f.self(4, "c5");
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 14: {
      FamilyBuilder f({"c1", "c3", "c5", "c6"});
      f.self(0, "c1");
      f.h_minus(1, {"c1", "c5"});
      f.self(2, "c3");
      f.h_minus(3, {"c3"});
      f.self(4, "c5");
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    case 15: {
      FamilyBuilder f({"c3", "c4", "c5", "c6"});
      f.h_minus(0, {});
      f.h_minus(1, {"c3", "c4", "c5"});
      f.self(2, "c3");
      f.self(3, "c4");
      f.self(4, "c5");
      f.self(5, "c6");
      return CaseFamily(c, f.names, f.offsets, f.coeffs);
    }
    default:
      throw PreconditionError("case index must be in 1..15");
  }
}

}  // namespace

CaseFamily solve_case(const RandomnessCase& c) {
  const CaseFamily family = build_family(c);

  // Cross-check the family against the conditions it claims to solve: probe
  // members at a few deterministic parameter choices must satisfy every
  // binding equality. An inconsistent table is a bug, not a data point.
  const std::vector<LinearCondition> binding = family.equalities();
  int checked = 0;
  for (const double c6 : {0.3, 1.0}) {
    const double h = 0.5 * (1.0 - c6);
    for (const double fill : {0.0, 0.5 * h}) {
      std::vector<double> values(family.free_count(), fill);
      values.back() = c6;
      try {
        const HardyCoefficients member = family.member(values);
        for (const LinearCondition& eq : binding) {
          if (!eq.holds(member, 1e-12)) {
            throw Error("case family disagrees with its conditions");
          }
        }
        ++checked;
      } catch (const InvalidWeights&) {
        // Probe left the simplex; fine, try the next one.
      }
    }
  }
  if (checked == 0) {
    throw EmptyFamily("no valid probe member found for the case family");
  }
  return family;
}

std::vector<HardyCoefficients> sample_case(const RandomnessCase& c, int n,
                                           std::uint64_t seed) {
  if (n < 0) throw PreconditionError("sample count must be nonnegative");
  const CaseFamily family = solve_case(c);
  Rng rng(seed);
  std::vector<HardyCoefficients> out;
  out.reserve(static_cast<std::size_t>(n));
  const std::size_t k = family.free_count();
  long tries_left = 100000L + 100L * static_cast<long>(n);
  std::vector<double> values(k, 0.0);
  while (out.size() < static_cast<std::size_t>(n)) {
    if (--tries_left < 0) {
      throw EmptyFamily("case family sampling kept leaving the simplex");
    }
    const double c6 = 0.01 + (1.0 - rng.uniform()) * 0.99;  // (0.01, 1]
    const double h = 0.5 * (1.0 - c6);
    for (std::size_t j = 0; j + 1 < k; ++j) values[j] = rng.uniform(0.0, h);
    values[k - 1] = c6;
    try {
      out.push_back(family.member(values));
    } catch (const InvalidWeights&) {
      continue;  // dependent weight went negative; redraw
    }
  }
  return out;
}

bool is_locally_random(const BipartiteBox& box, InputLabel input, double tol) {
  const Side side = input_side(input);
  const Bit in = input_bit(input);
  return std::abs(marginal(box, side, in, Bit(0)) - 0.5) <= tol &&
         std::abs(marginal(box, side, in, Bit(1)) - 0.5) <= tol;
}

std::vector<InputLabel> classify(const BipartiteBox& box, double tol) {
  std::vector<InputLabel> out;
  for (const InputLabel input : kAllInputs) {
    if (is_locally_random(box, input, tol)) out.push_back(input);
  }
  return out;
}

}  // namespace hardybox
