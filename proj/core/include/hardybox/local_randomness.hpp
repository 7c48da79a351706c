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
#include <span>
#include <string>
#include <vector>

#include "hardybox/box.hpp"
#include "hardybox/hardy.hpp"

namespace hardybox {

/// One of the four observable inputs: party (A = Alice, B = Bob) plus the
/// input bit, written 0A, 1A, 0B, 1B.
enum class InputLabel { A0, A1, B0, B1 };

inline constexpr std::array<InputLabel, 4> kAllInputs{
    InputLabel::A0, InputLabel::A1, InputLabel::B0, InputLabel::B1};

std::string to_string(InputLabel input);
InputLabel input_label_from_string(const std::string& text);
Side input_side(InputLabel input);
Bit input_bit(InputLabel input);

/// Linear equality  sum_i coeffs[i] * c_i = rhs  over the six decomposition
/// weights.
struct LinearCondition {
  std::array<double, 6> coeffs;
  double rhs;

  double residual(const HardyCoefficients& c) const;
  bool holds(const HardyCoefficients& c, double tol = 1e-12) const;
};

/// The single independent equality that makes `input` an unbiased coin on a
/// box of the decomposition:
///
///   0A: c1 + c2 + c6/2 = 1/2        1A: c3 + c6/2 = 1/2
///   0B: c3 + c4 + c6/2 = 1/2        1B: c1 + c6/2 = 1/2
LinearCondition randomness_conditions(InputLabel input);

/// Both equalities for the input: the one above plus its complement over
/// the remaining weights. Given normalization each implies the other, and
/// the two always sum to c1 + ... + c6 = 1.
std::array<LinearCondition, 2> randomness_condition_pair(InputLabel input);

/// One of the 15 nonempty subsets of inputs required to be locally random.
struct RandomnessCase {
  int index;  // 1..15
  std::vector<InputLabel> inputs;
};

RandomnessCase randomness_case(int index);
const std::array<RandomnessCase, 15>& all_cases();

/// General solution of a case: the set of weight vectors for which every
/// input in the case is an unbiased coin.
///
/// Each weight is affine in the named free parameters (c6 is always free
/// and listed last):  c_i = offset[i] + sum_j coeff[i][j] * t_j.  The
/// nonnegativity bounds on dependent weights keep the family inside the
/// simplex. Solving a case verifies a set of probe members against the
/// randomness conditions and refuses to return an inconsistent family.
class CaseFamily {
 public:
  CaseFamily(RandomnessCase c, std::vector<std::string> free_names,
             std::array<double, 6> offsets,
             std::array<std::vector<double>, 6> coeffs);

  int case_index() const { return case_.index; }
  const std::vector<InputLabel>& inputs() const { return case_.inputs; }
  const std::vector<std::string>& free_names() const { return free_names_; }
  std::size_t free_count() const { return free_names_.size(); }
  const std::array<double, 6>& offsets() const { return offsets_; }
  const std::array<std::vector<double>, 6>& coefficients() const {
    return coeffs_;
  }

  /// The binding equalities: the case's randomness conditions plus
  /// normalization.
  std::vector<LinearCondition> equalities() const;

  /// Member for given free parameter values (in free_names order).
  /// Throws InvalidWeights when a dependent weight turns negative.
  HardyCoefficients member(std::span<const double> free_values) const;

  /// True when the given expression over the weights (a row of weights
  /// summed with `selector`) is identically zero on the family.
  bool forces_zero(const std::array<double, 6>& selector) const;

 private:
  RandomnessCase case_;
  std::vector<std::string> free_names_;
  std::array<double, 6> offsets_;
  std::array<std::vector<double>, 6> coeffs_;
};

/// General solution family for a case, derived from the randomness
/// conditions plus normalization and nonnegativity.
CaseFamily solve_case(const RandomnessCase& c);

/// Deterministic members of the case family: the nonlocal weight c6 is
/// drawn from (0.01, 1] and the remaining free weights uniformly from
/// [0, (1-c6)/2] with rejection of members leaving the simplex. Throws
/// EmptyFamily if no member can be found.
std::vector<HardyCoefficients> sample_case(const RandomnessCase& c, int n,
                                           std::uint64_t seed);

/// True when both conditional marginals of `input` equal 1/2 within `tol`.
bool is_locally_random(const BipartiteBox& box, InputLabel input,
                       double tol = kDefaultTol);

/// All inputs that are locally random, in 0A, 1A, 0B, 1B order.
std::vector<InputLabel> classify(const BipartiteBox& box,
                                 double tol = kDefaultTol);

}  // namespace hardybox
