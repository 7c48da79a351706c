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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hardybox/box.hpp"
#include "hardybox/errors.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/local_randomness.hpp"
#include "hardybox/rng.hpp"

namespace {

using hardybox::all_cases;
using hardybox::Bit;
using hardybox::CaseFamily;
using hardybox::classify;
using hardybox::EmptyFamily;
using hardybox::hardy_box;
using hardybox::HardyCoefficients;
using hardybox::input_bit;
using hardybox::input_label_from_string;
using hardybox::input_side;
using hardybox::InputLabel;
using hardybox::InvalidWeights;
using hardybox::is_locally_random;
using hardybox::kAllInputs;
using hardybox::LinearCondition;
using hardybox::PreconditionError;
using hardybox::randomness_case;
using hardybox::randomness_condition_pair;
using hardybox::randomness_conditions;
using hardybox::RandomnessCase;
using hardybox::Rng;
using hardybox::sample_case;
using hardybox::Side;
using hardybox::solve_case;
using hardybox::to_string;

// --- small dense linear algebra used as an independent cross-check ------

// One equation over the six weights: coeffs . c = rhs.
using Row = std::array<double, 7>;  // six coefficients then the rhs

Row row_of(const LinearCondition& cond) {
  Row r{};
  for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(i)] = cond.coeffs[static_cast<std::size_t>(i)];
  r[6] = cond.rhs;
  return r;
}

Row normalization_row() {
  return {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
}

// Reduced row echelon form over the first `cols` columns (the remaining
// entries ride along as right-hand sides). Returns the pivot columns.
std::vector<int> reduced_echelon(std::vector<Row>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t lead = 0;
  for (int col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t best = lead;
    for (std::size_t r = lead; r < rows.size(); ++r) {
      if (std::abs(rows[r][static_cast<std::size_t>(col)]) >
          std::abs(rows[best][static_cast<std::size_t>(col)])) {
        best = r;
      }
    }
    if (std::abs(rows[best][static_cast<std::size_t>(col)]) < 1e-10) continue;
    std::swap(rows[lead], rows[best]);
    const double inv = 1.0 / rows[lead][static_cast<std::size_t>(col)];
    for (double& v : rows[lead]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead) continue;
      const double f = rows[r][static_cast<std::size_t>(col)];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < rows[r].size(); ++k) {
        rows[r][k] -= f * rows[lead][k];
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int rank_of(std::vector<Row> rows, int cols) {
  return static_cast<int>(reduced_echelon(rows, cols).size());
}

// The equations of a case straight from the one-per-input conditions plus
// normalization -- built here without touching CaseFamily internals.
std::vector<Row> case_equations(const RandomnessCase& c) {
  std::vector<Row> rows;
  for (const InputLabel input : c.inputs) rows.push_back(row_of(randomness_conditions(input)));
  rows.push_back(normalization_row());
  return rows;
}

double dot6(const Row& row, const std::array<double, 6>& x) {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += row[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  return s;
}

// Family direction j as a vector over the six weights.
std::array<double, 6> family_direction(const CaseFamily& family, std::size_t j) {
  std::array<double, 6> dir{};
  for (int i = 0; i < 6; ++i) {
    dir[static_cast<std::size_t>(i)] = family.coefficients()[static_cast<std::size_t>(i)][j];
  }
  return dir;
}

int weight_index(const std::string& name) {
  REQUIRE(name.size() == 2);
  REQUIRE(name[0] == 'c');
  const int idx = name[1] - '1';
  REQUIRE(idx >= 0);
  REQUIRE(idx < 6);
  return idx;
}

std::set<std::string> label_set(const std::vector<InputLabel>& inputs) {
  std::set<std::string> out;
  for (const InputLabel input : inputs) out.insert(to_string(input));
  return out;
}

}  // namespace

TEST_SUITE("local_randomness") {

TEST_CASE("input labels round-trip through their text names") {
  CHECK(to_string(InputLabel::A0) == "0A");
  CHECK(to_string(InputLabel::A1) == "1A");
  CHECK(to_string(InputLabel::B0) == "0B");
  CHECK(to_string(InputLabel::B1) == "1B");
  for (const InputLabel input : kAllInputs) {
    CHECK(input_label_from_string(to_string(input)) == input);
  }
  CHECK_THROWS_AS(input_label_from_string("A0"), PreconditionError);
  CHECK_THROWS_AS(input_label_from_string("2A"), PreconditionError);
  CHECK_THROWS_AS(input_label_from_string(""), PreconditionError);

  CHECK(input_side(InputLabel::A0) == Side::Alice);
  CHECK(input_side(InputLabel::A1) == Side::Alice);
  CHECK(input_side(InputLabel::B0) == Side::Bob);
  CHECK(input_side(InputLabel::B1) == Side::Bob);
  CHECK(input_bit(InputLabel::A0) == Bit(0));
  CHECK(input_bit(InputLabel::A1) == Bit(1));
  CHECK(input_bit(InputLabel::B0) == Bit(0));
  CHECK(input_bit(InputLabel::B1) == Bit(1));
}

TEST_CASE("randomness conditions have the expected coefficient rows") {
  const std::map<InputLabel, std::array<double, 6>> expected{
      {InputLabel::A0, {1.0, 1.0, 0.0, 0.0, 0.0, 0.5}},
      {InputLabel::A1, {0.0, 0.0, 1.0, 0.0, 0.0, 0.5}},
      {InputLabel::B0, {0.0, 0.0, 1.0, 1.0, 0.0, 0.5}},
      {InputLabel::B1, {1.0, 0.0, 0.0, 0.0, 0.0, 0.5}},
  };
  for (const auto& [input, coeffs] : expected) {
    const LinearCondition cond = randomness_conditions(input);
    CHECK(cond.coeffs == coeffs);
    CHECK(cond.rhs == 0.5);
  }

  // Residual and tolerance behavior on a concrete weight vector.
  const HardyCoefficients even(0.25, 0.0, 0.25, 0.0, 0.0, 0.5);
  for (const InputLabel input : kAllInputs) {
    CHECK(randomness_conditions(input).residual(even) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(randomness_conditions(input).holds(even));
  }
  const HardyCoefficients skew(0.4, 0.0, 0.2, 0.1, 0.1, 0.2);
  CHECK(randomness_conditions(InputLabel::A0).residual(skew) ==
        doctest::Approx(0.0));  // 0.4 + 0.1 = 0.5
  CHECK(randomness_conditions(InputLabel::A1).residual(skew) ==
        doctest::Approx(-0.2));  // 0.2 + 0.1 - 0.5
  CHECK_FALSE(randomness_conditions(InputLabel::A1).holds(skew));
  CHECK(randomness_conditions(InputLabel::A1).holds(skew, 0.25));
}

TEST_CASE("each condition pairs with its complement over the weights") {
  for (const InputLabel input : kAllInputs) {
    const auto pair = randomness_condition_pair(input);
    const LinearCondition primary = randomness_conditions(input);
    CHECK(pair[0].coeffs == primary.coeffs);
    CHECK(pair[0].rhs == primary.rhs);
    for (int i = 0; i < 6; ++i) {
      CHECK(pair[0].coeffs[static_cast<std::size_t>(i)] +
                pair[1].coeffs[static_cast<std::size_t>(i)] ==
            doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(pair[0].rhs + pair[1].rhs == doctest::Approx(1.0).epsilon(1e-15));

    // Given normalization, the two residuals are exact negatives.
    const HardyCoefficients w(0.3, 0.05, 0.25, 0.05, 0.05, 0.3);
    CHECK(pair[0].residual(w) + pair[1].residual(w) ==
          doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("the fifteen cases enumerate every nonempty input subset") {
  const std::array<std::vector<InputLabel>, 15> expected{{
      {InputLabel::A0, InputLabel::A1, InputLabel::B0, InputLabel::B1},
      {InputLabel::A0, InputLabel::A1, InputLabel::B0},
      {InputLabel::A0, InputLabel::A1, InputLabel::B1},
      {InputLabel::A0, InputLabel::B0, InputLabel::B1},
      {InputLabel::A1, InputLabel::B0, InputLabel::B1},
      {InputLabel::A0, InputLabel::A1},
      {InputLabel::B0, InputLabel::B1},
      {InputLabel::A1, InputLabel::B1},
      {InputLabel::A0, InputLabel::B0},
      {InputLabel::A0, InputLabel::B1},
      {InputLabel::A1, InputLabel::B0},
      {InputLabel::A0},
      {InputLabel::A1},
      {InputLabel::B0},
      {InputLabel::B1},
  }};
  const auto& cases = all_cases();
  REQUIRE(cases.size() == 15);
  std::set<std::set<std::string>> seen;
  for (int i = 0; i < 15; ++i) {
    CHECK(cases[static_cast<std::size_t>(i)].index == i + 1);
    CHECK(cases[static_cast<std::size_t>(i)].inputs ==
          expected[static_cast<std::size_t>(i)]);
    CHECK(randomness_case(i + 1).inputs == expected[static_cast<std::size_t>(i)]);
    seen.insert(label_set(cases[static_cast<std::size_t>(i)].inputs));
  }
  CHECK(seen.size() == 15);  // all distinct, hence every nonempty subset
  CHECK_THROWS_AS(randomness_case(0), PreconditionError);
  CHECK_THROWS_AS(randomness_case(16), PreconditionError);
  CHECK_THROWS_AS(randomness_case(-3), PreconditionError);
}

TEST_CASE("case families expose the expected free parameters") {
  const std::map<int, std::vector<std::string>> expected_free{
      {1, {"c6"}},
      {2, {"c1", "c6"}},
      {3, {"c6"}},
      {4, {"c3", "c6"}},
      {5, {"c6"}},
      {6, {"c1", "c6"}},
      {7, {"c3", "c6"}},
      {8, {"c6"}},
      {9, {"c1", "c3", "c6"}},
      {10, {"c3", "c4", "c6"}},
      {11, {"c1", "c2", "c6"}},
      {12, {"c1", "c3", "c4", "c6"}},
      {13, {"c1", "c4", "c5", "c6"}},
      {14, {"c1", "c3", "c5", "c6"}},
      {15, {"c3", "c4", "c5", "c6"}},
  };
  for (const auto& [index, names] : expected_free) {
    const CaseFamily family = solve_case(randomness_case(index));
    CHECK(family.case_index() == index);
    CHECK(family.free_names() == names);
    CHECK(family.free_count() == names.size());
    CHECK(family.free_names().back() == "c6");  // nonlocal weight always free
  }
}

TEST_CASE("family members match hand-solved instances") {
  // Two inputs random (0A and 0B): free c1, c3, c6.
  const CaseFamily nine = solve_case(randomness_case(9));
  const std::array<double, 3> t9{0.1, 0.2, 0.3};
  const HardyCoefficients m9 = nine.member(t9);
  CHECK(m9.c1 == doctest::Approx(0.10).epsilon(1e-15));
  CHECK(m9.c2 == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(m9.c3 == doctest::Approx(0.20).epsilon(1e-15));
  CHECK(m9.c4 == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(m9.c5 == doctest::Approx(0.00).epsilon(1e-15));
  CHECK(m9.c6 == doctest::Approx(0.30).epsilon(1e-15));

  // All four inputs random: only the nonlocal weight is free.
  const CaseFamily one = solve_case(randomness_case(1));
  const std::array<double, 1> t1{0.2};
  const HardyCoefficients m1 = one.member(t1);
  CHECK(m1.c1 == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(m1.c2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(m1.c3 == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(m1.c4 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(m1.c5 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(m1.c6 == doctest::Approx(0.2).epsilon(1e-15));

  // Dependent weight driven negative: c2 = (1-c6)/2 - c1 < 0.
  const std::array<double, 3> bad{0.4, 0.1, 0.3};
  CHECK_THROWS_AS(nine.member(bad), InvalidWeights);
  // Wrong arity.
  const std::array<double, 1> short_args{0.1};
  CHECK_THROWS_AS(nine.member(short_args), PreconditionError);
}

TEST_CASE("families report which weight combinations vanish identically") {
  const CaseFamily one = solve_case(randomness_case(1));
  CHECK(one.forces_zero({0.0, 0.0, 0.0, 1.0, 1.0, 0.0}));  // c4 + c5
  CHECK(one.forces_zero({0.0, 1.0, 0.0, 0.0, 1.0, 0.0}));  // c2 + c5
  CHECK(one.forces_zero({0.0, 1.0, 0.0, 0.0, 0.0, 0.0}));  // c2 alone
  CHECK_FALSE(one.forces_zero({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}));

  const CaseFamily nine = solve_case(randomness_case(9));
  CHECK(nine.forces_zero({0.0, 0.0, 0.0, 0.0, 1.0, 0.0}));  // c5
  CHECK_FALSE(nine.forces_zero({0.0, 0.0, 0.0, 1.0, 1.0, 0.0}));
  CHECK_FALSE(nine.forces_zero({0.0, 1.0, 0.0, 0.0, 1.0, 0.0}));
}

// For every case: the family's offset solves the case equations, every
// free direction lies in their kernel, the directions are independent,
// and dimension counting shows the family is the whole solution set.
// Cases 6, 7 and the three-input/two-input collapses (3, 5, 8) lose
// solution-space dimensions to nonnegativity; a certificate row -- an
// explicit combination of the equations with nonnegative weight
// coefficients and zero right side -- proves the extra weights must vanish
// on any nonnegative solution.
TEST_CASE("case families cover exactly the nonnegative solution sets") {
  struct Collapse {
    std::array<InputLabel, 2> subtract;
    std::array<double, 6> forced;  // expected certificate coefficients
  };
  const std::map<int, Collapse> collapses{
      {3, {{InputLabel::A0, InputLabel::A1}, {0, 0, 0, 1, 1, 0}}},
      {5, {{InputLabel::B0, InputLabel::B1}, {0, 1, 0, 0, 1, 0}}},
      {6, {{InputLabel::A0, InputLabel::A1}, {0, 0, 0, 1, 1, 0}}},
      {7, {{InputLabel::B0, InputLabel::B1}, {0, 1, 0, 0, 1, 0}}},
      {8, {{InputLabel::A1, InputLabel::B1}, {0, 1, 0, 1, 1, 0}}},
  };

  for (int index = 1; index <= 15; ++index) {
    CAPTURE(index);
    const RandomnessCase c = randomness_case(index);
    const CaseFamily family = solve_case(c);
    const std::vector<Row> equations = case_equations(c);
    const int d_fam = static_cast<int>(family.free_count());

    // Offset solves the equations; directions lie in the kernel.
    for (const Row& eq : equations) {
      CHECK(dot6(eq, family.offsets()) == doctest::Approx(eq[6]).epsilon(1e-13));
      for (std::size_t j = 0; j < family.free_count(); ++j) {
        CHECK(dot6(eq, family_direction(family, j)) ==
              doctest::Approx(0.0).epsilon(1e-13));
      }
    }

    // Directions are linearly independent.
    std::vector<Row> dir_rows;
    for (std::size_t j = 0; j < family.free_count(); ++j) {
      Row r{};
      const std::array<double, 6> dir = family_direction(family, j);
      std::copy(dir.begin(), dir.end(), r.begin());
      dir_rows.push_back(r);
    }
    CHECK(rank_of(dir_rows, 6) == d_fam);

    // Each free parameter acts as the identity on its own weight.
    for (std::size_t j = 0; j < family.free_count(); ++j) {
      const int idx = weight_index(family.free_names()[j]);
      const std::array<double, 6> dir = family_direction(family, j);
      CHECK(dir[static_cast<std::size_t>(idx)] == doctest::Approx(1.0));
      CHECK(family.offsets()[static_cast<std::size_t>(idx)] ==
            doctest::Approx(0.0));
    }

    std::vector<Row> augmented = equations;
    const auto it = collapses.find(index);
    if (it == collapses.end()) {
      // No collapse: the affine solution space already has the family's
      // dimension.
      CHECK(rank_of(equations, 6) == 6 - d_fam);
    } else {
      // Certificate: normalization minus two of the case's conditions has
      // nonnegative coefficients and zero right side, so those weights are
      // zero on every nonnegative solution.
      Row combo = normalization_row();
      for (const InputLabel input : it->second.subtract) {
        CHECK(std::find(c.inputs.begin(), c.inputs.end(), input) !=
              c.inputs.end());
        const Row sub = row_of(randomness_conditions(input));
        for (std::size_t k = 0; k < combo.size(); ++k) combo[k] -= sub[k];
      }
      for (int i = 0; i < 6; ++i) {
        CHECK(combo[static_cast<std::size_t>(i)] ==
              doctest::Approx(it->second.forced[static_cast<std::size_t>(i)])
                  .epsilon(1e-15));
      }
      CHECK(combo[6] == doctest::Approx(0.0).epsilon(1e-15));

      // The family indeed pins each certified weight at zero ...
      for (int i = 0; i < 6; ++i) {
        if (it->second.forced[static_cast<std::size_t>(i)] == 0.0) continue;
        std::array<double, 6> selector{};
        selector[static_cast<std::size_t>(i)] = 1.0;
        CHECK(family.forces_zero(selector));
        Row zero_row{};
        zero_row[static_cast<std::size_t>(i)] = 1.0;
        augmented.push_back(zero_row);
      }
      // ... and with those zeros adjoined the dimensions match exactly.
      CHECK(rank_of(augmented, 6) == 6 - d_fam);
    }

    // Round trip: random members satisfy the equations, stay nonnegative,
    // and reproduce their own free parameter values.
    Rng rng(1000 + static_cast<std::uint64_t>(index));
    int produced = 0;
    for (int attempt = 0; attempt < 400 && produced < 25; ++attempt) {
      const double c6 = 0.02 + 0.9 * rng.uniform();
      const double h = (1.0 - c6) / 2.0;
      std::vector<double> t(family.free_count());
      for (std::size_t j = 0; j + 1 < t.size(); ++j) t[j] = h * rng.uniform();
      t.back() = c6;
      HardyCoefficients member(1, 0, 0, 0, 0, 0);
      try {
        member = family.member(t);
      } catch (const InvalidWeights&) {
        continue;  // dependent weight left the simplex; redraw
      }
      ++produced;
      const std::array<double, 6> x = member.as_array();
      for (const Row& eq : equations) {
        CHECK(dot6(eq, x) == doctest::Approx(eq[6]).epsilon(1e-12));
      }
      for (const double v : x) CHECK(v >= 0.0);
      for (std::size_t j = 0; j < family.free_count(); ++j) {
        const int idx = weight_index(family.free_names()[j]);
        CHECK(x[static_cast<std::size_t>(idx)] ==
              doctest::Approx(t[j]).epsilon(1e-12));
      }
    }
    CHECK(produced >= 10);
  }
}

TEST_CASE("sampled members satisfy their case and stay reproducible") {
  for (int index = 1; index <= 15; ++index) {
    CAPTURE(index);
    const RandomnessCase c = randomness_case(index);
    const std::vector<HardyCoefficients> members = sample_case(c, 40, 99);
    REQUIRE(members.size() == 40);
    for (const HardyCoefficients& m : members) {
      for (const InputLabel input : c.inputs) {
        CHECK(randomness_conditions(input).holds(m, 1e-12));
      }
      CHECK(m.c6 > 0.01);
      CHECK(m.c6 <= 1.0);
      double sum = 0.0;
      for (const double v : m.as_array()) {
        CHECK(v >= 0.0);
        sum += v;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Determinism: the same seed reproduces the same members.
    const std::vector<HardyCoefficients> again = sample_case(c, 40, 99);
    REQUIRE(again.size() == members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      CHECK(members[i].as_array() == again[i].as_array());
    }
    // A different seed moves at least the first member.
    const std::vector<HardyCoefficients> other = sample_case(c, 1, 100);
    REQUIRE(other.size() == 1);
    CHECK(other[0].as_array() != members[0].as_array());
  }
  CHECK(sample_case(randomness_case(1), 0, 5).empty());
  CHECK_THROWS_AS(sample_case(randomness_case(1), -1, 5), PreconditionError);
}

TEST_CASE("exact-classification witnesses hit their case and nothing more") {
  struct Witness {
    int index;
    std::array<double, 6> weights;
  };
  const std::vector<Witness> witnesses{
      {1, {0.40, 0.00, 0.40, 0.00, 0.00, 0.2}},
      {2, {0.10, 0.30, 0.40, 0.00, 0.00, 0.2}},
      {4, {0.40, 0.00, 0.10, 0.30, 0.00, 0.2}},
      {9, {0.10, 0.30, 0.20, 0.20, 0.00, 0.2}},
      {10, {0.40, 0.00, 0.10, 0.10, 0.20, 0.2}},
      {11, {0.10, 0.10, 0.40, 0.00, 0.20, 0.2}},
      {12, {0.10, 0.30, 0.15, 0.05, 0.20, 0.2}},
      {13, {0.05, 0.20, 0.40, 0.10, 0.05, 0.2}},
      {14, {0.10, 0.20, 0.20, 0.20, 0.10, 0.2}},
      {15, {0.40, 0.10, 0.10, 0.10, 0.10, 0.2}},
  };
  for (const Witness& w : witnesses) {
    CAPTURE(w.index);
    const RandomnessCase c = randomness_case(w.index);
    const HardyCoefficients coeffs = HardyCoefficients::from_array(w.weights);
    // The witness belongs to the case family ...
    for (const InputLabel input : c.inputs) {
      CHECK(randomness_conditions(input).holds(coeffs, 1e-12));
    }
    // ... and its box is random on exactly the case's inputs.
    const std::vector<InputLabel> got = classify(hardy_box(coeffs));
    CHECK(label_set(got) == label_set(c.inputs));
  }
}

TEST_CASE("collapsing cases force randomness beyond their own inputs") {
  // Imposing these input sets forces more inputs random than requested, so
  // no box is random on exactly these sets; the closures below are what
  // the sampled members must (at least) exhibit.
  const std::map<int, std::set<std::string>> closures{
      {3, {"0A", "1A", "0B", "1B"}},
      {5, {"0A", "1A", "0B", "1B"}},
      {8, {"0A", "1A", "0B", "1B"}},
      {6, {"0A", "1A", "0B"}},
      {7, {"0A", "0B", "1B"}},
  };
  for (const auto& [index, closure] : closures) {
    CAPTURE(index);
    const auto members = sample_case(randomness_case(index), 10, 7);
    for (const HardyCoefficients& m : members) {
      const std::set<std::string> got = label_set(classify(hardy_box(m)));
      for (const std::string& label : closure) {
        CHECK(got.count(label) == 1);
      }
    }
  }
}

TEST_CASE("local randomness is read off the box marginals") {
  // Extremal nonlocal boxes have uniform marginals everywhere.
  for (int bits = 0; bits < 8; ++bits) {
    const hardybox::BipartiteBox box = hardybox::nonlocal_vertex(
        Bit((bits >> 2) & 1), Bit((bits >> 1) & 1), Bit(bits & 1));
    CHECK(classify(box).size() == 4);
    for (const InputLabel input : kAllInputs) {
      CHECK(is_locally_random(box, input));
    }
  }
  // Deterministic boxes are never random on any input.
  for (int bits = 0; bits < 16; ++bits) {
    const hardybox::BipartiteBox box = hardybox::local_vertex(
        Bit((bits >> 3) & 1), Bit((bits >> 2) & 1), Bit((bits >> 1) & 1),
        Bit(bits & 1));
    CHECK(classify(box).empty());
    for (const InputLabel input : kAllInputs) {
      CHECK_FALSE(is_locally_random(box, input));
    }
  }
  // A slightly biased mixture fails the default tolerance but passes a
  // loose one.
  const hardybox::BipartiteBox tilted = mix(hardybox::ConvexWeights(
      {{hardybox::VertexId::nonlocal(Bit(0), Bit(0), Bit(1)), 0.999},
       {hardybox::VertexId::local(Bit(0), Bit(0), Bit(0), Bit(0)), 0.001}}));
  CHECK_FALSE(is_locally_random(tilted, InputLabel::A0));
  CHECK(is_locally_random(tilted, InputLabel::A0, 0.01));
  CHECK(classify(tilted, 0.01).size() == 4);
  CHECK(classify(tilted).empty());
}

}  // TEST_SUITE
