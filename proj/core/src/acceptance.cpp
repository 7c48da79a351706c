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

#include "hardybox/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

#include "hardybox/box.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/info_causality.hpp"
#include "hardybox/local_randomness.hpp"
#include "hardybox/oracles.hpp"
#include "hardybox/rng.hpp"

namespace hardybox::acceptance {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

/// Random interior point of the standard 5-simplex (all six weights
/// positive, summing to one).
HardyCoefficients random_simplex_point(Rng& rng) {
  std::array<double, 6> g{};
  double sum = 0.0;
  for (double& v : g) {
    v = -std::log(1.0 - rng.uniform()) + 1e-12;
    sum += v;
  }
  for (double& v : g) v /= sum;
  return HardyCoefficients::from_array(g);
}

quantum::TwoQubitState random_state(Rng& rng) {
  return quantum::TwoQubitState(rng.uniform(0.0, 0.5 * kPi),
                                rng.uniform(-kPi, kPi));
}

quantum::MeasurementSetup random_setup(Rng& rng) {
  const auto draw = [&rng] {
    return quantum::Observable(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi));
  };
  return quantum::MeasurementSetup{draw(), draw(), draw(), draw()};
}

struct CheckOutcome {
  bool passed;
  std::string detail;
};

// --- criterion 1: extremal nonlocal construction and vertex taxonomy ----

CheckOutcome check_extremal_box(const Config&) {
  const HardyCoefficients extremal(0.0, 0.0, 0.0, 0.0, 0.0, 1.0);
  const BipartiteBox box = hardy_box(extremal);
  const HardyVerdict verdict = is_hardy(box);
  const BipartiteBox reference = nonlocal_vertex(Bit(0), Bit(0), Bit(1));

  bool exact_entries = true;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      if (box.entry(row, col) != reference.entry(row, col)) {
        exact_entries = false;
      }
    }
  }

  bool vertex_taxonomy = true;
  for (const VertexId& id : all_vertices()) {
    const BipartiteBox vb = vertex_box(id);
    if (!is_no_signaling(vb)) vertex_taxonomy = false;
    const bool expected_local = id.kind == VertexKind::LocalDeterministic;
    if (is_local(vb) != expected_local) vertex_taxonomy = false;
  }

  const bool passed = is_no_signaling(box) && !is_local(box) &&
                      verdict.is_hardy && verdict.success == 0.5 &&
                      exact_entries && vertex_taxonomy;
  return {passed,
          fmt("success=%.17g (exact 0.5 required), no-signaling=%d, "
              "local=%d, entries-exact=%d, 24-vertex taxonomy=%d",
              verdict.success, is_no_signaling(box) ? 1 : 0,
              is_local(box) ? 1 : 0, exact_entries ? 1 : 0,
              vertex_taxonomy ? 1 : 0)};
}

// --- criterion 2: production optimum against the dense-grid reference ---

CheckOutcome check_optimum(const Config& config) {
  const IcOptimum opt =
      max_success_under_ic(config.optimizer_grid, config.optimizer_refine);
  const oracles::DenseGridOptimum ref =
      oracles::ic_grid_reference(config.oracle_resolution);
  const double analytic = 0.5 * (std::sqrt(2.0) - 1.0);

  const double vs_ref = std::abs(opt.success - ref.success);
  const double ref_vs_analytic = std::abs(ref.success - analytic);
  const bool feasible =
      opt.quadratic_lhs[0] <= 1e-9 && opt.quadratic_lhs[1] <= 1e-9;
  const bool passed = vs_ref <= 1e-4 && ref_vs_analytic <= 1e-3 && feasible;
  return {passed,
          fmt("optimizer=%.9f grid-reference=%.9f |diff|=%.3g (<=1e-4), "
              "|reference-analytic|=%.3g (<=1e-3), feasible=%d",
              opt.success, ref.success, vs_ref, ref_vs_analytic,
              feasible ? 1 : 0)};
}

// --- criterion 3: feasibility split of the fifteen cases ----------------

CheckOutcome check_case_split(const Config& config) {
  bool passed = true;
  std::string bad;
  for (int idx = 1; idx <= 15; ++idx) {
    const CaseIcReport report = case_ic_verdict(
        randomness_case(idx), config.case_samples, config.seed + 300 + idx);
    bool ok;
    if (idx <= 8) {
      ok = report.verdict == CaseVerdict::AlwaysViolated &&
           report.violating_samples == report.samples_checked &&
           (report.forces_first_sum_zero || report.forces_second_sum_zero);
    } else {
      ok = report.verdict == CaseVerdict::Feasible && report.witness &&
           report.witness->c6 > 0.0;
      if (ok) {
        const std::array<double, 2> lhs = hardy_ic_lhs(*report.witness);
        ok = lhs[0] <= 0.0 && lhs[1] <= 0.0;
        for (InputLabel input : randomness_case(idx).inputs) {
          if (!randomness_conditions(input).holds(*report.witness, 1e-12)) {
            ok = false;
          }
        }
      }
    }
    if (!ok) {
      passed = false;
      bad += (bad.empty() ? "" : ",") + std::to_string(idx);
    }
  }
  return {passed,
          passed ? fmt("cases 1-8 always violated on %d samples each, "
                       "cases 9-15 feasible with verified witnesses",
                       config.case_samples)
                 : "unexpected verdicts for case(s) " + bad};
}

// --- criterion 4: quantum multistart optimum ----------------------------

CheckOutcome check_quantum_optimum(const Config& config) {
  const quantum::QuantumOptimum q = quantum::max_quantum_hardy(
      config.quantum_starts, config.seed + 400, config.quantum_iterations);
  const double max_res =
      std::max({q.residuals[0], q.residuals[1], q.residuals[2]});
  const bool passed = q.success >= 0.088 && q.success <= 0.0905 &&
                      max_res < 1e-6 && !q.residual_warning;
  return {passed,
          fmt("success=%.9f (in [0.088, 0.0905]), max residual=%.3g "
              "(<1e-6), best start=%d of %d",
              q.success, max_res, q.best_start, config.quantum_starts)};
}

// --- criterion 5: the reference configuration ---------------------------

CheckOutcome check_reference_example(const Config& config) {
  const quantum::ReferenceExample ex = config.example();
  const double max_res =
      std::max({std::abs(ex.values.p00_00), std::abs(ex.values.p11_01),
                std::abs(ex.values.p11_10)});
  const double success_err = std::abs(ex.values.success - 0.075);
  const double box_err = std::abs(ex.box.p(Bit(1), Bit(1), Bit(1), Bit(1)) -
                                  0.075);
  const bool single_random = ex.classification.size() == 1 &&
                             ex.classification[0] == InputLabel::A0;
  const bool passed = max_res < 1e-12 && success_err <= 1e-12 &&
                      box_err <= 1e-12 && single_random && ex.ic.satisfied;
  return {passed,
          fmt("max residual=%.3g (<1e-12), |success-0.075|=%.3g, "
              "matrix-built entry err=%.3g, classification=%s, "
              "ic satisfied=%d",
              max_res, success_err, box_err,
              single_random ? "{0A}" : "unexpected", ex.ic.satisfied ? 1 : 0)};
}

// --- criterion 6: two-random-observable obstruction ----------------------

CheckOutcome check_two_random(const Config& config) {
  bool passed = true;
  double worst_min = 1.0;
  double bound = 1.0;
  for (const quantum::RandomPair pair :
       {quantum::RandomPair::AliceZeroBobZero,
        quantum::RandomPair::AliceZeroBobOne,
        quantum::RandomPair::AliceOneBobZero}) {
    const quantum::InfeasibilityCertificate cert =
        quantum::two_random_infeasibility(pair, config.infeasibility_beta,
                                          config.infeasibility_phase);
    if (!(cert.valid && cert.bound_attained && cert.grid_min > 0.0)) {
      passed = false;
    }
    worst_min = std::min(worst_min, cert.grid_min);
    bound = std::min(bound, cert.lower_bound);
  }
  return {passed,
          fmt("grid min=%.6g (>0), envelope bound=%.6g, bound attained on "
              "every slice of a %dx%d grid for all three pairs",
              worst_min, bound, config.infeasibility_beta,
              config.infeasibility_phase)};
}

// --- criterion 7: the four property suites ------------------------------

CheckOutcome check_properties(const Config& config) {
  const int n = config.property_samples;

  // Suite A: matrix-built probabilities agree with the closed forms.
  double worst_a = 0.0;
  {
    Rng rng(config.seed + 701);
    for (int k = 0; k < n; ++k) {
      const quantum::TwoQubitState st = random_state(rng);
      const quantum::MeasurementSetup su = random_setup(rng);
      const quantum::HardyResiduals cf = quantum::hardy_residuals(st, su);
      const BipartiteBox bx = quantum::quantum_box(st, su);
      worst_a = std::max(
          {worst_a, std::abs(cf.p00_00 - bx.p(Bit(0), Bit(0), Bit(0), Bit(0))),
           std::abs(cf.p11_01 - bx.p(Bit(0), Bit(1), Bit(1), Bit(1))),
           std::abs(cf.p11_10 - bx.p(Bit(1), Bit(0), Bit(1), Bit(1))),
           std::abs(cf.success - bx.p(Bit(1), Bit(1), Bit(1), Bit(1)))});
    }
  }
  const bool ok_a = worst_a <= 1e-12;

  // Suite B: decompose is a left inverse of the box constructor.
  double worst_b = 0.0;
  {
    Rng rng(config.seed + 702);
    for (int k = 0; k < n; ++k) {
      const HardyCoefficients c = random_simplex_point(rng);
      const HardyCoefficients back = decompose(hardy_box(c));
      const std::array<double, 6> lhs = back.as_array();
      const std::array<double, 6> rhs = c.as_array();
      for (int i = 0; i < 6; ++i) {
        worst_b = std::max(worst_b, std::abs(lhs[i] - rhs[i]));
      }
    }
  }
  const bool ok_b = worst_b <= 1e-12;

  // Suite C: an input is an unbiased coin exactly when its linear
  // condition holds, and the marginal deviation equals the condition
  // residual. Half the draws come from case families so the positive side
  // is exercised.
  double worst_c = 0.0;
  bool equiv_ok = true;
  long random_instances = 0;
  {
    Rng rng(config.seed + 703);
    std::vector<HardyCoefficients> draws;
    draws.reserve(static_cast<std::size_t>(n));
    const int generic = n / 2;
    for (int k = 0; k < generic; ++k) {
      draws.push_back(random_simplex_point(rng));
    }
    int produced = 0;
    for (int idx = 1; produced < n - generic; idx = idx % 15 + 1) {
      const int want = std::min(n - generic - produced,
                                (n - generic + 14) / 15);
      for (HardyCoefficients& m : sample_case(randomness_case(idx), want,
                                              config.seed + 7030 + idx)) {
        draws.push_back(m);
        ++produced;
      }
    }
    for (std::size_t k = 0; k < draws.size(); ++k) {
      const HardyCoefficients& c = draws[k];
      const BipartiteBox box = hardy_box(c);
      for (const InputLabel input : kAllInputs) {
        const double resid = randomness_conditions(input).residual(c);
        // The condition row sums the weights giving outcome 0 for the
        // 0-inputs and outcome 1 for the 1-inputs, so the outcome-0
        // marginal deviation carries the matching sign.
        const double signed_resid =
            input_bit(input) == Bit(0) ? resid : -resid;
        for (int cond = 0; cond < 2; ++cond) {
          const double marg = marginal(box, input_side(input),
                                       input_bit(input), Bit(cond));
          worst_c = std::max(worst_c, std::abs((marg - 0.5) - signed_resid));
        }
        const bool coin = is_locally_random(box, input, 1e-9);
        if (coin != (std::abs(resid) <= 1e-9)) equiv_ok = false;
        if (coin && k >= static_cast<std::size_t>(generic)) {
          ++random_instances;
        }
      }
    }
  }
  const bool ok_c = worst_c <= 1e-12 && equiv_ok && random_instances >= n / 2;

  // Suite D: the observed bias expression equals the decomposition-space
  // quadratic in both orientations.
  double worst_d = 0.0;
  {
    Rng rng(config.seed + 704);
    for (int k = 0; k < n; ++k) {
      const HardyCoefficients c = random_simplex_point(rng);
      const BipartiteBox box = hardy_box(c);
      const std::array<double, 2> quad = hardy_ic_lhs(c);
      const IcStatistics ab = ic_statistics(box, Orientation::AliceToBob);
      const IcStatistics ba = ic_statistics(box, Orientation::BobToAlice);
      worst_d = std::max(
          {worst_d,
           std::abs(ab.e1 * ab.e1 + ab.e2 * ab.e2 - 1.0 - quad[0]),
           std::abs(ba.e1 * ba.e1 + ba.e2 * ba.e2 - 1.0 - quad[1])});
    }
  }
  const bool ok_d = worst_d <= 1e-9;

  const bool passed = ok_a && ok_b && ok_c && ok_d;
  return {passed,
          fmt("matrix-vs-closed max=%.3g (<=1e-12), roundtrip max=%.3g "
              "(<=1e-12), marginal-vs-condition max=%.3g (<=1e-12, "
              "equivalence=%d, %ld coin instances), bias-identity max=%.3g "
              "(<=1e-9); %d samples per suite",
              worst_a, worst_b, worst_c, equiv_ok ? 1 : 0, random_instances,
              worst_d, n)};
}

// --- criterion 8: the maximally entangled edge ---------------------------

CheckOutcome check_maximal_entanglement(const Config& config) {
  Rng rng(config.seed + 800);
  bool all_random = true;
  bool none_hardy = true;
  bool all_ic = true;
  for (int k = 0; k < config.maximal_state_setups; ++k) {
    const quantum::TwoQubitState st(0.25 * kPi, rng.uniform(-kPi, kPi));
    const quantum::MeasurementSetup su = random_setup(rng);
    for (const quantum::Observable* o : {&su.a0, &su.a1, &su.b0, &su.b1}) {
      if (!quantum::is_observable_random(st, *o)) all_random = false;
    }
    const BipartiteBox box = quantum::quantum_box(st, su);
    if (classify(box).size() != 4) all_random = false;
    if (is_hardy(box).is_hardy) none_hardy = false;
    if (!satisfies_ic_necessary(box).satisfied) all_ic = false;
  }
  const CaseIcReport full_case = case_ic_verdict(
      randomness_case(1), config.case_samples, config.seed + 801);
  const bool case_blocked = full_case.verdict == CaseVerdict::AlwaysViolated;

  const bool passed = all_random && none_hardy && all_ic && case_blocked;
  return {passed,
          fmt("%d random setups: four coins=%d, never the zero-constrained "
              "shape=%d, necessary condition=%d; all-four case always "
              "violated=%d",
              config.maximal_state_setups, all_random ? 1 : 0,
              none_hardy ? 1 : 0, all_ic ? 1 : 0, case_blocked ? 1 : 0)};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  CheckOutcome (*run)(const Config&);
};

constexpr std::array<Criterion, 8> kCriteria{{
    {"extremal_nonlocal_box", 1.0, check_extremal_box},
    {"optimum_vs_dense_grid", 30.0, check_optimum},
    {"case_feasibility_split", 60.0, check_case_split},
    {"quantum_optimum", 120.0, check_quantum_optimum},
    {"reference_example", 1.0, check_reference_example},
    {"two_random_obstruction", 5.0, check_two_random},
    {"property_suites", 60.0, check_properties},
    {"maximal_entanglement", 10.0, check_maximal_entanglement},
}};

}  // namespace

quantum::ReferenceExample perturbed_example(double theta_shift) {
  quantum::ReferenceExample ex = quantum::reference_example();
  ex.setup.a0 = quantum::Observable(ex.setup.a0.theta + theta_shift,
                                    ex.setup.a0.phi);
  ex.values = quantum::hardy_residuals(ex.state, ex.setup);
  ex.box = quantum::quantum_box(ex.state, ex.setup);
  ex.classification = classify(ex.box);
  ex.ic = satisfies_ic_necessary(ex.box);
  return ex;
}

CriterionResult run_criterion(int index, const Config& config) {
  if (index < 1 || index > 8) {
    throw PreconditionError("criterion index must be 1..8");
  }
  const Criterion& criterion = kCriteria[static_cast<std::size_t>(index - 1)];
  CriterionResult result{index, criterion.name, false, "", 0.0,
                         criterion.budget_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    const CheckOutcome outcome = criterion.run(config);
    result.passed = outcome.passed;
    result.detail = outcome.detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (result.seconds >= result.budget_seconds) {
    result.passed = false;
    result.detail += fmt(" [over budget: %.2fs >= %.2fs]", result.seconds,
                         result.budget_seconds);
  }
  return result;
}

std::vector<CriterionResult> run_all(const Config& config) {
  std::vector<CriterionResult> results;
  results.reserve(kCriteria.size());
  for (int index = 1; index <= static_cast<int>(kCriteria.size()); ++index) {
    results.push_back(run_criterion(index, config));
  }
  return results;
}

}  // namespace hardybox::acceptance
