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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hardybox/quantum.hpp"

namespace hardybox::acceptance {

/// Outcome of one numbered verification check.
struct CriterionResult {
  int index;
  std::string name;
  bool passed;
  std::string detail;     // measured values, one line
  double seconds;         // wall time of the check
  double budget_seconds;  // the check fails if it runs longer
};

/// Knobs of the verification suite. The defaults are the released
/// reproduction settings; tests shrink them for speed only where a check's
/// contract allows it.
struct Config {
  std::uint64_t seed = 20260819;

  int optimizer_grid = 2000;       // coarse scan of the production optimizer
  int optimizer_refine = 200;      // golden-section iterations
  int oracle_resolution = 1000;    // reference grid per free weight

  int case_samples = 10000;        // family samples per randomness case

  int quantum_starts = 64;
  int quantum_iterations = 2000;

  int infeasibility_beta = 1000;
  int infeasibility_phase = 1000;

  int property_samples = 10000;    // per property suite
  int maximal_state_setups = 100;  // random setups at the entangled edge

  /// Supplier of the reference configuration checked by criterion 5.
  /// Injectable so a deliberately broken example can prove the check has
  /// teeth.
  std::function<quantum::ReferenceExample()> example =
      quantum::reference_example;
};

/// A copy of the reference configuration with the first Alice polar angle
/// shifted, recomputed end to end; used as the negative control.
quantum::ReferenceExample perturbed_example(double theta_shift = 1e-3);

/// Runs one criterion (1..8).
CriterionResult run_criterion(int index, const Config& config);

/// Runs all eight criteria in order.
std::vector<CriterionResult> run_all(const Config& config);

}  // namespace hardybox::acceptance
