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

#include "hardybox/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "hardybox/rng.hpp"
#include "nelder_mead.hpp"

namespace hardybox::quantum {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_phase(double phi) {
  if (!std::isfinite(phi)) throw PreconditionError("angle must be finite");
  double w = std::remainder(phi, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w = kPi;
  return w;
}

/// Closed-form probabilities for one observable pair: both outcomes +1
/// (`pp`) and both outcomes -1 (`mm`). Valid for arbitrary real angles;
/// the cross term couples the phases only through phi_a + phi_b - gamma.
struct PairTerms {
  double pp;
  double mm;
};

PairTerms pair_terms(double beta, double gamma, double theta_a, double phi_a,
                     double theta_b, double phi_b) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const double ca = std::cos(0.5 * theta_a);
  const double sa = std::sin(0.5 * theta_a);
  const double cb = std::cos(0.5 * theta_b);
  const double sb = std::sin(0.5 * theta_b);
  const double cross =
      2.0 * c * s * ca * sa * cb * sb * std::cos(phi_a + phi_b - gamma);
  PairTerms t{};
  t.pp = c * c * ca * ca * cb * cb + s * s * sa * sa * sb * sb + cross;
  t.mm = c * c * sa * sa * sb * sb + s * s * ca * ca * cb * cb + cross;
  return t;
}

}  // namespace

TwoQubitState::TwoQubitState(double beta, double gamma)
    : beta(beta), gamma(wrap_phase(gamma)) {
  if (!std::isfinite(beta)) {
    throw PreconditionError("state angle must be finite");
  }
}

Observable::Observable(double theta, double phi)
    : theta(theta), phi(wrap_phase(phi)) {
  if (!std::isfinite(theta)) {
    throw PreconditionError("angle must be finite");
  }
  if (this->theta < 0.0) this->theta = 0.0;
  if (this->theta > kPi) this->theta = kPi;
}

std::array<double, 3> Observable::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

DensityMatrices density_matrices(const TwoQubitState& state) {
  const Complex amp0(std::cos(state.beta), 0.0);
  const Complex amp3 = std::polar(std::sin(state.beta), state.gamma);
  const std::array<Complex, 4> psi{amp0, 0.0, 0.0, amp3};

  DensityMatrices d{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) d.rho_ab[i][j] = psi[i] * std::conj(psi[j]);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex a(0.0), b(0.0);
      for (int k = 0; k < 2; ++k) {
        a += d.rho_ab[2 * i + k][2 * j + k];  // trace out Bob
        b += d.rho_ab[2 * k + i][2 * k + j];  // trace out Alice
      }
      d.rho_a[i][j] = a;
      d.rho_b[i][j] = b;
    }
  }
  return d;
}

Mat2 projector(const Observable& o, int outcome) {
  if (outcome != 1 && outcome != -1) {
    throw PreconditionError("outcome must be +1 or -1");
  }
  const std::array<double, 3> n = o.direction();
  const double sign = static_cast<double>(outcome);
  Mat2 p{};
  p[0][0] = 0.5 * (1.0 + sign * n[2]);
  p[1][1] = 0.5 * (1.0 - sign * n[2]);
  p[0][1] = 0.5 * sign * Complex(n[0], -n[1]);
  p[1][0] = 0.5 * sign * Complex(n[0], n[1]);
  return p;
}

double joint_probability(const TwoQubitState& state, const Observable& oa,
                         const Observable& ob, int outcome_a, int outcome_b) {
  const Mat2 pa = projector(oa, outcome_a);
  const Mat2 pb = projector(ob, outcome_b);

  Mat4 m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          m[2 * i + k][2 * j + l] = pa[i][j] * pb[k][l];
        }
      }
    }
  }

  const DensityMatrices d = density_matrices(state);
  Complex trace(0.0);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) trace += d.rho_ab[i][k] * m[k][i];
  }
  return trace.real();
}

BipartiteBox quantum_box(const TwoQubitState& state,
                         const MeasurementSetup& setup) {
  const std::array<const Observable*, 2> alice{&setup.a0, &setup.a1};
  const std::array<const Observable*, 2> bob{&setup.b0, &setup.b1};
  BipartiteBox::Grid grid{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          // Output bit 0 encodes outcome +1.
          grid[(x << 1) | y][(a << 1) | b] = joint_probability(
              state, *alice[x], *bob[y], a == 0 ? 1 : -1, b == 0 ? 1 : -1);
        }
      }
    }
  }
  return BipartiteBox(grid);
}

bool is_observable_random(const TwoQubitState& state, const Observable& o) {
  // Outcome bias on the reduced state: Tr[rho_a (P+ - P-)], evaluated with
  // the matrices. Analytically this is cos(2 beta) cos(theta).
  const DensityMatrices d = density_matrices(state);
  const Mat2 plus = projector(o, 1);
  const Mat2 minus = projector(o, -1);
  Complex bias(0.0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      bias += d.rho_a[i][j] * (plus[j][i] - minus[j][i]);
    }
  }
  return std::abs(bias.real()) <= 1e-12;
}

HardyResiduals hardy_residuals(const TwoQubitState& state,
                               const MeasurementSetup& setup) {
  const double beta = state.beta;
  const double gamma = state.gamma;
  HardyResiduals r{};
  r.p00_00 = pair_terms(beta, gamma, setup.a0.theta, setup.a0.phi,
                        setup.b0.theta, setup.b0.phi)
                 .pp;
  r.p11_01 = pair_terms(beta, gamma, setup.a0.theta, setup.a0.phi,
                        setup.b1.theta, setup.b1.phi)
                 .mm;
  r.p11_10 = pair_terms(beta, gamma, setup.a1.theta, setup.a1.phi,
                        setup.b0.theta, setup.b0.phi)
                 .mm;
  r.success = pair_terms(beta, gamma, setup.a1.theta, setup.a1.phi,
                         setup.b1.theta, setup.b1.phi)
                  .mm;
  return r;
}

double reduced_zero_condition(double beta, double delta_phi) {
  return 0.25 * (1.0 + std::sin(2.0 * beta) * std::cos(delta_phi));
}

InfeasibilityCertificate two_random_infeasibility(RandomPair pair,
                                                  int beta_points,
                                                  int phase_points) {
  if (beta_points < 2 || phase_points < 2) {
    throw PreconditionError("infeasibility grids need at least two points");
  }

  InfeasibilityCertificate cert{};
  cert.pair = pair;
  cert.beta_points = beta_points;
  cert.phase_points = phase_points;

  // beta grid over (0, pi/2) on cell midpoints (never hits pi/4 for even
  // counts); phase grid starts at -pi so cos(delta) = -1 is sampled
  // exactly.
  std::vector<double> betas(beta_points), sin2b(beta_points);
  for (int i = 0; i < beta_points; ++i) {
    betas[i] = (i + 0.5) * (0.5 * kPi) / beta_points;
    sin2b[i] = std::sin(2.0 * betas[i]);
  }
  std::vector<double> phases(phase_points), cosd(phase_points);
  for (int j = 0; j < phase_points; ++j) {
    phases[j] = -kPi + j * (2.0 * kPi) / phase_points;
    cosd[j] = std::cos(phases[j]);
  }

  cert.grid_min = std::numeric_limits<double>::infinity();
  double max_sin = 0.0;
  cert.bound_attained = true;
  bool none_below_envelope = true;
  for (int i = 0; i < beta_points; ++i) {
    const double envelope = 0.25 * (1.0 - std::abs(sin2b[i]));
    double row_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < phase_points; ++j) {
      const double v = 0.25 * (1.0 + sin2b[i] * cosd[j]);
      if (v < cert.grid_min) {
        cert.grid_min = v;
        cert.beta_at_min = betas[i];
        cert.phase_at_min = phases[j];
      }
      if (v < row_min) row_min = v;
    }
    // The row minimum must sit on the analytic envelope: the phase grid
    // contains cos(delta) = -1 exactly.
    if (std::abs(row_min - envelope) > 1e-12) cert.bound_attained = false;
    if (row_min < envelope - 1e-15) none_below_envelope = false;
    if (std::abs(sin2b[i]) > max_sin) max_sin = std::abs(sin2b[i]);
  }
  cert.lower_bound = 0.25 * (1.0 - max_sin);
  cert.valid = cert.grid_min > 0.0 && cert.lower_bound > 0.0 &&
               none_below_envelope && cert.bound_attained &&
               cert.grid_min >= cert.lower_bound - 1e-15;
  return cert;
}

namespace {

// Parameter order used by the search: beta, gamma, then (theta, phi) for
// a0, a1, b0, b1.
std::array<double, 3> zero_values(const std::vector<double>& x) {
  const PairTerms ab = pair_terms(x[0], x[1], x[2], x[3], x[6], x[7]);
  const PairTerms abp = pair_terms(x[0], x[1], x[2], x[3], x[8], x[9]);
  const PairTerms apb = pair_terms(x[0], x[1], x[4], x[5], x[6], x[7]);
  return {ab.pp, abp.mm, apb.mm};
}

double success_value(const std::vector<double>& x) {
  return pair_terms(x[0], x[1], x[4], x[5], x[8], x[9]).mm;
}

// Physically equivalent parameters with beta in [0, pi/2], theta in
// [0, pi], phases wrapped. Sign flips are absorbed into gamma and the
// phis, so the closed forms are unchanged.
std::vector<double> canonical_params(const std::vector<double>& x) {
  double c = std::cos(x[0]);
  double s = std::sin(x[0]);
  double gamma = x[1];
  if (c < 0.0) {
    c = -c;
    gamma += kPi;
  }
  if (s < 0.0) {
    s = -s;
    gamma += kPi;
  }
  std::vector<double> y(10);
  y[0] = std::atan2(s, c);
  y[1] = wrap_phase(gamma);
  for (int k = 0; k < 4; ++k) {
    double theta = std::remainder(x[2 + 2 * k], 2.0 * kPi);
    double phi = x[3 + 2 * k];
    if (theta < 0.0) {
      theta = -theta;
      phi += kPi;
    }
    y[2 + 2 * k] = theta;
    y[3 + 2 * k] = wrap_phase(phi);
  }
  return y;
}

// Least-squares polish: Gauss-Newton steps of minimal norm driving the
// three zero conditions to the working-precision floor.
std::vector<double> polish_feasibility(std::vector<double> y) {
  constexpr double kDiffStep = 1e-7;
  auto max_abs = [](const std::array<double, 3>& r) {
    return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
  };
  for (int iter = 0; iter < 50; ++iter) {
    const std::array<double, 3> r = zero_values(y);
    const double norm = max_abs(r);
    if (norm < 1e-13) break;

    double jac[3][10];
    for (int j = 0; j < 10; ++j) {
      std::vector<double> hi = y, lo = y;
      hi[j] += kDiffStep;
      lo[j] -= kDiffStep;
      const std::array<double, 3> rh = zero_values(hi);
      const std::array<double, 3> rl = zero_values(lo);
      for (int i = 0; i < 3; ++i) {
        jac[i][j] = (rh[i] - rl[i]) / (2.0 * kDiffStep);
      }
    }

    // Minimal-norm step dy = J^T (J J^T)^-1 (-r) via a damped 3x3 solve.
    double a[3][4];
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        double dot = 0.0;
        for (int j = 0; j < 10; ++j) dot += jac[i][j] * jac[k][j];
        a[i][k] = dot;
      }
      a[i][i] += 1e-14;
      a[i][3] = -r[i];
    }
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int row = col + 1; row < 3; ++row) {
        if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
      }
      for (int k = 0; k < 4; ++k) std::swap(a[col][k], a[piv][k]);
      if (std::abs(a[col][col]) < 1e-300) return y;  // singular; give up
      for (int row = 0; row < 3; ++row) {
        if (row == col) continue;
        const double f = a[row][col] / a[col][col];
        for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
      }
    }
    const std::array<double, 3> z{a[0][3] / a[0][0], a[1][3] / a[1][1],
                                  a[2][3] / a[2][2]};

    std::vector<double> step(10, 0.0);
    for (int j = 0; j < 10; ++j) {
      step[j] = jac[0][j] * z[0] + jac[1][j] * z[1] + jac[2][j] * z[2];
    }
    double scale = 1.0;
    bool improved = false;
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<double> trial = y;
      for (int j = 0; j < 10; ++j) trial[j] += scale * step[j];
      if (max_abs(zero_values(trial)) < norm) {
        y = std::move(trial);
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;
  }
  return y;
}

}  // namespace

QuantumOptimum max_quantum_hardy(int multistarts, std::uint64_t seed,
                                 int iterations) {
  if (multistarts < 16) {
    throw PreconditionError("need at least 16 starts");
  }
  if (iterations < 100) {
    throw PreconditionError("need at least 100 evaluations per stage");
  }

  Rng rng(seed);
  std::vector<std::vector<double>> starts(multistarts,
                                          std::vector<double>(10, 0.0));
  for (auto& x : starts) {
    x[0] = rng.uniform(0.05, 0.5 * kPi - 0.05);
    x[1] = rng.uniform(-kPi, kPi);
    for (int k = 0; k < 4; ++k) {
      x[2 + 2 * k] = rng.uniform(0.05, kPi - 0.05);
      x[3 + 2 * k] = rng.uniform(-kPi, kPi);
    }
  }

  struct Candidate {
    bool feasible = false;
    double success = -1.0;
    double max_residual = std::numeric_limits<double>::infinity();
    int start = -1;
    std::vector<double> params;
  };
  Candidate best;

  const std::array<double, 3> weights{1e2, 1e4, 1e6};
  const std::array<double, 3> steps{0.4, 0.15, 0.05};
  for (int start = 0; start < multistarts; ++start) {
    std::vector<double> x = starts[start];
    for (int stage = 0; stage < 3; ++stage) {
      const double w = weights[stage];
      auto objective = [w](const std::vector<double>& v) {
        const std::array<double, 3> r = zero_values(v);
        return -success_value(v) +
               w * (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      };
      x = detail::nelder_mead(objective, x, steps[stage], iterations).x;
    }

    std::vector<double> y = polish_feasibility(canonical_params(x));
    y = canonical_params(y);
    const std::array<double, 3> r = zero_values(y);
    const double max_res =
        std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
    const double succ = success_value(y);
    if (!std::isfinite(max_res) || !std::isfinite(succ)) continue;

    const bool feasible = max_res <= 1e-9;
    const bool better =
        feasible
            ? (!best.feasible || succ > best.success)
            : (!best.feasible && max_res < best.max_residual);
    if (better) {
      best.feasible = feasible;
      best.success = succ;
      best.max_residual = max_res;
      best.start = start;
      best.params = y;
    }
  }

  if (best.start < 0) {
    throw Error("all starts diverged to non-finite values");
  }

  const std::vector<double>& y = best.params;
  QuantumOptimum optimum{
      TwoQubitState(y[0], y[1]),
      MeasurementSetup{Observable(y[2], y[3]), Observable(y[4], y[5]),
                       Observable(y[6], y[7]), Observable(y[8], y[9])},
      best.success,
      {},
      false,
      best.start};
  const HardyResiduals values = hardy_residuals(optimum.state, optimum.setup);
  optimum.residuals = {std::abs(values.p00_00), std::abs(values.p11_01),
                       std::abs(values.p11_10)};
  optimum.success = values.success;
  optimum.residual_warning =
      std::max({optimum.residuals[0], optimum.residuals[1],
                optimum.residuals[2]}) > 1e-6;
  return optimum;
}

ReferenceExample reference_example() {
  const double beta = kPi / 6.0;
  const TwoQubitState state(beta, kPi);
  const double tan_b = std::tan(beta);
  const MeasurementSetup setup{
      Observable(0.5 * kPi, kPi),
      Observable(2.0 * std::atan(tan_b * tan_b), -kPi),
      Observable(2.0 * kPi / 3.0, kPi),
      Observable(kPi / 3.0, -kPi),
  };
  ReferenceExample example{state, setup, hardy_residuals(state, setup),
                           quantum_box(state, setup),
                           {},
                           {}};
  example.classification = classify(example.box);
  example.ic = satisfies_ic_necessary(example.box);
  return example;
}

}  // namespace hardybox::quantum
