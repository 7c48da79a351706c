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

// Command-line entry point. Every subcommand prints a single JSON report
// to standard output:
//
//   {"command": ..., "inputs": ..., "results": ..., "seed"?: ...,
//    "tool_version": "0.1.0"}
//
// Reports are deterministic for fixed inputs and seed (timings, when
// shown, go to standard error). Exit codes: 0 success, 2 validation
// failure (bad documents, weights, angles, domains), 1 internal failure,
// 64 usage errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardybox/acceptance.hpp"
#include "hardybox/box.hpp"
#include "hardybox/errors.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/info_causality.hpp"
#include "hardybox/json_io.hpp"
#include "hardybox/local_randomness.hpp"
#include "hardybox/quantum.hpp"

namespace {

using nlohmann::json;
namespace hb = hardybox;
namespace quantum = hardybox::quantum;

constexpr const char* kToolVersion = "0.1.0";

struct GlobalOptions {
  double tol = hb::kDefaultTol;
  std::uint64_t seed = 20260819;
  int json_indent = 2;
};

// Exit code chosen by a subcommand that ran but found failures to report
// (used by reproduce-all).
int g_exit_code = 0;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hb::ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw hb::ParseError("cannot read file: " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hb::ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw hb::ParseError("cannot write file: " + path);
}

void print_report(const GlobalOptions& global, const std::string& command,
                  json inputs, json results,
                  std::optional<std::uint64_t> seed = std::nullopt) {
  json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["results"] = std::move(results);
  if (seed) report["seed"] = *seed;
  report["tool_version"] = kToolVersion;
  if (global.json_indent > 0) {
    std::cout << report.dump(global.json_indent) << "\n";
  } else {
    std::cout << report.dump() << "\n";
  }
}

json box_document(const hb::BipartiteBox& box) {
  return json::parse(hb::box_to_json(box));
}

json coefficient_array(const hb::HardyCoefficients& c) {
  return json(c.as_array());
}

json label_array(const std::vector<hb::InputLabel>& labels) {
  json out = json::array();
  for (const hb::InputLabel label : labels) out.push_back(hb::to_string(label));
  return out;
}

json statistics_document(const hb::IcStatistics& stats) {
  return json{{"p1", stats.p1},
              {"p2", stats.p2},
              {"e1", stats.e1},
              {"e2", stats.e2}};
}

json ic_document(const hb::IcVerdict& verdict) {
  json out{{"satisfied", verdict.satisfied},
           {"lhs", verdict.lhs},
           {"alice_to_bob", statistics_document(verdict.alice_to_bob)},
           {"bob_to_alice", statistics_document(verdict.bob_to_alice)}};
  if (verdict.hardy_quadratics) {
    out["hardy_quadratics"] = *verdict.hardy_quadratics;
  } else {
    out["hardy_quadratics"] = nullptr;
  }
  return out;
}

json state_document(const quantum::TwoQubitState& state) {
  return json{{"beta", state.beta}, {"gamma", state.gamma}};
}

json setup_document(const quantum::MeasurementSetup& setup) {
  return json::parse(hb::setup_to_json(setup));
}

json residual_array(const quantum::HardyResiduals& values) {
  return json{values.p00_00, values.p11_01, values.p11_10};
}

hb::HardyCoefficients coefficients_from_list(const std::vector<double>& c) {
  if (c.size() != 6) {
    throw hb::PreconditionError(
        "--c expects exactly six comma-separated weights");
  }
  return hb::HardyCoefficients(c[0], c[1], c[2], c[3], c[4], c[5]);
}

// ---- subcommand bodies --------------------------------------------------

void run_box_vertex(const GlobalOptions& global, const std::string& name,
                    const std::string& out) {
  const hb::VertexId id = hb::VertexId::parse(name);
  const hb::BipartiteBox box = hb::vertex_box(id);
  if (!out.empty()) write_file(out, hb::box_to_json(box, global.json_indent));
  print_report(global, "box vertex", json{{"name", name}},
               json{{"box", box_document(box)},
                    {"kind", id.kind == hb::VertexKind::LocalDeterministic
                                 ? "local_deterministic"
                                 : "extremal_nonlocal"},
                    {"name", id.name()}});
}

void run_box_mix(const GlobalOptions& global, const std::string& weights_path,
                 const std::string& out) {
  const hb::ConvexWeights weights =
      hb::weights_from_json(read_file(weights_path));
  const hb::BipartiteBox box = hb::mix(weights);
  if (!out.empty()) write_file(out, hb::box_to_json(box, global.json_indent));
  json entries = json::array();
  for (const hb::WeightedVertex& e : weights.entries()) {
    entries.push_back(json{{"vertex", e.vertex.name()}, {"w", e.weight}});
  }
  print_report(global, "box mix", json{{"weights", weights_path}},
               json{{"box", box_document(box)}, {"mixture", entries}});
}

void run_box_check(const GlobalOptions& global, const std::string& box_path) {
  const hb::BipartiteBox box = hb::box_from_json(read_file(box_path));
  const bool no_signaling = hb::is_no_signaling(box, global.tol);
  json results{{"no_signaling", no_signaling},
               {"row_sums",
                json{box.row_sum(0), box.row_sum(1), box.row_sum(2),
                     box.row_sum(3)}}};
  if (no_signaling) {
    results["local"] = hb::is_local(box, global.tol);
    const hb::HardyVerdict verdict = hb::is_hardy(box, global.tol);
    results["hardy"] = verdict.is_hardy;
    results["success"] = verdict.success;
  } else {
    results["local"] = nullptr;
    results["hardy"] = nullptr;
    results["success"] = nullptr;
  }
  print_report(global, "box check",
               json{{"box", box_path}, {"tol", global.tol}}, results);
}

void run_hardy_build(const GlobalOptions& global, const std::vector<double>& c,
                     const std::string& out) {
  const hb::HardyCoefficients coeffs = coefficients_from_list(c);
  const hb::BipartiteBox box = hb::hardy_box(coeffs);
  if (!out.empty()) write_file(out, hb::box_to_json(box, global.json_indent));
  print_report(global, "hardy build", json{{"c", c}},
               json{{"box", box_document(box)},
                    {"coefficients", coefficient_array(coeffs)},
                    {"success", hb::success_probability(coeffs)},
                    {"classification", label_array(hb::classify(box, global.tol))}});
}

void run_hardy_check(const GlobalOptions& global, const std::string& box_path) {
  const hb::BipartiteBox box = hb::box_from_json(read_file(box_path));
  const hb::HardyVerdict verdict = hb::is_hardy(box, global.tol);
  print_report(global, "hardy check",
               json{{"box", box_path}, {"tol", global.tol}},
               json{{"hardy", verdict.is_hardy},
                    {"residuals",
                     json{verdict.residual_p00_00, verdict.residual_p11_01,
                          verdict.residual_p11_10}},
                    {"success", verdict.success}});
}

void run_hardy_decompose(const GlobalOptions& global,
                         const std::string& box_path, const std::string& out) {
  const hb::BipartiteBox box = hb::box_from_json(read_file(box_path));
  const hb::HardyCoefficients coeffs = hb::decompose(box, global.tol);
  if (!out.empty()) {
    write_file(out, hb::coefficients_to_json(coeffs, global.json_indent));
  }
  json support = json::array();
  for (const hb::VertexId& id : hb::hardy_support()) support.push_back(id.name());
  print_report(global, "hardy decompose",
               json{{"box", box_path}, {"tol", global.tol}},
               json{{"coefficients", coefficient_array(coeffs)},
                    {"vertices", support},
                    {"success", hb::success_probability(coeffs)}});
}

void run_classify(const GlobalOptions& global, const std::string& box_path) {
  const hb::BipartiteBox box = hb::box_from_json(read_file(box_path));
  print_report(global, "classify",
               json{{"box", box_path}, {"tol", global.tol}},
               json{{"classification", label_array(hb::classify(box, global.tol))}});
}

void run_case_solve(const GlobalOptions& global, int index) {
  const hb::CaseFamily family = hb::solve_case(hb::randomness_case(index));
  json coefficients = json::array();
  for (const auto& row : family.coefficients()) coefficients.push_back(row);
  print_report(
      global, "case solve", json{{"index", index}},
      json{{"index", family.case_index()},
           {"inputs", label_array(family.inputs())},
           {"free", family.free_names()},
           {"offsets", family.offsets()},
           {"coefficients", coefficients},
           {"forces_first_sum_zero",
            family.forces_zero({0.0, 0.0, 0.0, 1.0, 1.0, 0.0})},
           {"forces_second_sum_zero",
            family.forces_zero({0.0, 1.0, 0.0, 0.0, 1.0, 0.0})}});
}

void run_case_sample(const GlobalOptions& global, int index, int n) {
  const std::vector<hb::HardyCoefficients> members =
      hb::sample_case(hb::randomness_case(index), n, global.seed);
  json list = json::array();
  for (const hb::HardyCoefficients& m : members) list.push_back(m.as_array());
  print_report(global, "case sample",
               json{{"index", index}, {"n", n}},
               json{{"members", list}}, global.seed);
}

void run_case_ic(const GlobalOptions& global, int index, int samples) {
  const hb::CaseIcReport report =
      hb::case_ic_verdict(hb::randomness_case(index), samples, global.seed);
  json results{{"case_index", report.case_index},
               {"verdict", report.verdict == hb::CaseVerdict::AlwaysViolated
                               ? "AlwaysViolated"
                               : "Feasible"},
               {"samples_checked", report.samples_checked},
               {"violating_samples", report.violating_samples},
               {"forces_first_sum_zero", report.forces_first_sum_zero},
               {"forces_second_sum_zero", report.forces_second_sum_zero}};
  if (report.witness) {
    results["witness"] = report.witness->as_array();
    results["witness_quadratics"] = hb::hardy_ic_lhs(*report.witness);
  } else {
    results["witness"] = nullptr;
  }
  print_report(global, "case ic",
               json{{"index", index}, {"samples", samples}}, results,
               global.seed);
}

void run_ic_check(const GlobalOptions& global, const std::string& box_path) {
  const hb::BipartiteBox box = hb::box_from_json(read_file(box_path));
  print_report(global, "ic check",
               json{{"box", box_path}, {"tol", global.tol}},
               ic_document(hb::satisfies_ic_necessary(box, global.tol)));
}

void run_ic_optimize(const GlobalOptions& global, int resolution, int refine,
                     bool unconstrained) {
  const hb::IcOptimum opt =
      hb::max_success_under_ic(resolution, refine, !unconstrained);
  print_report(global, "ic optimize",
               json{{"resolution", resolution},
                    {"refine", refine},
                    {"enforce", !unconstrained}},
               json{{"success", opt.success},
                    {"coefficients", coefficient_array(opt.coefficients)},
                    {"quadratics", opt.quadratic_lhs}});
}

void run_quantum_example(const GlobalOptions& global, const std::string& out) {
  const quantum::ReferenceExample ref = quantum::reference_example();
  if (!out.empty()) {
    write_file(out,
               hb::setup_to_json(ref.state, ref.setup, global.json_indent));
  }
  print_report(global, "quantum example", json::object(),
               json{{"state", state_document(ref.state)},
                    {"setup", setup_document(ref.setup)},
                    {"residuals", residual_array(ref.values)},
                    {"success", ref.values.success},
                    {"classification", label_array(ref.classification)},
                    {"ic", ic_document(ref.ic)}});
}

void run_quantum_eval(const GlobalOptions& global, const std::string& setup_path,
                      const std::optional<double>& beta,
                      const std::optional<double>& gamma) {
  const hb::SetupDocument doc = hb::setup_from_json(read_file(setup_path));
  std::optional<quantum::TwoQubitState> state;
  if (beta.has_value() || gamma.has_value()) {
    if (!(beta.has_value() && gamma.has_value())) {
      throw hb::PreconditionError("provide both --beta and --gamma");
    }
    state.emplace(*beta, *gamma);
  } else if (doc.state) {
    state = doc.state;
  } else {
    throw hb::PreconditionError(
        "no state given: pass --beta/--gamma or a document with \"state\"");
  }
  const hb::BipartiteBox box = quantum::quantum_box(*state, doc.setup);
  const quantum::HardyResiduals values =
      quantum::hardy_residuals(*state, doc.setup);
  print_report(
      global, "quantum eval",
      json{{"setup", setup_path},
           {"beta", beta ? json(*beta) : json(nullptr)},
           {"gamma", gamma ? json(*gamma) : json(nullptr)},
           {"tol", global.tol}},
      json{{"state", state_document(*state)},
           {"box", box_document(box)},
           {"residuals", residual_array(values)},
           {"success", values.success},
           {"hardy", hb::is_hardy(box, global.tol).is_hardy},
           {"classification", label_array(hb::classify(box, global.tol))},
           {"observable_random",
            json{{"A", quantum::is_observable_random(*state, doc.setup.a0)},
                 {"Ap", quantum::is_observable_random(*state, doc.setup.a1)},
                 {"B", quantum::is_observable_random(*state, doc.setup.b0)},
                 {"Bp", quantum::is_observable_random(*state, doc.setup.b1)}}},
           {"ic", ic_document(hb::satisfies_ic_necessary(box, global.tol))}});
}

void run_quantum_optimize(const GlobalOptions& global, int starts,
                          int iterations, const std::string& out) {
  const quantum::QuantumOptimum opt =
      quantum::max_quantum_hardy(starts, global.seed, iterations);
  if (!out.empty()) {
    write_file(out,
               hb::setup_to_json(opt.state, opt.setup, global.json_indent));
  }
  print_report(global, "quantum optimize",
               json{{"starts", starts}, {"iterations", iterations}},
               json{{"success", opt.success},
                    {"state", state_document(opt.state)},
                    {"setup", setup_document(opt.setup)},
                    {"residuals", opt.residuals},
                    {"residual_warning", opt.residual_warning},
                    {"best_start", opt.best_start}},
               global.seed);
}

void run_reproduce_all(const GlobalOptions& global) {
  hb::acceptance::Config config;
  config.seed = global.seed;

  const std::vector<hb::acceptance::CriterionResult> results =
      hb::acceptance::run_all(config);
  bool all_passed = true;
  json criteria = json::array();
  for (const hb::acceptance::CriterionResult& r : results) {
    std::fprintf(stderr, "[%s] criterion %d %s (%.2fs): %s\n",
                 r.passed ? "PASS" : "FAIL", r.index, r.name.c_str(),
                 r.seconds, r.detail.c_str());
    all_passed = all_passed && r.passed;
    criteria.push_back(json{{"index", r.index},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"detail", r.detail}});
  }

  hb::acceptance::Config bent = config;
  bent.example = [] { return hb::acceptance::perturbed_example(); };
  const hb::acceptance::CriterionResult control =
      hb::acceptance::run_criterion(5, bent);
  const bool control_ok = !control.passed;
  std::fprintf(stderr, "[%s] negative_control bent_reference_rejected (%.2fs): %s\n",
               control_ok ? "PASS" : "FAIL", control.seconds,
               control.detail.c_str());

  print_report(global, "reproduce-all", json::object(),
               json{{"criteria", criteria},
                    {"negative_control",
                     json{{"rejected_as_expected", control_ok},
                          {"detail", control.detail}}},
                    {"all_passed", all_passed && control_ok}},
               global.seed);
  if (!(all_passed && control_ok)) g_exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;

  CLI::App app{
      "Toolkit for two-input/two-output correlation boxes: extremal-point "
      "construction, convex decomposition, local-randomness classification, "
      "guessing-game bounds, and quantum realizations."};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.add_option("--tol", global.tol,
                 "numeric tolerance for validation and classification")
      ->capture_default_str();
  app.add_option("--seed", global.seed, "seed for every stochastic subcommand")
      ->capture_default_str();
  app.add_option("--json-indent", global.json_indent,
                 "indentation of JSON reports (0 = compact)")
      ->capture_default_str();

  auto subcommand = [](CLI::App* parent, const std::string& name,
                       const std::string& description) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  };

  // box ------------------------------------------------------------------
  CLI::App* box = subcommand(&app, "box", "extreme points and mixtures");
  box->require_subcommand(1);

  static std::string vertex_name;
  static std::string out_path;
  CLI::App* box_vertex =
      subcommand(box, "vertex", "emit one of the 24 extreme points");
  box_vertex->add_option("--name", vertex_name, "vertex name, e.g. L0001 or NL001")
      ->required();
  box_vertex->add_option("--out", out_path, "write the box document to a file");
  box_vertex->callback(
      [&] { run_box_vertex(global, vertex_name, out_path); });

  static std::string weights_path;
  CLI::App* box_mix =
      subcommand(box, "mix", "mix vertices by a weights document");
  box_mix->add_option("weights", weights_path, "mixture JSON file")->required();
  box_mix->add_option("--out", out_path, "write the box document to a file");
  box_mix->callback([&] { run_box_mix(global, weights_path, out_path); });

  static std::string box_path;
  CLI::App* box_check =
      subcommand(box, "check", "validate a box document and test its class");
  box_check->add_option("box", box_path, "box JSON file")->required();
  box_check->callback([&] { run_box_check(global, box_path); });

  // hardy ------------------------------------------------------------------
  CLI::App* hardy =
      subcommand(&app, "hardy", "the six-vertex decomposition form");
  hardy->require_subcommand(1);

  static std::vector<double> c_list;
  CLI::App* hardy_build =
      subcommand(hardy, "build", "box from decomposition weights");
  hardy_build->add_option("--c", c_list, "six comma-separated weights")
      ->required()
      ->delimiter(',');
  hardy_build->add_option("--out", out_path, "write the box document to a file");
  hardy_build->callback([&] { run_hardy_build(global, c_list, out_path); });

  static std::string hardy_box_path;
  CLI::App* hardy_check =
      subcommand(hardy, "check", "test the three zero conditions");
  hardy_check->add_option("box", hardy_box_path, "box JSON file")->required();
  hardy_check->callback([&] { run_hardy_check(global, hardy_box_path); });

  CLI::App* hardy_decompose = subcommand(
      hardy, "decompose", "recover the six weights from a box");
  hardy_decompose->add_option("box", hardy_box_path, "box JSON file")
      ->required();
  hardy_decompose->add_option("--out", out_path,
                              "write the coefficient document to a file");
  hardy_decompose->callback(
      [&] { run_hardy_decompose(global, hardy_box_path, out_path); });

  // classify ---------------------------------------------------------------
  static std::string classify_path;
  CLI::App* classify_cmd = subcommand(
      &app, "classify", "list the locally random inputs of a box");
  classify_cmd->add_option("box", classify_path, "box JSON file")->required();
  classify_cmd->callback([&] { run_classify(global, classify_path); });

  // case -------------------------------------------------------------------
  CLI::App* case_cmd =
      subcommand(&app, "case", "the fifteen randomness requirements");
  case_cmd->require_subcommand(1);

  static int case_index = 1;
  CLI::App* case_solve =
      subcommand(case_cmd, "solve", "general solution family of a case");
  case_solve->add_option("index", case_index, "case number 1..15")->required();
  case_solve->callback([&] { run_case_solve(global, case_index); });

  static int sample_count = 10;
  CLI::App* case_sample =
      subcommand(case_cmd, "sample", "deterministic members of a case family");
  case_sample->add_option("index", case_index, "case number 1..15")->required();
  case_sample->add_option("--n", sample_count, "number of members")
      ->capture_default_str();
  case_sample->callback([&] { run_case_sample(global, case_index, sample_count); });

  static int ic_samples = 10000;
  CLI::App* case_ic = subcommand(
      case_cmd, "ic", "guessing-game verdict for a case family");
  case_ic->add_option("index", case_index, "case number 1..15")->required();
  case_ic->add_option("--samples", ic_samples, "family samples to test")
      ->capture_default_str();
  case_ic->callback([&] { run_case_ic(global, case_index, ic_samples); });

  // ic ---------------------------------------------------------------------
  CLI::App* ic =
      subcommand(&app, "ic", "the squared-bias guessing-game bound");
  ic->require_subcommand(1);

  static std::string ic_box_path;
  CLI::App* ic_check = subcommand(ic, "check", "evaluate the bound on a box");
  ic_check->add_option("box", ic_box_path, "box JSON file")->required();
  ic_check->callback([&] { run_ic_check(global, ic_box_path); });

  CLI::App* ic_case = subcommand(
      ic, "case", "guessing-game verdict for a case family");
  ic_case->add_option("index", case_index, "case number 1..15")->required();
  ic_case->add_option("--samples", ic_samples, "family samples to test")
      ->capture_default_str();
  ic_case->callback([&] { run_case_ic(global, case_index, ic_samples); });

  static int resolution = 2000;
  static int refine = 200;
  static bool unconstrained = false;
  CLI::App* ic_optimize = subcommand(
      ic, "optimize", "maximize the success entry under the bound");
  ic_optimize->add_option("--resolution", resolution, "coarse grid points")
      ->capture_default_str();
  ic_optimize->add_option("--refine", refine, "golden-section iterations")
      ->capture_default_str();
  ic_optimize->add_flag("--unconstrained", unconstrained,
                        "drop the bound and report the raw maximum");
  ic_optimize->callback(
      [&] { run_ic_optimize(global, resolution, refine, unconstrained); });

  // quantum ------------------------------------------------------------------
  CLI::App* quantum_cmd =
      subcommand(&app, "quantum", "two-qubit states and measurements");
  quantum_cmd->require_subcommand(1);

  CLI::App* quantum_example = subcommand(
      quantum_cmd, "example", "the reference single-coin configuration");
  quantum_example->add_option("--out", out_path,
                              "write the setup document to a file");
  quantum_example->callback([&] { run_quantum_example(global, out_path); });

  static std::string setup_path;
  static double beta_value = 0.0;
  static double gamma_value = 0.0;
  CLI::App* quantum_eval = subcommand(
      quantum_cmd, "eval", "measure a setup document on a state");
  quantum_eval->add_option("--setup", setup_path, "setup JSON file")
      ->required();
  CLI::Option* beta_opt =
      quantum_eval->add_option("--beta", beta_value, "state angle");
  CLI::Option* gamma_opt =
      quantum_eval->add_option("--gamma", gamma_value, "state phase");
  quantum_eval->callback([&, beta_opt, gamma_opt] {
    run_quantum_eval(global, setup_path,
                     beta_opt->count() ? std::optional<double>(beta_value)
                                       : std::nullopt,
                     gamma_opt->count() ? std::optional<double>(gamma_value)
                                        : std::nullopt);
  });

  static int starts = 64;
  static int iterations = 2000;
  CLI::App* quantum_optimize = subcommand(
      quantum_cmd, "optimize", "maximize the success entry over realizations");
  quantum_optimize->add_option("--starts", starts, "multistart count (>= 16)")
      ->capture_default_str();
  quantum_optimize
      ->add_option("--iterations", iterations, "evaluation cap per stage")
      ->capture_default_str();
  quantum_optimize->add_option("--out", out_path,
                               "write the best setup document to a file");
  quantum_optimize->callback(
      [&] { run_quantum_optimize(global, starts, iterations, out_path); });

  // reproduce-all ------------------------------------------------------------
  CLI::App* reproduce = subcommand(
      &app, "reproduce-all",
      "run every numbered verification check and the negative control");
  reproduce->callback([&] { run_reproduce_all(global); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  } catch (const hb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hb::InvalidWeights& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hb::NotHardyForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hb::EmptyFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hb::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hb::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return g_exit_code;
}
