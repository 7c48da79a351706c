// Micro benchmarks for the hot paths of the core library: mixture
// assembly, the locality linear program, quantum Born-rule evaluation,
// decomposition, and the coarse optimizer grid.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hardybox/box.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/info_causality.hpp"
#include "hardybox/local_randomness.hpp"
#include "hardybox/quantum.hpp"
#include "hardybox/rng.hpp"

namespace {

namespace hb = hardybox;
namespace quantum = hardybox::quantum;

hb::ConvexWeights random_weights(std::uint64_t seed) {
  hb::Rng rng(seed);
  const std::vector<hb::VertexId> vertices = hb::all_vertices();
  std::vector<hb::WeightedVertex> entries;
  entries.reserve(vertices.size());
  double total = 0.0;
  for (const hb::VertexId& id : vertices) {
    const double w = -std::log(1.0 - rng.uniform());
    entries.push_back({id, w});
    total += w;
  }
  for (hb::WeightedVertex& e : entries) e.weight /= total;
  double sum = 0.0;
  for (const hb::WeightedVertex& e : entries) sum += e.weight;
  entries.back().weight += 1.0 - sum;
  return hb::ConvexWeights(entries);
}

void BM_Mix(benchmark::State& state) {
  const hb::ConvexWeights weights = random_weights(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::mix(weights));
  }
}
BENCHMARK(BM_Mix);

void BM_IsLocal(benchmark::State& state) {
  const hb::BipartiteBox box = hb::mix(random_weights(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::is_local(box));
  }
}
BENCHMARK(BM_IsLocal);

void BM_Decompose(benchmark::State& state) {
  const hb::BipartiteBox box =
      hb::hardy_box(hb::HardyCoefficients(0.1, 0.15, 0.2, 0.25, 0.2, 0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::decompose(box));
  }
}
BENCHMARK(BM_Decompose);

void BM_Classify(benchmark::State& state) {
  const hb::BipartiteBox box =
      hb::hardy_box(hb::HardyCoefficients(0.1, 0.3, 0.2, 0.2, 0.0, 0.2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::classify(box));
  }
}
BENCHMARK(BM_Classify);

void BM_QuantumBox(benchmark::State& state) {
  const quantum::ReferenceExample ref = quantum::reference_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum::quantum_box(ref.state, ref.setup));
  }
}
BENCHMARK(BM_QuantumBox);

void BM_HardyResiduals(benchmark::State& state) {
  const quantum::ReferenceExample ref = quantum::reference_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum::hardy_residuals(ref.state, ref.setup));
  }
}
BENCHMARK(BM_HardyResiduals);

void BM_IcVerdict(benchmark::State& state) {
  const hb::BipartiteBox box = hb::mix(random_weights(11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::satisfies_ic_necessary(box));
  }
}
BENCHMARK(BM_IcVerdict);

void BM_OptimizerCoarse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::max_success_under_ic(100, 0));
  }
}
BENCHMARK(BM_OptimizerCoarse);

}  // namespace

BENCHMARK_MAIN();
