// Copyright 2026 The BPPS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"
#include "bpps/bounds.h"
#include "bpps/exact.h"
#include "bpps/generators.h"
#include "bpps/heuristics.h"
#include "bpps/two_phase.h"

namespace bpps {
namespace {

Instance RandomOfSize(int n, std::uint64_t seed) {
  RandomParams params;
  params.n = n;
  params.seed = seed;
  params.classes = {1, std::min(8, n)};
  params.capacity = {50, 100};
  params.weight = {1, 30};
  params.setup_weight = {0, 15};
  return RandomInstance(params);
}

void BM_Heuristic(benchmark::State& state, Heuristic h) {
  const Instance instance = RandomOfSize(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunHeuristic(h, instance));
  }
  state.SetItemsProcessed(state.iterations() * instance.num_items());
}

BENCHMARK_CAPTURE(BM_Heuristic, nf, Heuristic::kNf)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Heuristic, ffd, Heuristic::kFfd)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Heuristic, bfd, Heuristic::kBfd)->Range(64, 4096);

void BM_TwoPhase(benchmark::State& state) {
  const Instance instance = RandomOfSize(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(TwoPhase(instance, InnerAlgorithm::kFfd));
  }
}

BENCHMARK(BM_TwoPhase)->Range(64, 1024);

void BM_WorstFamilyFirstFit(benchmark::State& state) {
  const Instance instance = FfBfWorstInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunHeuristic(Heuristic::kFf, instance));
  }
}

BENCHMARK(BM_WorstFamilyFirstFit)->Arg(60)->Arg(600)->Arg(6000);

void BM_WeakLowerBound(benchmark::State& state) {
  const Instance instance = RandomOfSize(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CombinatorialLowerBound(instance));
  }
}

BENCHMARK(BM_WeakLowerBound)->Range(64, 4096);

void BM_ExactOracle(benchmark::State& state) {
  RandomParams params;
  params.n = static_cast<int>(state.range(0));
  params.seed = 5;
  params.capacity = {12, 12};
  params.weight = {1, 6};
  const Instance instance = RandomInstance(params);
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const OptResult result = ExactBpps(instance);
    nodes = result.nodes;
    benchmark::DoNotOptimize(result.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

BENCHMARK(BM_ExactOracle)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bpps

BENCHMARK_MAIN();
