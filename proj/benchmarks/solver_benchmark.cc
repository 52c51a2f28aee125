// Copyright 2026 The Authors.
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

#include <cstdint>
#include <variant>

#include "benchmark/benchmark.h"
#include "fairkc/baselines.h"
#include "fairkc/generator.h"
#include "fairkc/oracle.h"
#include "fairkc/solver.h"

namespace fairkc {
namespace {

ColorfulInstance MakeColorful(int n, int k) {
  GenSpec spec;
  spec.problem = GenSpec::Problem::kColorful;
  spec.seed = 7;
  spec.n = n;
  spec.k = k;
  spec.z = n / 20;
  spec.sigma = 2.0;
  spec.separation = 20.0;
  return std::get<ColorfulInstance>(*Generate(spec));
}

FairKCenterInstance MakeFair(int n, int k, int groups) {
  GenSpec spec;
  spec.seed = 11;
  spec.n = n;
  spec.k = k;
  spec.z = 2;
  spec.groups = groups;
  spec.sigma = 2.0;
  spec.separation = 20.0;
  return std::get<FairKCenterInstance>(*Generate(spec));
}

void BM_SettleBalls(benchmark::State& state) {
  const ColorfulInstance in = MakeColorful(state.range(0), 4);
  const SearchContext context(in, 3.0);
  const SolverState root = SolverState::Initial(context);
  for (auto _ : state) benchmark::DoNotOptimize(SettleBalls(context, root, 0));
}
BENCHMARK(BM_SettleBalls)->Arg(50)->Arg(200)->Arg(800);

void BM_SearchContext(benchmark::State& state) {
  const ColorfulInstance in = MakeColorful(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(SearchContext(in, 3.0));
}
BENCHMARK(BM_SearchContext)->Arg(50)->Arg(200)->Arg(800);

void BM_SolveColorful(benchmark::State& state) {
  const ColorfulInstance in = MakeColorful(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(SolveColorful(in));
}
BENCHMARK(BM_SolveColorful)
    ->Args({40, 2})
    ->Args({40, 3})
    ->Args({100, 3})
    ->Unit(benchmark::kMillisecond);

void BM_SolvePipelineExhaustive(benchmark::State& state) {
  const FairKCenterInstance in = MakeFair(state.range(0), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(SolvePipeline(in));
}
BENCHMARK(BM_SolvePipelineExhaustive)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SolvePipelineRandom(benchmark::State& state) {
  const FairKCenterInstance in = MakeFair(30, 3, 3);
  PipelineOptions options;
  options.coloring_mode = ColoringMode::kRandom;
  options.trials = state.range(0);
  options.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(SolvePipeline(in, options));
}
BENCHMARK(BM_SolvePipelineRandom)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_BruteForceFair(benchmark::State& state) {
  const FairKCenterInstance in = MakeFair(state.range(0), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceFair(in));
}
BENCHMARK(BM_BruteForceFair)->Arg(12)->Arg(24);

void BM_CharikarScan(benchmark::State& state) {
  const FairKCenterInstance in = MakeFair(state.range(0), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(CharikarScan(in.metric, in.k, in.z));
}
BENCHMARK(BM_CharikarScan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fairkc

BENCHMARK_MAIN();
