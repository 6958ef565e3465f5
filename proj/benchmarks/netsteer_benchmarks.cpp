// Copyright 2026 The netsteer Authors
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

#include <benchmark/benchmark.h>

#include "netsteer/correlators.hpp"
#include "netsteer/inequalities.hpp"
#include "netsteer/lhs_oracle.hpp"
#include "netsteer/measurements.hpp"
#include "netsteer/states.hpp"
#include "netsteer/thresholds.hpp"

namespace {

using namespace netsteer;

StarNetwork werner_network(std::size_t n) { return StarNetwork::uniform(make_werner(0.7), n); }

void BM_AssembleGlobal(benchmark::State& state) {
  const auto net = werner_network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_global(net));
}
BENCHMARK(BM_AssembleGlobal)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_GhzProjectors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ghz_projectors(n));
}
BENCHMARK(BM_GhzProjectors)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

// Includes building the global state on first use.
void BM_EvaluateDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto net = werner_network(n);
  EvalOptions opts;
  opts.path = CorrelatorPath::dense;
  const auto id = n % 2 == 0 ? InequalityId::T2B_EVEN_SQ : InequalityId::T2B_ODD_SQ;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(id, net, opts));
}
BENCHMARK(BM_EvaluateDense)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EvaluateFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto net = werner_network(n);
  EvalOptions opts;
  opts.path = CorrelatorPath::fast;
  const auto id = n % 2 == 0 ? InequalityId::T2B_EVEN_SQ : InequalityId::T2B_ODD_SQ;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(id, net, opts));
}
BENCHMARK(BM_EvaluateFast)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_WernerThreshold(benchmark::State& state) {
  ThresholdOptions opts;
  opts.eval.path = state.range(0) ? CorrelatorPath::dense : CorrelatorPath::fast;
  for (auto _ : state)
    benchmark::DoNotOptimize(werner_threshold(3, InequalityId::T2B_ODD_ROOT, opts));
}
BENCHMARK(BM_WernerThreshold)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NlhsOracle(benchmark::State& state) {
  OracleOptions opts;
  opts.restarts = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(maximize_nlhs(InequalityId::T2B_ODD_ROOT, 3, opts));
}
BENCHMARK(BM_NlhsOracle)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BlhsOracle(benchmark::State& state) {
  OracleOptions opts;
  opts.restarts = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(maximize_blhs_n3(InequalityId::T4_GEN_3SET, opts));
}
BENCHMARK(BM_BlhsOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
