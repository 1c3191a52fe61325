// Copyright 2026 The choicone Authors
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

#include <benchmark/benchmark.h>

#include <vector>

#include "choicone/choi.hpp"
#include "choicone/classify.hpp"
#include "choicone/cpfact.hpp"
#include "choicone/graph.hpp"
#include "choicone/sampler.hpp"

namespace {

using namespace choicone;

std::vector<ChoiMatrix> channels(std::size_t n, std::size_t count) {
  std::vector<ChoiMatrix> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(from_block_form(sample_blockform_channel(n, {i, 0.6, 0.2})));
  return out;
}

void BM_ClassifyQubitOutput(benchmark::State& state) {
  const auto js = channels(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_channel(js[i++ % js.size()]));
  }
}
BENCHMARK(BM_ClassifyQubitOutput)->DenseRange(1, 6)->Arg(12)->Arg(24);

void BM_BipartiteEngine(benchmark::State& state) {
  const auto rule = state.range(1) ? StepRule::kRebalance : StepRule::kResolvent;
  std::vector<BlockForm> bfs;
  for (std::uint64_t i = 0; i < 64; ++i)
    bfs.push_back(sample_blockform_channel(static_cast<std::size_t>(state.range(0)), {i, 0.6, 0.0}));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_bipartite_blockform(bfs[i++ % bfs.size()], {}, {500, rule}));
  }
}
BENCHMARK(BM_BipartiteEngine)->ArgsProduct({{2, 6, 16}, {0, 1}});

void BM_ForestEngine(benchmark::State& state) {
  const SymMatrix s = sample_forest_dnn(static_cast<std::size_t>(state.range(0)), {7, 0.9, 0.0});
  const SupportGraph g = support_graph(s, 1e-10);
  for (auto _ : state) benchmark::DoNotOptimize(factor_forest(s, g));
}
BENCHMARK(BM_ForestEngine)->Arg(8)->Arg(32)->Arg(128);

void BM_AlternatingProjection(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const SymMatrix s = sample_cp(r, 2 * r, {3, 0.6, 0.0}).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(factor_alternating_projection(s));
}
BENCHMARK(BM_AlternatingProjection)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const CpSample cs = sample_cp(r, 2 * r, {5, 0.6, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cs.matrix, cs.certificate));
}
BENCHMARK(BM_Verify)->Arg(8)->Arg(64);

void BM_SampleDnn(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_dnn(static_cast<std::size_t>(state.range(0)), {seed++, 0.5, 0.0}));
  }
}
BENCHMARK(BM_SampleDnn)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
