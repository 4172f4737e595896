// Copyright 2026 The nmgraph Authors
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

#include "benchmark/benchmark.h"
#include "nmgraph/generators.h"
#include "nmgraph/neighborhood_matrix.h"
#include "nmgraph/oracles.h"
#include "nmgraph/structure.h"

namespace nmgraph {
namespace {

constexpr double kAverageDegree = 8.0;

Graph SparseGraph(std::size_t n) {
  GraphRng rng(1);
  return RandomGraph(n, n > 1 ? kAverageDegree / (n - 1) : 0.0, rng);
}

void BM_BuildNm(benchmark::State& state) {
  const Graph g = SparseGraph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BuildNeighborhoodMatrix(g));
}
BENCHMARK(BM_BuildNm)->RangeMultiplier(2)->Range(128, 2048);

void BM_BuildNmByProduct(benchmark::State& state) {
  const Graph g = SparseGraph(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildNeighborhoodMatrixByProduct(g));
  }
}
BENCHMARK(BM_BuildNmByProduct)->RangeMultiplier(2)->Range(128, 512);

void BM_TrianglesFromNm(benchmark::State& state) {
  const Graph g = SparseGraph(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountTriangles(BuildNeighborhoodMatrix(g)));
  }
}
BENCHMARK(BM_TrianglesFromNm)->RangeMultiplier(2)->Range(128, 1024);

void BM_TrianglesByTrace(benchmark::State& state) {
  const Graph g = SparseGraph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TriangleCountByTrace(g));
}
BENCHMARK(BM_TrianglesByTrace)->RangeMultiplier(2)->Range(128, 1024);

void BM_FourCycles(benchmark::State& state) {
  const NeighborhoodMatrix m = BuildNeighborhoodMatrix(SparseGraph(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CountFourCycles(m));
}
BENCHMARK(BM_FourCycles)->RangeMultiplier(2)->Range(128, 1024);

void BM_Determinant(benchmark::State& state) {
  const NeighborhoodMatrix m = BuildNeighborhoodMatrix(SparseGraph(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(16, 64, 16);

}  // namespace
}  // namespace nmgraph

BENCHMARK_MAIN();
