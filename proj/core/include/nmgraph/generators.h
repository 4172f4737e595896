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

// Named graph families and a reproducible random graph model.
//
// Random model (stable across platforms and implementations):
//   engine  std::mt19937_64 seeded with the 64-bit seed
//   u01()   (engine() >> 11) * 2^-53
//   below(k) engine() % k
//   G(n, p): for i in 0..n-1, for j in i+1..n-1: edge ij iff u01() < p
//   corpus(trials, max_n, seed): per trial n = 1 + below(max_n),
//                                p = u01(), then G(n, p)
// No std distribution objects are used; their output is implementation
// defined.

#ifndef NMGRAPH_GENERATORS_H_
#define NMGRAPH_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nmgraph/graph.h"

namespace nmgraph {

class GraphRng {
 public:
  explicit GraphRng(std::uint64_t seed) : engine_(seed) {}

  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  std::uint64_t Below(std::uint64_t k) { return engine_() % k; }

 private:
  std::mt19937_64 engine_;
};

Graph RandomGraph(std::size_t n, double p, GraphRng& rng);
std::vector<Graph> RandomCorpus(std::size_t trials, std::size_t max_n,
                                std::uint64_t seed);

// Every labelled graph on n vertices (2^(n(n-1)/2) of them). n <= 7.
std::vector<Graph> AllGraphs(std::size_t n);

Graph CompleteGraph(std::size_t n);
Graph CycleGraph(std::size_t n);
Graph PathGraph(std::size_t n);
Graph CompleteMinusEdge();  // K4 - e: 1-2, 1-3, 1-4, 2-3, 3-4 (no 2-4)
Graph Hypercube(std::size_t dimension);
Graph PetersenGraph();

// The 7-vertex, 8-edge example graph and the two-4-cycle example graph,
// labelled 1..n in index order.
Graph ExampleSevenVertexGraph();
Graph ExampleTwoSquaresGraph();

}  // namespace nmgraph

#endif  // NMGRAPH_GENERATORS_H_
