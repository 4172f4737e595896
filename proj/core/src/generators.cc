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

#include "nmgraph/generators.h"

#include <stdexcept>

namespace nmgraph {

namespace {

// Edges given with 1-based labels on vertices 1..n.
Graph FromOneBased(std::size_t n,
                   std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
  return Graph::FromEdges(n, e);
}

}  // namespace

Graph RandomGraph(std::size_t n, double p, GraphRng& rng) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.Uniform01() < p) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

std::vector<Graph> RandomCorpus(std::size_t trials, std::size_t max_n,
                                std::uint64_t seed) {
  std::vector<Graph> out;
  if (max_n == 0) return out;
  out.reserve(trials);
  GraphRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng.Below(max_n);
    const double p = rng.Uniform01();
    out.push_back(RandomGraph(n, p, rng));
  }
  return out;
}

std::vector<Graph> AllGraphs(std::size_t n) {
  if (n > 7) throw std::invalid_argument("AllGraphs supports n <= 7");
  std::vector<Edge> slots;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<Graph> out;
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  out.reserve(count);
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1) edges.push_back(slots[b]);
    }
    out.push_back(Graph::FromEdges(n, edges));
  }
  return out;
}

Graph CompleteGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(n, edges);
}

Graph CycleGraph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges);
}

Graph PathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges);
}

Graph CompleteMinusEdge() {
  return FromOneBased(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
}

Graph Hypercube(std::size_t dimension) {
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < dimension; ++b) {
      const Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph PetersenGraph() {
  // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram 6..10.
  return FromOneBased(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                           {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

Graph ExampleSevenVertexGraph() {
  return FromOneBased(7, {{1, 2}, {1, 6}, {2, 5}, {3, 4},
                          {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

Graph ExampleTwoSquaresGraph() {
  return FromOneBased(8, {{1, 2}, {5, 1}, {6, 2}, {3, 4},
                          {3, 7}, {4, 8}, {7, 8}, {5, 6}});
}

}  // namespace nmgraph
