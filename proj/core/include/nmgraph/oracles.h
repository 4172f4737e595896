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

// Brute-force ground truth. Nothing here reads a NeighborhoodMatrix; the
// routines work on the graph alone via dense products and subset enumeration.

#ifndef NMGRAPH_ORACLES_H_
#define NMGRAPH_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nmgraph/graph.h"

namespace nmgraph {

inline constexpr std::size_t kCensusVertexLimit = 64;

// Dense 0/1 adjacency matrix, row-major.
std::vector<std::int64_t> DenseAdjacency(const Graph& g);

// trace(A^3) / 6 from dense integer matrix products.
std::uint64_t TriangleCountByTrace(const Graph& g);

// A^2: common-neighbour counts off the diagonal, degrees on it. Row-major.
std::vector<std::int64_t> AllPairsCommonNeighbors(const Graph& g);

struct SubgraphCensus {
  std::uint64_t triangle_count = 0;
  // 4-cycle subgraphs: each induced C4 holds one, each K4-e one, each K4
  // three.
  std::uint64_t c4_total = 0;
  std::uint64_t c4_induced = 0;
  std::uint64_t k4_count = 0;
  std::uint64_t k4_minus_edge_count = 0;
};

// Enumerates every 3- and 4-vertex subset. Refuses graphs above
// kCensusVertexLimit vertices (std::length_error) unless `allow_large`.
SubgraphCensus TakeSubgraphCensus(const Graph& g, bool allow_large = false);

}  // namespace nmgraph

#endif  // NMGRAPH_ORACLES_H_
