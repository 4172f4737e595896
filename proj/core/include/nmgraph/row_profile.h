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

#ifndef NMGRAPH_ROW_PROFILE_H_
#define NMGRAPH_ROW_PROFILE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nmgraph/graph.h"
#include "nmgraph/neighborhood_matrix.h"

namespace nmgraph {

// What a single NM row reveals about the BFS levels around its vertex. All
// positions are 0-based.
struct RowProfile {
  std::optional<std::size_t> row_index;
  // Positions with eta > 0: the neighbours.
  std::vector<std::size_t> level1;
  // Neighbour j -> eta_ij - 1, its number of edges into level 2.
  std::map<std::size_t, Entry> out_edge_count;
  // Second-level vertex j -> |eta_ij|, its number of edges back into level 1.
  std::map<std::size_t, Entry> level2;
  // Positions attaining the row minimum. The diagonal is always among them.
  std::vector<std::size_t> diagonal_candidates;
  std::vector<std::size_t> zero_positions;
  // -(row minimum); every candidate reads the same value.
  Entry degree = 0;

  bool diagonal_is_unique() const { return diagonal_candidates.size() == 1; }
};

// Decodes one row. When `diagonal` is not given it is inferred from the row
// minimum if that is unique; otherwise no position is excluded from level 2.
// Throws InvalidMatrixError for a row that has no negative entry and is not
// entirely zero.
RowProfile DecodeRow(std::span<const Entry> row,
                     std::optional<std::size_t> diagonal = std::nullopt);

RowProfile ProfileRow(const NeighborhoodMatrix& m, std::size_t i);

// Vertices within distance 2 of `root`, keeping only root-level1 and
// level1-level2 edges.
struct TwoLevelSubgraph {
  Vertex root = 0;
  std::vector<Vertex> level1;
  std::vector<Vertex> level2;
  // (u, v) with u the endpoint nearer the root.
  std::vector<Edge> edges;

  // True when the per-vertex crossing-edge counts agree with row `root` of
  // the graph's NM: each level-1 j has eta_rj - 1 edges down, each level-2 k
  // has |eta_rk| edges up.
  bool MatchesRow(std::span<const Entry> row) const;
};

TwoLevelSubgraph BuildTwoLevelSubgraph(const Graph& g, Vertex root);

}  // namespace nmgraph

#endif  // NMGRAPH_ROW_PROFILE_H_
