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

#include "nmgraph/row_profile.h"

#include <algorithm>
#include <stdexcept>

#include "nmgraph/errors.h"

namespace nmgraph {

RowProfile DecodeRow(std::span<const Entry> row,
                     std::optional<std::size_t> diagonal) {
  if (diagonal && *diagonal >= row.size()) {
    throw std::out_of_range("diagonal position outside the row");
  }
  const bool all_zero =
      std::all_of(row.begin(), row.end(), [](Entry e) { return e == 0; });
  const bool has_negative =
      std::any_of(row.begin(), row.end(), [](Entry e) { return e < 0; });
  if (!all_zero && !has_negative) {
    throw InvalidMatrixError("row has no negative entry");
  }

  RowProfile p;
  if (row.empty()) return p;

  const Entry minimum = *std::min_element(row.begin(), row.end());
  p.degree = -minimum;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == minimum) p.diagonal_candidates.push_back(j);
  }
  p.row_index = diagonal;
  if (!p.row_index && p.diagonal_is_unique()) {
    p.row_index = p.diagonal_candidates.front();
  }

  for (std::size_t j = 0; j < row.size(); ++j) {
    const Entry e = row[j];
    if (e > 0) {
      p.level1.push_back(j);
      p.out_edge_count[j] = e - 1;
    } else if (e == 0) {
      p.zero_positions.push_back(j);
    } else if (j != p.row_index) {
      p.level2[j] = -e;
    }
  }
  return p;
}

RowProfile ProfileRow(const NeighborhoodMatrix& m, std::size_t i) {
  return DecodeRow(m.row(i), i);
}

bool TwoLevelSubgraph::MatchesRow(std::span<const Entry> row) const {
  std::map<Vertex, Entry> down;
  std::map<Vertex, Entry> up;
  for (const auto& [near, far] : edges) {
    if (near == root) continue;
    ++down[near];
    ++up[far];
  }
  for (Vertex j : level1) {
    if (row[j] - 1 != down[j]) return false;
  }
  for (Vertex k : level2) {
    if (-row[k] != up[k]) return false;
  }
  return true;
}

TwoLevelSubgraph BuildTwoLevelSubgraph(const Graph& g, Vertex root) {
  const LevelAssignment levels = BfsLevels(g, root);
  TwoLevelSubgraph s;
  s.root = root;
  s.level1 = levels.AtLevel(1);
  s.level2 = levels.AtLevel(2);
  for (Vertex j : s.level1) s.edges.emplace_back(root, j);
  for (Vertex j : s.level1) {
    for (Vertex k : g.neighbors(j)) {
      if (levels.level[k] == 2) s.edges.emplace_back(j, k);
    }
  }
  return s;
}

}  // namespace nmgraph
