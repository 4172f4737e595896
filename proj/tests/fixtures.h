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

// Golden matrices typed in by hand, independent of the library's builders.

#ifndef NMGRAPH_TESTS_FIXTURES_H_
#define NMGRAPH_TESTS_FIXTURES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "nmgraph/generators.h"
#include "nmgraph/graph.h"
#include "nmgraph/neighborhood_matrix.h"

namespace nmgraph::testing {

// NM of the 7-vertex example graph (edges 1-2 1-6 2-5 3-4 4-5 5-6 5-7 6-7).
inline const std::vector<Entry> kSevenVertexNm = {
    -2, 2,  0,  0,  -2, 3,  -1,  //
    2,  -2, 0,  -1, 4,  -2, -1,  //
    0,  0,  -1, 2,  -1, 0,  0,   //
    0,  -1, 1,  -2, 4,  -1, -1,  //
    -2, 2,  -1, 2,  -4, 2,  1,   //
    2,  -2, 0,  -1, 3,  -3, 1,   //
    -1, -1, 0,  -1, 3,  2,  -2,  //
};

// Its adjacency matrix, as recovered from the sign pattern.
inline const std::vector<int> kSevenVertexAdjacency = {
    0, 1, 0, 0, 0, 1, 0,  //
    1, 0, 0, 0, 1, 0, 0,  //
    0, 0, 0, 1, 0, 0, 0,  //
    0, 0, 1, 0, 1, 0, 0,  //
    0, 1, 0, 1, 0, 1, 1,  //
    1, 0, 0, 0, 1, 0, 1,  //
    0, 0, 0, 0, 1, 1, 0,  //
};

// NM of two disjoint 4-cycles 1-2-6-5 and 3-4-8-7.
inline const std::vector<Entry> kTwoSquaresNm = {
    -2, 2,  0,  0,  2,  -2, 0,  0,   //
    2,  -2, 0,  0,  -2, 2,  0,  0,   //
    0,  0,  -2, 2,  0,  0,  2,  -2,  //
    0,  0,  2,  -2, 0,  0,  -2, 2,   //
    2,  -2, 0,  0,  -2, 2,  0,  0,   //
    -2, 2,  0,  0,  2,  -2, 0,  0,   //
    0,  0,  2,  -2, 0,  0,  -2, 2,   //
    0,  0,  -2, 2,  0,  0,  2,  -2,  //
};

inline NeighborhoodMatrix SevenVertexNm() {
  return NeighborhoodMatrix(7, kSevenVertexNm, {});
}
inline NeighborhoodMatrix TwoSquaresNm() {
  return NeighborhoodMatrix(8, kTwoSquaresNm, {});
}

// Vertex with 1-based label `label` in a graph labelled 1..n.
inline Vertex V(int label) { return static_cast<Vertex>(label - 1); }

// gmock container matchers need const_iterator, which std::span lacks.
inline std::vector<Entry> ToVector(std::span<const Entry> row) {
  return {row.begin(), row.end()};
}

inline std::vector<Vertex> Vs(std::initializer_list<int> labels) {
  std::vector<Vertex> out;
  for (int l : labels) out.push_back(V(l));
  return out;
}

}  // namespace nmgraph::testing

#endif  // NMGRAPH_TESTS_FIXTURES_H_
