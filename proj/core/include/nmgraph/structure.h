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

// Structural quantities read directly off NM entries. Adjacency is recovered
// from the sign pattern (eta_ij > 0), so most functions take only the matrix.

#ifndef NMGRAPH_STRUCTURE_H_
#define NMGRAPH_STRUCTURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmgraph/graph.h"
#include "nmgraph/neighborhood_matrix.h"

namespace nmgraph {

// An exact multiple of 1/4.
struct Quarters {
  std::int64_t numerator = 0;

  bool is_integer() const { return numerator % 4 == 0; }
  // "p/4", unreduced.
  std::string ToString() const { return std::to_string(numerator) + "/4"; }

  friend Quarters operator+(Quarters a, Quarters b) {
    return {a.numerator + b.numerator};
  }
  friend bool operator==(Quarters, Quarters) = default;
};

// (1/6) sum_i sum_{j in N(i)} (|eta_jj| - eta_ij). Throws InvalidMatrixError
// if the sum is not divisible by 6.
std::uint64_t CountTriangles(const NeighborhoodMatrix& m);

struct FourCycleCounts {
  std::uint64_t total = 0;
  // (1/4) sum over ordered non-adjacent pairs i != j of C(|eta_ij|, 2).
  Quarters non_adjacent_term;
  // (1/4) sum over ordered adjacent pairs of C(|eta_jj| - eta_ij, 2).
  Quarters adjacent_term;
};

// Number of 4-cycle subgraphs, induced or not. Throws InvalidMatrixError when
// the two terms do not add up to an integer.
FourCycleCounts CountFourCycles(const NeighborhoodMatrix& m);

struct DecompositionCheck {
  bool holds = false;
  std::string diff;  // empty when `holds`
};

// Checks the split of the 4-cycle count against a subgraph census of `g`:
//   non_adjacent_term = #induced C4 + #(K4-e)/2
//   adjacent_term     = 3 #K4      + #(K4-e)/2
DecompositionCheck CheckFourCycleDecomposition(const NeighborhoodMatrix& m,
                                               const Graph& g);

// eta_ij == |eta_jj| on every edge.
bool IsTriangleFree(const NeighborhoodMatrix& m);

// eta_ij >= -1 on every off-diagonal non-edge: no two non-adjacent vertices
// share two neighbours. This rules out induced C4 and also induced K4-e.
bool IsInducedC4Free(const NeighborhoodMatrix& m);

bool HasGirthAtLeast5(const NeighborhoodMatrix& m);

// No zero entry anywhere.
bool HasDiameterAtMost2(const NeighborhoodMatrix& m);

// Some row has no zero entry, which bounds the diameter by 4. The converse
// does not hold.
bool SomeRowHasNoZero(const NeighborhoodMatrix& m);

struct SrgParameters {
  std::int64_t k = 0;
  // Absent when the graph has no adjacent (resp. non-adjacent) pairs.
  std::optional<std::int64_t> mu1;
  std::optional<std::int64_t> mu2;
};

struct StrongRegularityProfile {
  std::vector<Entry> distinct_values;  // ascending
  bool srg_consistent = false;
  std::optional<SrgParameters> parameters;
};

// Distinct entries of `m` and whether `g` is strongly regular, decided on the
// graph itself: k-regular with k >= 1, constant common-neighbour count mu1 on
// adjacent pairs and mu2 on non-adjacent pairs. When it is, the entry set
// must be exactly {-k, k - mu1, -mu2} (minus any absent pair class) or
// ConsistencyError is thrown.
StrongRegularityProfile ProfileStrongRegularity(const NeighborhoodMatrix& m,
                                                const Graph& g);

struct StructuralReport {
  std::uint64_t triangle_count = 0;
  std::uint64_t four_cycle_count = 0;
  Quarters s1_term;  // non-adjacent pairs
  Quarters s2_term;  // adjacent pairs
  bool triangle_free = false;
  bool induced_c4_free = false;
  bool girth_at_least_5 = false;
  bool diameter_at_most_2 = false;
  bool diameter_upper_bound_4 = false;
  StrongRegularityProfile strong_regularity;
};

StructuralReport Analyze(const NeighborhoodMatrix& m, const Graph& g);

}  // namespace nmgraph

#endif  // NMGRAPH_STRUCTURE_H_
