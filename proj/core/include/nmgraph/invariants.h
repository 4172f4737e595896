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

#ifndef NMGRAPH_INVARIANTS_H_
#define NMGRAPH_INVARIANTS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "nmgraph/graph.h"
#include "nmgraph/neighborhood_matrix.h"

namespace nmgraph {

struct InvariantTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  // Edge list of the first failing graph, then the reason.
  std::string counterexample;

  bool passed() const { return failed == 0; }
};

// Runs every matrix identity, oracle equivalence and characterization on a
// stream of graphs and tallies the outcome per invariant.
class InvariantSuite {
 public:
  // Largest n for the exact determinant and the subset-enumeration oracles.
  static constexpr std::size_t kDeterminantLimit = 64;

  InvariantSuite();

  void Check(const Graph& g);
  // Checks `m` as if it were NM(g). Used to feed deliberately wrong matrices.
  void Check(const Graph& g, const NeighborhoodMatrix& m);

  const std::vector<InvariantTally>& tallies() const { return tallies_; }
  std::size_t graphs_checked() const { return graphs_; }
  bool all_passed() const;

 private:
  std::vector<InvariantTally> tallies_;
  std::size_t graphs_ = 0;
};

}  // namespace nmgraph

#endif  // NMGRAPH_INVARIANTS_H_
