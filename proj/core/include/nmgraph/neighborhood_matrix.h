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

// The neighbourhood matrix NM(G) = A(D - A) of a simple graph:
//
//   eta_ii = -|N(i)|
//   eta_ij =  |N(j) \ N(i)|      if ij is an edge
//   eta_ij = -|N(i) & N(j)|      otherwise
//
// and its transpose MN(G) = (D - A)A. Row i of NM describes the first two BFS
// levels around i: positive entries are the neighbours, negative off-diagonal
// entries count length-2 paths to second-level vertices, zeros are at
// distance >= 3.

#ifndef NMGRAPH_NEIGHBORHOOD_MATRIX_H_
#define NMGRAPH_NEIGHBORHOOD_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nmgraph/graph.h"

namespace nmgraph {

using Entry = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Dense n x n signed integer matrix, row-major, with the external vertex
// labels of the graph it came from.
class NeighborhoodMatrix {
 public:
  NeighborhoodMatrix() = default;
  // Zero matrix; labels default to 1..n.
  explicit NeighborhoodMatrix(std::size_t n, std::vector<Label> labels = {});
  NeighborhoodMatrix(std::size_t n, std::vector<Entry> entries,
                     std::vector<Label> labels);

  std::size_t dimension() const { return n_; }

  Entry operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  Entry& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }
  Entry at(std::size_t i, std::size_t j) const;

  std::span<const Entry> row(std::size_t i) const;
  std::span<Entry> mutable_row(std::size_t i);
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<Label>& labels() const { return labels_; }

  NeighborhoodMatrix Transposed() const;

  // Adjacency read back from the sign pattern: j is a neighbour of i iff
  // eta_ij > 0.
  bool adjacent(std::size_t i, std::size_t j) const {
    return (*this)(i, j) > 0;
  }
  // |eta_ii|.
  Entry degree(std::size_t i) const { return -(*this)(i, i); }

  friend bool operator==(const NeighborhoodMatrix&,
                         const NeighborhoodMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Entry> entries_;
  std::vector<Label> labels_;
};

// NM(G) from neighbourhood sets. Rows are independent; `threads` > 1 splits
// them across workers with a bit-identical result.
NeighborhoodMatrix BuildNeighborhoodMatrix(const Graph& g,
                                           unsigned threads = 1);

// NM(G) as the dense integer product A * (D - A). Reference path only.
NeighborhoodMatrix BuildNeighborhoodMatrixByProduct(const Graph& g);

// MN(G) = (D - A) * A, from neighbourhood sets.
NeighborhoodMatrix BuildTransposeMatrix(const Graph& g);

// Graph with edge ij iff eta_ij > 0. Throws InvalidMatrixError when the sign
// pattern is not symmetric, has a positive diagonal, or the input differs
// from the NM of the recovered graph.
Graph ReconstructGraph(const NeighborhoodMatrix& m);

std::vector<Entry> RowSums(const NeighborhoodMatrix& m);

struct ColumnSums {
  std::vector<Entry> summed;
  // sum over j in N(i) of (deg i - deg j).
  std::vector<Entry> formula;
};

// Column totals of `m` next to the degree formula computed from `g`. Throws
// ConsistencyError if they differ.
ColumnSums ComputeColumnSums(const NeighborhoodMatrix& m, const Graph& g);

bool IsSymmetric(const NeighborhoodMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination. Defined for n = 0
// as 1.
BigInt Determinant(const NeighborhoodMatrix& m);
BigInt Determinant(std::size_t n, std::span<const Entry> entries);

// Non-zero entries in row-major order, 0-based.
struct Triplet {
  std::size_t row;
  std::size_t col;
  Entry value;
};
std::vector<Triplet> NonZeros(const NeighborhoodMatrix& m);

}  // namespace nmgraph

#endif  // NMGRAPH_NEIGHBORHOOD_MATRIX_H_
