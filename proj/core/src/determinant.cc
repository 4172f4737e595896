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

#include <stdexcept>
#include <utility>
#include <vector>

#include "nmgraph/neighborhood_matrix.h"

namespace nmgraph {

BigInt Determinant(std::size_t n, std::span<const Entry> entries) {
  if (entries.size() != n * n) {
    throw std::invalid_argument("determinant needs a square matrix");
  }
  if (n == 0) return BigInt{1};

  std::vector<BigInt> a(entries.begin(), entries.end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  // Bareiss: after step k every a(i, j) with i, j > k is a (k+1)-minor of the
  // input, so each division below is exact.
  BigInt previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return BigInt{0};
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous_pivot;
      }
      at(i, k) = 0;
    }
    previous_pivot = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

BigInt Determinant(const NeighborhoodMatrix& m) {
  return Determinant(m.dimension(), m.entries());
}

}  // namespace nmgraph
