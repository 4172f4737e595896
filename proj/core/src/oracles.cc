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

#include "nmgraph/oracles.h"

#include <array>
#include <stdexcept>
#include <string>

#include "nmgraph/errors.h"

namespace nmgraph {

std::vector<std::int64_t> DenseAdjacency(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> a(n * n, 0);
  for (const auto& [u, v] : g.edges()) {
    a[u * n + v] = 1;
    a[v * n + u] = 1;
  }
  return a;
}

namespace {

std::vector<std::int64_t> Square(const std::vector<std::int64_t>& a,
                                 std::size_t n) {
  std::vector<std::int64_t> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * a[k * n + j];
    }
  }
  return out;
}

}  // namespace

std::uint64_t TriangleCountByTrace(const Graph& g) {
  const std::size_t n = g.order();
  const auto a = DenseAdjacency(g);
  const auto a2 = Square(a, n);
  // trace(A^3) = sum_ij (A^2)_ij A_ji.
  std::int64_t trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) trace += a2[i * n + j] * a[j * n + i];
  }
  if (trace % 6 != 0) {
    throw ConsistencyError("trace(A^3) = " + std::to_string(trace) +
                           " is not divisible by 6");
  }
  return static_cast<std::uint64_t>(trace / 6);
}

std::vector<std::int64_t> AllPairsCommonNeighbors(const Graph& g) {
  return Square(DenseAdjacency(g), g.order());
}

SubgraphCensus TakeSubgraphCensus(const Graph& g, bool allow_large) {
  const std::size_t n = g.order();
  if (n > kCensusVertexLimit && !allow_large) {
    throw std::length_error("subgraph census refuses " + std::to_string(n) +
                            " vertices (limit " +
                            std::to_string(kCensusVertexLimit) + ")");
  }
  const auto a = DenseAdjacency(g);
  auto adj = [&](std::size_t u, std::size_t v) { return a[u * n + v] != 0; };

  SubgraphCensus c;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (adj(x, y) && adj(y, z) && adj(x, z)) ++c.triangle_count;
        for (std::size_t w = z + 1; w < n; ++w) {
          const std::array<std::size_t, 4> q{x, y, z, w};
          std::array<int, 4> deg{};
          int edges = 0;
          for (int s = 0; s < 4; ++s) {
            for (int t = s + 1; t < 4; ++t) {
              if (adj(q[s], q[t])) {
                ++edges;
                ++deg[s];
                ++deg[t];
              }
            }
          }
          // The three Hamiltonian cycles of a 4-set, as vertex orders.
          constexpr std::array<std::array<int, 4>, 3> kCycles{
              {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
          for (const auto& cyc : kCycles) {
            bool present = true;
            for (int s = 0; s < 4 && present; ++s) {
              present = adj(q[cyc[s]], q[cyc[(s + 1) % 4]]);
            }
            if (present) ++c.c4_total;
          }
          if (edges == 6) {
            ++c.k4_count;
          } else if (edges == 5) {
            ++c.k4_minus_edge_count;
          } else if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 &&
                     deg[3] == 2) {
            ++c.c4_induced;
          }
        }
      }
    }
  }
  if (c.c4_total != c.c4_induced + c.k4_minus_edge_count + 3 * c.k4_count) {
    throw ConsistencyError("4-cycle census does not decompose");
  }
  return c;
}

}  // namespace nmgraph
