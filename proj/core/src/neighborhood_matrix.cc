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

#include "nmgraph/neighborhood_matrix.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "nmgraph/errors.h"

namespace nmgraph {

NeighborhoodMatrix::NeighborhoodMatrix(std::size_t n, std::vector<Label> labels)
    : NeighborhoodMatrix(n, std::vector<Entry>(n * n, 0), std::move(labels)) {}

NeighborhoodMatrix::NeighborhoodMatrix(std::size_t n,
                                       std::vector<Entry> entries,
                                       std::vector<Label> labels)
    : n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (entries_.size() != n * n) {
    throw std::invalid_argument("matrix needs " + std::to_string(n * n) +
                                " entries, got " +
                                std::to_string(entries_.size()));
  }
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), Label{1});
  }
  if (labels_.size() != n) {
    throw std::invalid_argument("label count does not match dimension");
  }
}

Entry NeighborhoodMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  return (*this)(i, j);
}

std::span<const Entry> NeighborhoodMatrix::row(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("row index out of range");
  return std::span<const Entry>(entries_).subspan(i * n_, n_);
}

std::span<Entry> NeighborhoodMatrix::mutable_row(std::size_t i) {
  if (i >= n_) throw std::out_of_range("row index out of range");
  return std::span<Entry>(entries_).subspan(i * n_, n_);
}

NeighborhoodMatrix NeighborhoodMatrix::Transposed() const {
  NeighborhoodMatrix t(n_, labels_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

namespace {

// Fills row `i` given `common[j] = |N(i) & N(j)|` for the touched j.
// `common` is returned to all-zero on exit.
void FillRow(const Graph& g, Vertex i, std::vector<Entry>& common,
             std::vector<Vertex>& touched, std::span<Entry> out,
             bool transpose) {
  touched.clear();
  for (Vertex a : g.neighbors(i)) {
    for (Vertex j : g.neighbors(a)) {
      if (j == i) continue;
      if (common[j]++ == 0) touched.push_back(j);
    }
  }
  const auto deg_i = static_cast<Entry>(g.degree(i));
  out[i] = -deg_i;
  for (Vertex j : touched) out[j] = -common[j];
  for (Vertex j : g.neighbors(i)) {
    // |N(j) \ N(i)| for NM, |N(i) \ N(j)| for MN.
    const Entry base = transpose ? deg_i : static_cast<Entry>(g.degree(j));
    out[j] = base - common[j];
  }
  for (Vertex j : touched) common[j] = 0;
}

NeighborhoodMatrix BuildRows(const Graph& g, unsigned threads,
                             bool transpose) {
  const std::size_t n = g.order();
  NeighborhoodMatrix m(n, g.labels());
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<Entry> common(n, 0);
    std::vector<Vertex> touched;
    for (Vertex i = begin; i < end; ++i) {
      FillRow(g, i, common, touched, m.mutable_row(i), transpose);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * threads) {
    work(0, n);
    return m;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    workers.emplace_back(work, begin, std::min(n, begin + chunk));
  }
  return m;
}

}  // namespace

NeighborhoodMatrix BuildNeighborhoodMatrix(const Graph& g, unsigned threads) {
  return BuildRows(g, threads, /*transpose=*/false);
}

NeighborhoodMatrix BuildTransposeMatrix(const Graph& g) {
  return BuildRows(g, 1, /*transpose=*/true);
}

NeighborhoodMatrix BuildNeighborhoodMatrixByProduct(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Entry> adjacency(n * n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u * n + v] = 1;
    adjacency[v * n + u] = 1;
  }
  // Laplacian C = D - A.
  std::vector<Entry> laplacian(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      laplacian[i * n + j] =
          (i == j ? static_cast<Entry>(g.degree(i)) : 0) - adjacency[i * n + j];
    }
  }
  NeighborhoodMatrix m(n, g.labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Entry a = adjacency[i * n + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) m(i, j) += a * laplacian[k * n + j];
    }
  }
  return m;
}

Graph ReconstructGraph(const NeighborhoodMatrix& m) {
  const std::size_t n = m.dimension();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) > 0) {
      throw InvalidMatrixError("positive diagonal entry at row " +
                               std::to_string(m.labels()[i]));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool forward = m(i, j) > 0;
      if (forward != (m(j, i) > 0)) {
        throw InvalidMatrixError(
            "asymmetric sign pattern at (" + std::to_string(m.labels()[i]) +
            ", " + std::to_string(m.labels()[j]) + ")");
      }
      if (forward) edges.emplace_back(i, j);
    }
  }
  Graph g = Graph::FromEdges(n, edges, m.labels());
  const NeighborhoodMatrix rebuilt = BuildNeighborhoodMatrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rebuilt(i, j) != m(i, j)) {
        throw InvalidMatrixError(
            "entry (" + std::to_string(m.labels()[i]) + ", " +
            std::to_string(m.labels()[j]) + ") is " + std::to_string(m(i, j)) +
            " but the recovered graph gives " + std::to_string(rebuilt(i, j)));
      }
    }
  }
  return g;
}

std::vector<Entry> RowSums(const NeighborhoodMatrix& m) {
  std::vector<Entry> sums(m.dimension(), 0);
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    const auto r = m.row(i);
    sums[i] = std::accumulate(r.begin(), r.end(), Entry{0});
  }
  return sums;
}

ColumnSums ComputeColumnSums(const NeighborhoodMatrix& m, const Graph& g) {
  const std::size_t n = m.dimension();
  if (g.order() != n) {
    throw std::invalid_argument("graph and matrix dimensions differ");
  }
  ColumnSums out;
  out.summed.assign(n, 0);
  out.formula.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.summed[j] += m(i, j);
  }
  for (Vertex i = 0; i < n; ++i) {
    const auto deg_i = static_cast<Entry>(g.degree(i));
    for (Vertex j : g.neighbors(i)) {
      out.formula[i] += deg_i - static_cast<Entry>(g.degree(j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.summed[i] != out.formula[i]) {
      throw ConsistencyError("column " + std::to_string(g.label(i)) +
                             " sums to " + std::to_string(out.summed[i]) +
                             ", degree formula gives " +
                             std::to_string(out.formula[i]));
    }
  }
  return out;
}

bool IsSymmetric(const NeighborhoodMatrix& m) {
  const std::size_t n = m.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

std::vector<Triplet> NonZeros(const NeighborhoodMatrix& m) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (m(i, j) != 0) out.push_back({i, j, m(i, j)});
    }
  }
  return out;
}

}  // namespace nmgraph
