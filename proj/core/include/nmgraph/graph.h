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

// Undirected simple graphs and the classical traversal primitives (BFS
// levels, components, diameter, girth) used as ground truth elsewhere.

#ifndef NMGRAPH_GRAPH_H_
#define NMGRAPH_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace nmgraph {

using Vertex = std::size_t;
using Label = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable undirected simple graph. Vertices are dense indices 0..n-1; each
// carries the external label it was read with.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on `n` vertices. Duplicate edges collapse; self-loops and
  // out-of-range endpoints throw std::invalid_argument. Labels default to
  // 1..n and must be distinct when given.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges,
                         std::vector<Label> labels = {});

  // Edgeless graph on `n` vertices labelled 1..n.
  static Graph Empty(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  // Sorted neighbour indices of `v`.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<Label>& labels() const { return labels_; }
  Label label(Vertex v) const;
  // Index of the vertex carrying `label`, if any.
  std::optional<Vertex> index_of(Label label) const;

  // All edges (u, v) with u < v, in lexicographic index order.
  std::vector<Edge> edges() const;

  // Same graph with vertices renumbered so that labels ascend.
  Graph SortedByLabel() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
};

// Reads "u v" edge lines. '#' lines and blank lines are skipped; a line with a
// single label declares an isolated vertex. Labels map to indices in order of
// first appearance.
Graph ParseEdgeList(std::istream& in);
Graph ParseEdgeList(std::string_view text);

// One "u v" line per edge with labels, sorted by (label u, label v) with
// u < v, followed by one line per isolated vertex.
void WriteEdgeList(const Graph& g, std::ostream& out);

std::vector<Vertex> CommonNeighbors(const Graph& g, Vertex u, Vertex v);
// N(u) \ N(v).
std::vector<Vertex> ExclusiveNeighbors(const Graph& g, Vertex u, Vertex v);

struct LevelAssignment {
  static constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

  Vertex root = 0;
  std::vector<std::size_t> level;

  bool reachable(Vertex v) const { return level[v] != kUnreachable; }
  // Vertices at distance exactly `d`, ascending.
  std::vector<Vertex> AtLevel(std::size_t d) const;
  std::size_t depth() const;
};

LevelAssignment BfsLevels(const Graph& g, Vertex root);

struct ComponentPartition {
  std::size_t count = 0;
  std::vector<std::size_t> membership;
};

ComponentPartition ConnectedComponents(const Graph& g);

bool IsConnected(const Graph& g);

// Largest pairwise distance; nullopt ("infinite") when the graph is
// disconnected or has fewer than two vertices.
std::optional<std::size_t> Diameter(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> Girth(const Graph& g);

}  // namespace nmgraph

#endif  // NMGRAPH_GRAPH_H_
