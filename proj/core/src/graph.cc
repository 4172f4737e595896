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

#include "nmgraph/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "nmgraph/errors.h"

namespace nmgraph {

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges,
                       std::vector<Label> labels) {
  Graph g;
  g.adj_.resize(n);
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), Label{1});
  }
  if (labels.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  {
    std::vector<Label> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate vertex label");
    }
  }
  g.labels_ = std::move(labels);

  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on vertex " +
                                  std::to_string(g.labels_[u]));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice_m = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_m += nbrs.size();
  }
  g.edge_count_ = twice_m / 2;
  return g;
}

Graph Graph::Empty(std::size_t n) { return FromEdges(n, {}); }

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= adj_.size()) throw std::out_of_range("vertex index out of range");
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  if (v >= adj_.size()) throw std::out_of_range("vertex index out of range");
  return std::binary_search(nu.begin(), nu.end(), v);
}

Label Graph::label(Vertex v) const {
  if (v >= labels_.size()) throw std::out_of_range("vertex index out of range");
  return labels_[v];
}

std::optional<Vertex> Graph::index_of(Label label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::SortedByLabel() const {
  const std::size_t n = order();
  std::vector<Vertex> by_label(n);
  std::iota(by_label.begin(), by_label.end(), Vertex{0});
  std::sort(by_label.begin(), by_label.end(),
            [&](Vertex a, Vertex b) { return labels_[a] < labels_[b]; });
  std::vector<Vertex> new_index(n);
  std::vector<Label> new_labels(n);
  for (Vertex i = 0; i < n; ++i) {
    new_index[by_label[i]] = i;
    new_labels[i] = labels_[by_label[i]];
  }
  std::vector<Edge> remapped;
  remapped.reserve(edge_count_);
  for (const auto& [u, v] : edges()) {
    remapped.emplace_back(new_index[u], new_index[v]);
  }
  return FromEdges(n, remapped, std::move(new_labels));
}

namespace {

bool ParseLabel(std::string_view token, Label& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && out >= 0;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph ParseEdgeList(std::istream& in) {
  std::vector<Label> labels;
  std::unordered_map<Label, Vertex> index;
  std::vector<Edge> edges;

  auto intern = [&](Label label) {
    auto [it, inserted] = index.try_emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() > 2) {
      throw ParseError(line_no, "expected \"u v\", got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    Label a = 0;
    Label b = 0;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (!ParseLabel(tokens[t], t == 0 ? a : b)) {
        throw ParseError(line_no, "not a non-negative integer label: '" +
                                      std::string(tokens[t]) + "'");
      }
    }
    if (tokens.size() == 1) {
      intern(a);
      continue;
    }
    if (a == b) {
      throw ParseError(line_no, "self-loop " + std::to_string(a) + " " +
                                    std::to_string(b));
    }
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  return Graph::FromEdges(n, edges, std::move(labels));
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(g.size());
  for (const auto& [u, v] : g.edges()) {
    const Label a = g.label(u);
    const Label b = g.label(v);
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) out << a << ' ' << b << '\n';

  std::vector<Label> isolated;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(g.label(v));
  }
  std::sort(isolated.begin(), isolated.end());
  for (Label l : isolated) out << l << '\n';
}

std::vector<Vertex> CommonNeighbors(const Graph& g, Vertex u, Vertex v) {
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Vertex> ExclusiveNeighbors(const Graph& g, Vertex u, Vertex v) {
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Vertex> LevelAssignment::AtLevel(std::size_t d) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < level.size(); ++v) {
    if (level[v] == d) out.push_back(v);
  }
  return out;
}

std::size_t LevelAssignment::depth() const {
  std::size_t deepest = 0;
  for (std::size_t l : level) {
    if (l != kUnreachable) deepest = std::max(deepest, l);
  }
  return deepest;
}

LevelAssignment BfsLevels(const Graph& g, Vertex root) {
  if (root >= g.order()) throw std::out_of_range("root index out of range");
  LevelAssignment out;
  out.root = root;
  out.level.assign(g.order(), LevelAssignment::kUnreachable);
  out.level[root] = 0;
  std::deque<Vertex> frontier{root};
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (out.level[w] == LevelAssignment::kUnreachable) {
        out.level[w] = out.level[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return out;
}

ComponentPartition ConnectedComponents(const Graph& g) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  ComponentPartition out;
  out.membership.assign(g.order(), kUnassigned);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (out.membership[s] != kUnassigned) continue;
    const std::size_t id = out.count++;
    out.membership[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (out.membership[w] == kUnassigned) {
          out.membership[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool IsConnected(const Graph& g) { return ConnectedComponents(g).count == 1; }

std::optional<std::size_t> Diameter(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  std::size_t diameter = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto levels = BfsLevels(g, s);
    for (std::size_t l : levels.level) {
      if (l == LevelAssignment::kUnreachable) return std::nullopt;
      diameter = std::max(diameter, l);
    }
  }
  return diameter;
}

std::optional<std::size_t> Girth(const Graph& g) {
  // A non-tree edge (u, w) met during BFS from s closes a closed walk of
  // length level(u) + level(w) + 1 through s; the minimum over all roots is
  // the girth.
  std::optional<std::size_t> best;
  const std::size_t n = g.order();
  std::vector<std::size_t> level(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(level.begin(), level.end(), LevelAssignment::kUnreachable);
    level[s] = 0;
    parent[s] = s;
    std::deque<Vertex> frontier{s};
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop_front();
      if (best && 2 * level[u] >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (level[w] == LevelAssignment::kUnreachable) {
          level[w] = level[u] + 1;
          parent[w] = u;
          frontier.push_back(w);
        } else if (parent[u] != w) {
          const std::size_t cycle = level[u] + level[w] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

}  // namespace nmgraph
