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

#include <limits>
#include <sstream>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nmgraph/errors.h"
#include "nmgraph/generators.h"

namespace nmgraph {
namespace {

using ::nmgraph::testing::V;
using ::nmgraph::testing::Vs;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

constexpr char kSevenVertexEdges[] =
    "1 2\n1 6\n2 5\n3 4\n4 5\n5 6\n5 7\n6 7\n";

std::vector<Label> LabelsOf(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Label> out;
  for (Vertex v : vs) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ParseEdgeListTest, SevenVertexExample) {
  const Graph g = ParseEdgeList(kSevenVertexEdges);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 8u);
  // First-appearance order: 1 2 6 5 3 4 7.
  EXPECT_THAT(g.labels(), ElementsAre(1, 2, 6, 5, 3, 4, 7));
  const Vertex five = *g.index_of(5);
  EXPECT_THAT(LabelsOf(g, g.neighbors(five)), ElementsAre(2, 4, 6, 7));
}

TEST(ParseEdgeListTest, EmptyInput) {
  const Graph g = ParseEdgeList("");
  EXPECT_EQ(g.order(), 0u);
  EXPECT_EQ(g.size(), 0u);
}

TEST(ParseEdgeListTest, CommentsBlanksAndDuplicates) {
  const Graph g = ParseEdgeList("# header\n\n1 2\n  \n2 1\n1 2\n# tail\n");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.size(), 1u);
}

TEST(ParseEdgeListTest, SingleLabelDeclaresIsolatedVertex) {
  const Graph g = ParseEdgeList("1 2\n9\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.degree(*g.index_of(9)), 0u);
}

TEST(ParseEdgeListTest, SelfLoopRejectedWithLineNumber) {
  try {
    ParseEdgeList("1 2\n# c\n3 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_THAT(e.what(), ::testing::HasSubstr("self-loop"));
  }
}

TEST(ParseEdgeListTest, BadTokensRejectedWithLineNumber) {
  for (const char* text : {"1 x\n", "1 2.5\n", "-1 2\n", "1 2 3\n"}) {
    try {
      ParseEdgeList(std::string("4 5\n") + text);
      FAIL() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 2u) << text;
    }
  }
}

TEST(GraphTest, RejectsSelfLoopAndBadIndex) {
  const std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::FromEdges(2, loop), std::invalid_argument);
  const std::vector<Edge> out_of_range{{0, 5}};
  EXPECT_THROW(Graph::FromEdges(2, out_of_range), std::invalid_argument);
  EXPECT_THROW(Graph::Empty(2).neighbors(2), std::out_of_range);
}

TEST(GraphTest, SortedByLabelKeepsStructure) {
  const Graph g = ParseEdgeList(kSevenVertexEdges).SortedByLabel();
  EXPECT_THAT(g.labels(), ElementsAre(1, 2, 3, 4, 5, 6, 7));
  EXPECT_EQ(g, ExampleSevenVertexGraph());
}

TEST(GraphTest, WriteEdgeListSortsAndListsIsolated) {
  const Graph g = ParseEdgeList("7 3\n9\n2 1\n");
  std::ostringstream out;
  WriteEdgeList(g, out);
  EXPECT_EQ(out.str(), "1 2\n3 7\n9\n");
}

TEST(NeighborSetsTest, CommonNeighbors) {
  const Graph g = ExampleSevenVertexGraph();
  EXPECT_EQ(CommonNeighbors(g, V(1), V(5)), Vs({2, 6}));
  EXPECT_EQ(CommonNeighbors(g, V(5), V(5)), Vs({2, 4, 6, 7}));
  EXPECT_THAT(CommonNeighbors(g, V(3), V(6)), IsEmpty());
  EXPECT_THROW(CommonNeighbors(g, V(1), 7), std::out_of_range);
}

TEST(NeighborSetsTest, ExclusiveNeighbors) {
  const Graph g = ExampleSevenVertexGraph();
  EXPECT_EQ(ExclusiveNeighbors(g, V(6), V(1)), Vs({1, 5, 7}));
  EXPECT_THAT(ExclusiveNeighbors(g, V(4), V(4)), IsEmpty());
  EXPECT_EQ(ExclusiveNeighbors(g, V(2), V(5)), Vs({1, 5}));
  EXPECT_THROW(ExclusiveNeighbors(g, 9, V(1)), std::out_of_range);
}

TEST(BfsLevelsTest, SevenVertexRootedAtFive) {
  const auto levels = BfsLevels(ExampleSevenVertexGraph(), V(5));
  EXPECT_EQ(levels.AtLevel(0), Vs({5}));
  EXPECT_EQ(levels.AtLevel(1), Vs({2, 4, 6, 7}));
  EXPECT_EQ(levels.AtLevel(2), Vs({1, 3}));
}

TEST(BfsLevelsTest, SingleVertex) {
  const auto levels = BfsLevels(Graph::Empty(1), 0);
  EXPECT_THAT(levels.level, ElementsAre(0u));
}

TEST(BfsLevelsTest, CubeHasOneAntipode) {
  const Graph q3 = Hypercube(3);
  for (Vertex r = 0; r < q3.order(); ++r) {
    const auto levels = BfsLevels(q3, r);
    EXPECT_EQ(levels.depth(), 3u);
    EXPECT_EQ(levels.AtLevel(3).size(), 1u);
  }
}

TEST(BfsLevelsTest, UnreachableMarked) {
  const auto levels = BfsLevels(Graph::Empty(2), 0);
  EXPECT_FALSE(levels.reachable(1));
  EXPECT_THROW(BfsLevels(Graph::Empty(2), 2), std::out_of_range);
}

TEST(ComponentsTest, Examples) {
  const auto two = ConnectedComponents(ExampleTwoSquaresGraph());
  EXPECT_EQ(two.count, 2u);
  for (int l : {2, 5, 6}) {
    EXPECT_EQ(two.membership[V(l)], two.membership[V(1)]);
  }
  for (int l : {4, 7, 8}) {
    EXPECT_EQ(two.membership[V(l)], two.membership[V(3)]);
  }
  EXPECT_NE(two.membership[V(1)], two.membership[V(3)]);

  EXPECT_EQ(ConnectedComponents(ExampleSevenVertexGraph()).count, 1u);
  EXPECT_EQ(ConnectedComponents(Graph::Empty(3)).count, 3u);
}

TEST(DiameterTest, Examples) {
  EXPECT_EQ(Diameter(Hypercube(3)), 3u);
  EXPECT_EQ(Diameter(CompleteGraph(4)), 1u);
  // d(3, 1) = 4 along 3-4-5-2-1.
  EXPECT_EQ(Diameter(ExampleSevenVertexGraph()), 4u);
  EXPECT_EQ(Diameter(ExampleTwoSquaresGraph()), std::nullopt);
  EXPECT_EQ(Diameter(Graph::Empty(1)), std::nullopt);
  EXPECT_EQ(Diameter(Graph::Empty(0)), std::nullopt);
}

TEST(GirthTest, Examples) {
  EXPECT_EQ(Girth(ExampleSevenVertexGraph()), 3u);
  EXPECT_EQ(Girth(ExampleTwoSquaresGraph()), 4u);
  EXPECT_EQ(Girth(PathGraph(6)), std::nullopt);
  EXPECT_EQ(Girth(PetersenGraph()), 5u);
  EXPECT_EQ(Girth(CycleGraph(7)), 7u);
  EXPECT_EQ(Girth(Hypercube(3)), 4u);
}

// Floyd-Warshall distances, independent of the BFS implementation.
std::vector<std::vector<std::size_t>> AllPairsDistances(const Graph& g) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x == kInf) x = LevelAssignment::kUnreachable;
  return d;
}

TEST(GraphPropertyTest, RandomGraphsAgreeWithDistanceOracle) {
  for (const Graph& g : RandomCorpus(120, 64, 2026)) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
    ASSERT_EQ(degree_sum, 2 * g.size());

    const auto dist = AllPairsDistances(g);
    for (Vertex r = 0; r < g.order(); ++r) {
      ASSERT_EQ(BfsLevels(g, r).level, dist[r]);
    }

    // Count roots needed to exhaust V by repeated BFS.
    std::vector<bool> seen(g.order(), false);
    std::size_t roots = 0;
    for (Vertex r = 0; r < g.order(); ++r) {
      if (seen[r]) continue;
      ++roots;
      const auto levels = BfsLevels(g, r);
      for (Vertex v = 0; v < g.order(); ++v) {
        if (levels.reachable(v)) seen[v] = true;
      }
    }
    const auto parts = ConnectedComponents(g);
    ASSERT_EQ(parts.count, roots);
    for (const auto& [u, v] : g.edges()) {
      ASSERT_EQ(parts.membership[u], parts.membership[v]);
    }
  }
}

}  // namespace
}  // namespace nmgraph
