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

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nmgraph/errors.h"
#include "nmgraph/generators.h"

namespace nmgraph {
namespace {

using ::nmgraph::testing::SevenVertexNm;
using ::nmgraph::testing::TwoSquaresNm;
using ::nmgraph::testing::V;
using ::testing::Each;
using ::testing::ElementsAre;

TEST(BuildNeighborhoodMatrixTest, SevenVertexGolden) {
  const NeighborhoodMatrix m = BuildNeighborhoodMatrix(ExampleSevenVertexGraph());
  EXPECT_EQ(m, SevenVertexNm());
  EXPECT_THAT(testing::ToVector(m.row(V(5))), ElementsAre(-2, 2, -1, 2, -4, 2, 1));
}

TEST(BuildNeighborhoodMatrixTest, EdgelessIsZero) {
  const NeighborhoodMatrix m = BuildNeighborhoodMatrix(Graph::Empty(4));
  EXPECT_THAT(m.entries(), Each(0));
  EXPECT_EQ(m.dimension(), 4u);
}

TEST(BuildNeighborhoodMatrixTest, SingleEdge) {
  const NeighborhoodMatrix m = BuildNeighborhoodMatrix(CompleteGraph(2));
  EXPECT_THAT(m.entries(), ElementsAre(-1, 1, 1, -1));
}

TEST(BuildNeighborhoodMatrixTest, ThreadCountDoesNotChangeResult) {
  GraphRng rng(11);
  const Graph g = RandomGraph(200, 0.05, rng);
  const NeighborhoodMatrix serial = BuildNeighborhoodMatrix(g, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    EXPECT_EQ(BuildNeighborhoodMatrix(g, t), serial) << t << " threads";
  }
}

TEST(BuildByProductTest, MatchesSetConstruction) {
  EXPECT_EQ(BuildNeighborhoodMatrixByProduct(ExampleSevenVertexGraph()),
            SevenVertexNm());
  EXPECT_THAT(BuildNeighborhoodMatrixByProduct(Graph::Empty(3)).entries(),
              Each(0));
  for (const Graph& g : RandomCorpus(50, 32, 1)) {
    ASSERT_EQ(BuildNeighborhoodMatrixByProduct(g), BuildNeighborhoodMatrix(g));
  }
}

TEST(BuildTransposeMatrixTest, IsTransposeOfNm) {
  EXPECT_EQ(BuildTransposeMatrix(ExampleSevenVertexGraph()),
            SevenVertexNm().Transposed());
  EXPECT_THAT(BuildTransposeMatrix(Graph::Empty(3)).entries(), Each(0));
  const Graph c5 = CycleGraph(5);
  EXPECT_EQ(BuildTransposeMatrix(c5), BuildNeighborhoodMatrix(c5));
}

TEST(ReconstructGraphTest, SevenVertexAdjacency) {
  const Graph g = ReconstructGraph(SevenVertexNm());
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      EXPECT_EQ(g.adjacent(i, j),
                testing::kSevenVertexAdjacency[i * 7 + j] == 1)
          << i << "," << j;
    }
  }
}

TEST(ReconstructGraphTest, ZeroMatrixGivesEdgeless) {
  const Graph g = ReconstructGraph(NeighborhoodMatrix(5));
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 0u);
}

TEST(ReconstructGraphTest, RoundTripOnRandomGraphs) {
  for (const Graph& g : RandomCorpus(50, 32, 3)) {
    ASSERT_EQ(ReconstructGraph(BuildNeighborhoodMatrix(g)), g);
  }
}

TEST(ReconstructGraphTest, RejectsAsymmetricPattern) {
  NeighborhoodMatrix m = SevenVertexNm();
  m(V(3), V(6)) = 1;  // 3 -> 6 positive, 6 -> 3 still 0
  EXPECT_THROW(ReconstructGraph(m), InvalidMatrixError);
}

TEST(ReconstructGraphTest, RejectsEntryInconsistentWithGraph) {
  NeighborhoodMatrix m = SevenVertexNm();
  m(V(1), V(6)) = 4;  // sign pattern intact, value wrong
  EXPECT_THROW(ReconstructGraph(m), InvalidMatrixError);
}

TEST(RowSumsTest, Zero) {
  EXPECT_THAT(RowSums(SevenVertexNm()), Each(0));
  EXPECT_THAT(RowSums(NeighborhoodMatrix(3)), Each(0));
  for (const Graph& g : RandomCorpus(30, 32, 5)) {
    ASSERT_THAT(RowSums(BuildNeighborhoodMatrix(g)), Each(0));
  }
}

TEST(ColumnSumsTest, SevenVertex) {
  const auto sums = ComputeColumnSums(SevenVertexNm(), ExampleSevenVertexGraph());
  // Column 5: (4-2) + (4-2) + (4-3) + (4-2).
  EXPECT_EQ(sums.summed[V(5)], 7);
  EXPECT_EQ(sums.formula, sums.summed);
  EXPECT_THAT(sums.summed, ElementsAre(-1, -2, -1, -1, 7, 1, -3));
}

TEST(ColumnSumsTest, RegularAndEdgeless) {
  const Graph c5 = CycleGraph(5);
  EXPECT_THAT(ComputeColumnSums(BuildNeighborhoodMatrix(c5), c5).summed,
              Each(0));
  const Graph e = Graph::Empty(4);
  EXPECT_THAT(ComputeColumnSums(BuildNeighborhoodMatrix(e), e).summed, Each(0));
}

TEST(ColumnSumsTest, MismatchThrows) {
  NeighborhoodMatrix m = SevenVertexNm();
  m(V(2), V(5)) += 1;
  EXPECT_THROW(ComputeColumnSums(m, ExampleSevenVertexGraph()),
               ConsistencyError);
}

TEST(IsSymmetricTest, Examples) {
  EXPECT_TRUE(IsSymmetric(TwoSquaresNm()));
  EXPECT_FALSE(IsSymmetric(SevenVertexNm()));
  EXPECT_TRUE(IsSymmetric(NeighborhoodMatrix(1)));
  EXPECT_TRUE(IsSymmetric(BuildNeighborhoodMatrix(PetersenGraph())));
}

// Permutation-expansion determinant, for cross-checking Bareiss.
std::int64_t LeibnizDeterminant(std::size_t n, const std::vector<Entry>& a) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i * n + perm[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(DeterminantTest, KnownValues) {
  EXPECT_EQ(Determinant(SevenVertexNm()), 0);
  EXPECT_EQ(Determinant(NeighborhoodMatrix(4)), 0);
  EXPECT_EQ(Determinant(2, std::vector<Entry>{2, 1, 1, 3}), 5);
  // Needs a row swap at the first pivot.
  EXPECT_EQ(Determinant(3, std::vector<Entry>{0, 2, 1, 1, 0, 0, 0, 1, 3}), -5);
  EXPECT_EQ(Determinant(0, std::vector<Entry>{}), 1);
}

TEST(DeterminantTest, AgreesWithLeibnizOnRandomMatrices) {
  GraphRng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.Below(6);
    std::vector<Entry> a(n * n);
    for (auto& x : a) x = static_cast<Entry>(rng.Below(9)) - 4;
    ASSERT_EQ(Determinant(n, a), LeibnizDeterminant(n, a));
  }
}

TEST(DeterminantTest, NmIsSingular) {
  for (const Graph& g : RandomCorpus(20, 12, 17)) {
    ASSERT_EQ(Determinant(BuildNeighborhoodMatrix(g)), 0);
  }
  // Large enough that int64 intermediates would overflow.
  GraphRng rng(4);
  EXPECT_EQ(Determinant(BuildNeighborhoodMatrix(RandomGraph(40, 0.5, rng))), 0);
}

TEST(NonZerosTest, RowMajorOrder) {
  const auto nz = NonZeros(BuildNeighborhoodMatrix(PathGraph(2)));
  ASSERT_EQ(nz.size(), 4u);
  EXPECT_EQ(nz[1].row, 0u);
  EXPECT_EQ(nz[1].col, 1u);
  EXPECT_EQ(nz[1].value, 1);
}

TEST(NeighborhoodMatrixTest, ConstructorValidatesShape) {
  EXPECT_THROW(NeighborhoodMatrix(2, std::vector<Entry>{1, 2, 3}, {}),
               std::invalid_argument);
  EXPECT_THROW(NeighborhoodMatrix(2, std::vector<Label>{1}),
               std::invalid_argument);
  EXPECT_THROW(NeighborhoodMatrix(2).at(2, 0), std::out_of_range);
}

}  // namespace
}  // namespace nmgraph
