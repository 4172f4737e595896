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

#include "nmgraph/invariants.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "nmgraph/matrix_io.h"
#include "nmgraph/oracles.h"
#include "nmgraph/row_profile.h"
#include "nmgraph/structure.h"

namespace nmgraph {

namespace {

enum Id : std::size_t {
  kProductIdentity,
  kTransposeIdentity,
  kRoundTrip,
  kRowSums,
  kColumnSums,
  kDeterminant,
  kSymmetry,
  kRowDecoding,
  kTwoLevel,
  kCommonNeighbors,
  kTriangles,
  kFourCycles,
  kTriangleFree,
  kInducedC4Rule,
  kGirth5,
  kDiameter2,
  kDiameter4,
  kStrongRegularity,
  kCount
};

constexpr const char* kNames[kCount] = {
    "nm = A(D-A)",
    "mn = nm^T",
    "reconstruct round trip",
    "row sums zero",
    "column sum formula",
    "det(nm) = 0",
    "symmetric <=> regular components",
    "row decoding balance",
    "two-level subgraph",
    "common neighbours = A^2",
    "triangles: nm = trace = census",
    "4-cycles: nm = census, split",
    "triangle-free <=> girth != 3",
    "eta >= -1 rule <=> no C4/K4-e",
    "girth>=5 <=> girth oracle",
    "diameter<=2 <=> no zero",
    "row without zero => diam<=4",
    "srg => 2 or 3 values",
};

bool EveryComponentRegular(const Graph& g) {
  const auto parts = ConnectedComponents(g);
  std::vector<std::optional<std::size_t>> degree(parts.count);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& d = degree[parts.membership[v]];
    if (!d) {
      d = g.degree(v);
    } else if (*d != g.degree(v)) {
      return false;
    }
  }
  return true;
}

}  // namespace

InvariantSuite::InvariantSuite() {
  for (std::size_t i = 0; i < kCount; ++i) {
    InvariantTally t;
    t.name = kNames[i];
    tallies_.push_back(std::move(t));
  }
}

bool InvariantSuite::all_passed() const {
  return std::all_of(tallies_.begin(), tallies_.end(),
                     [](const InvariantTally& t) { return t.passed(); });
}

void InvariantSuite::Check(const Graph& g) {
  Check(g, BuildNeighborhoodMatrix(g));
}

void InvariantSuite::Check(const Graph& g, const NeighborhoodMatrix& m) {
  ++graphs_;
  const std::size_t n = g.order();
  const bool small = n <= kCensusVertexLimit;

  // Each check returns an empty string on success, a reason on failure, or
  // nullopt when it does not apply to this graph.
  auto run = [&](Id id, const std::function<std::optional<std::string>()>& f) {
    InvariantTally& t = tallies_[id];
    std::optional<std::string> outcome;
    try {
      outcome = f();
    } catch (const std::exception& e) {
      outcome = std::string("threw: ") + e.what();
    }
    if (!outcome) {
      ++t.skipped;
      return;
    }
    ++t.checked;
    if (outcome->empty()) return;
    if (t.failed++ == 0) {
      std::ostringstream ce;
      ce << "# " << *outcome << "\n# graph (" << n << " vertices):\n";
      WriteEdgeList(g, ce);
      ce << "# matrix under test:\n";
      WriteDense(m, ce);
      t.counterexample = ce.str();
    }
  };
  auto expect = [](bool ok, const std::string& why) -> std::optional<std::string> {
    return ok ? std::string() : why;
  };

  const auto census = small ? std::optional(TakeSubgraphCensus(g)) : std::nullopt;
  const auto girth = Girth(g);

  run(kProductIdentity, [&] {
    return expect(m == BuildNeighborhoodMatrixByProduct(g),
                  "differs from A(D-A)");
  });
  run(kTransposeIdentity, [&] {
    return expect(BuildTransposeMatrix(g) == m.Transposed(),
                  "MN differs from NM^T");
  });
  run(kRoundTrip, [&] {
    return expect(ReconstructGraph(m).edges() == g.edges(),
                  "reconstructed edge set differs");
  });
  run(kRowSums, [&] {
    const auto sums = RowSums(m);
    return expect(std::all_of(sums.begin(), sums.end(),
                              [](Entry s) { return s == 0; }),
                  "non-zero row sum");
  });
  run(kColumnSums, [&] {
    ComputeColumnSums(m, g);
    return std::optional<std::string>("");
  });
  run(kDeterminant, [&]() -> std::optional<std::string> {
    if (n == 0 || n > kDeterminantLimit) return std::nullopt;
    return expect(Determinant(m) == 0, "non-zero determinant");
  });
  run(kSymmetry, [&] {
    return expect(IsSymmetric(m) == EveryComponentRegular(g),
                  "symmetry disagrees with component regularity");
  });
  run(kRowDecoding, [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < n; ++i) {
      const RowProfile p = ProfileRow(m, i);
      Entry down = 0;
      Entry up = 0;
      for (const auto& [j, c] : p.out_edge_count) down += c;
      for (const auto& [k, c] : p.level2) up += c;
      if (down != up) return "level balance fails in row " + std::to_string(i);
      if (std::find(p.diagonal_candidates.begin(), p.diagonal_candidates.end(),
                    i) == p.diagonal_candidates.end()) {
        return "diagonal is not a row minimum in row " + std::to_string(i);
      }
      if (p.degree != static_cast<Entry>(g.degree(i))) {
        return "decoded degree wrong in row " + std::to_string(i);
      }
    }
    return std::string();
  });
  run(kTwoLevel, [&]() -> std::optional<std::string> {
    for (Vertex r = 0; r < n; ++r) {
      if (!BuildTwoLevelSubgraph(g, r).MatchesRow(m.row(r))) {
        return "two-level subgraph disagrees with row " + std::to_string(r);
      }
    }
    return std::string();
  });
  run(kCommonNeighbors, [&]() -> std::optional<std::string> {
    const auto a2 = AllPairsCommonNeighbors(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Entry c = a2[i * n + j];
        Entry expected;
        if (i == j) {
          expected = -c;
        } else if (g.adjacent(i, j)) {
          expected = static_cast<Entry>(g.degree(j)) - c;
        } else {
          expected = -c;
        }
        if (m(i, j) != expected) return std::string("entry differs from A^2");
      }
    }
    return std::string();
  });
  run(kTriangles, [&]() -> std::optional<std::string> {
    const auto nm = CountTriangles(m);
    if (nm != TriangleCountByTrace(g)) return std::string("NM != trace/6");
    if (census && nm != census->triangle_count) {
      return std::string("NM != 3-subset count");
    }
    return std::string();
  });
  run(kFourCycles, [&]() -> std::optional<std::string> {
    if (!census) return std::nullopt;
    if (CountFourCycles(m).total != census->c4_total) {
      return std::string("NM 4-cycle count != census");
    }
    const auto split = CheckFourCycleDecomposition(m, g);
    return split.diff;
  });
  run(kTriangleFree, [&] {
    return expect(IsTriangleFree(m) == (girth != std::size_t{3}),
                  "triangle-free predicate disagrees with girth");
  });
  run(kInducedC4Rule, [&]() -> std::optional<std::string> {
    if (!census) return std::nullopt;
    const bool none =
        census->c4_induced == 0 && census->k4_minus_edge_count == 0;
    return expect(IsInducedC4Free(m) == none,
                  "eta >= -1 rule disagrees with C4/K4-e census");
  });
  run(kGirth5, [&] {
    const bool oracle = !girth || *girth >= 5;
    return expect(HasGirthAtLeast5(m) == oracle,
                  "girth>=5 predicate disagrees with girth oracle");
  });
  run(kDiameter2, [&]() -> std::optional<std::string> {
    if (!IsConnected(g)) return std::nullopt;
    const auto d = Diameter(g);
    return expect(HasDiameterAtMost2(m) == (d && *d <= 2),
                  "no-zero predicate disagrees with diameter");
  });
  run(kDiameter4, [&]() -> std::optional<std::string> {
    if (!SomeRowHasNoZero(m)) return std::nullopt;
    const auto d = Diameter(g);
    return expect(n == 1 || (d && *d <= 4),
                  "row without zeros but diameter > 4");
  });
  run(kStrongRegularity, [&]() -> std::optional<std::string> {
    const auto profile = ProfileStrongRegularity(m, g);
    if (!profile.srg_consistent) return std::nullopt;
    const auto k = profile.distinct_values.size();
    return expect(k == 2 || k == 3, "strongly regular with " +
                                        std::to_string(k) + " values");
  });
}

}  // namespace nmgraph
