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

#include "nmgraph/structure.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nmgraph/errors.h"
#include "nmgraph/oracles.h"

namespace nmgraph {

namespace {

std::int64_t Choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace

std::uint64_t CountTriangles(const NeighborhoodMatrix& m) {
  const std::size_t n = m.dimension();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      // |eta_jj| - eta_ij = |N(i) & N(j)| on an edge.
      if (r[j] > 0) sum += m.degree(j) - r[j];
    }
  }
  if (sum < 0 || sum % 6 != 0) {
    throw InvalidMatrixError("triangle sum " + std::to_string(sum) +
                             " is not a non-negative multiple of 6");
  }
  return static_cast<std::uint64_t>(sum / 6);
}

FourCycleCounts CountFourCycles(const NeighborhoodMatrix& m) {
  const std::size_t n = m.dimension();
  std::int64_t non_adjacent = 0;
  std::int64_t adjacent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (r[j] > 0) {
        adjacent += Choose2(m.degree(j) - r[j]);
      } else {
        non_adjacent += Choose2(-r[j]);
      }
    }
  }
  FourCycleCounts out;
  out.non_adjacent_term = {non_adjacent};
  out.adjacent_term = {adjacent};
  const Quarters total = out.non_adjacent_term + out.adjacent_term;
  if (!total.is_integer()) {
    throw InvalidMatrixError("4-cycle sum " + total.ToString() +
                             " is not an integer");
  }
  out.total = static_cast<std::uint64_t>(total.numerator / 4);
  return out;
}

DecompositionCheck CheckFourCycleDecomposition(const NeighborhoodMatrix& m,
                                               const Graph& g) {
  const FourCycleCounts counts = CountFourCycles(m);
  const SubgraphCensus census = TakeSubgraphCensus(g);
  // In quarters: x + y/2 = (4x + 2y)/4.
  const auto k4e = static_cast<std::int64_t>(census.k4_minus_edge_count);
  const Quarters expected_s1{4 * static_cast<std::int64_t>(census.c4_induced) +
                             2 * k4e};
  const Quarters expected_s2{12 * static_cast<std::int64_t>(census.k4_count) +
                             2 * k4e};
  DecompositionCheck out;
  out.holds = counts.non_adjacent_term == expected_s1 &&
              counts.adjacent_term == expected_s2;
  if (!out.holds) {
    std::ostringstream diff;
    diff << "s1 " << counts.non_adjacent_term.ToString() << " vs "
         << expected_s1.ToString() << " (inducedC4=" << census.c4_induced
         << ", K4-e=" << census.k4_minus_edge_count << "); s2 "
         << counts.adjacent_term.ToString() << " vs " << expected_s2.ToString()
         << " (K4=" << census.k4_count << ")";
    out.diff = diff.str();
  }
  return out;
}

bool IsTriangleFree(const NeighborhoodMatrix& m) {
  const std::size_t n = m.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) > 0 && m(i, j) != m.degree(j)) return false;
    }
  }
  return true;
}

bool IsInducedC4Free(const NeighborhoodMatrix& m) {
  const std::size_t n = m.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j) < -1) return false;
    }
  }
  return true;
}

bool HasGirthAtLeast5(const NeighborhoodMatrix& m) {
  return IsTriangleFree(m) && IsInducedC4Free(m);
}

bool HasDiameterAtMost2(const NeighborhoodMatrix& m) {
  const auto& e = m.entries();
  return std::none_of(e.begin(), e.end(), [](Entry x) { return x == 0; });
}

bool SomeRowHasNoZero(const NeighborhoodMatrix& m) {
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    const auto r = m.row(i);
    if (std::none_of(r.begin(), r.end(), [](Entry x) { return x == 0; })) {
      return true;
    }
  }
  return false;
}

namespace {

std::optional<SrgParameters> DetectStrongRegularity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.degree(0) == 0) return std::nullopt;
  SrgParameters p;
  p.k = static_cast<std::int64_t>(g.degree(0));
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<std::int64_t>(g.degree(v)) != p.k) return std::nullopt;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto common =
          static_cast<std::int64_t>(CommonNeighbors(g, u, v).size());
      auto& slot = g.adjacent(u, v) ? p.mu1 : p.mu2;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return p;
}

}  // namespace

StrongRegularityProfile ProfileStrongRegularity(const NeighborhoodMatrix& m,
                                                const Graph& g) {
  if (g.order() != m.dimension()) {
    throw std::invalid_argument("graph and matrix dimensions differ");
  }
  StrongRegularityProfile out;
  {
    std::set<Entry> values(m.entries().begin(), m.entries().end());
    out.distinct_values.assign(values.begin(), values.end());
  }
  out.parameters = DetectStrongRegularity(g);
  out.srg_consistent = out.parameters.has_value();
  if (out.parameters) {
    const SrgParameters& p = *out.parameters;
    std::set<Entry> expected{-p.k};
    if (p.mu1) expected.insert(p.k - *p.mu1);
    if (p.mu2) expected.insert(-*p.mu2);
    if (!std::equal(expected.begin(), expected.end(),
                    out.distinct_values.begin(), out.distinct_values.end())) {
      throw ConsistencyError(
          "strongly regular graph whose NM entries are not {-k, k-mu1, -mu2}");
    }
  }
  return out;
}

StructuralReport Analyze(const NeighborhoodMatrix& m, const Graph& g) {
  StructuralReport r;
  r.triangle_count = CountTriangles(m);
  const FourCycleCounts c4 = CountFourCycles(m);
  r.four_cycle_count = c4.total;
  r.s1_term = c4.non_adjacent_term;
  r.s2_term = c4.adjacent_term;
  r.triangle_free = IsTriangleFree(m);
  r.induced_c4_free = IsInducedC4Free(m);
  r.girth_at_least_5 = HasGirthAtLeast5(m);
  r.diameter_at_most_2 = HasDiameterAtMost2(m);
  r.diameter_upper_bound_4 = SomeRowHasNoZero(m);
  r.strong_regularity = ProfileStrongRegularity(m, g);
  return r;
}

}  // namespace nmgraph
