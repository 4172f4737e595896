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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "nmgraph/errors.h"
#include "nmgraph/generators.h"
#include "nmgraph/graph.h"
#include "nmgraph/invariants.h"
#include "nmgraph/neighborhood_matrix.h"
#include "nmgraph/oracles.h"
#include "nmgraph/structure.h"

namespace nmgraph::tools {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

struct IoError {
  std::string what;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open '" + path + "' for reading"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError{"error reading '" + path + "'"};
  return buffer.str();
}

// Writes `text` to `path`, or to `out` when path is "-".
void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError{"cannot open '" + path + "' for writing"};
  file << text;
  if (!file) throw IoError{"error writing '" + path + "'"};
}

// Parses the edge list and orders vertices by label.
Graph LoadGraph(const std::string& path) {
  return ParseEdgeList(std::string_view(ReadFile(path))).SortedByLabel();
}

double MicrosSince(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start)
      .count();
}

double Median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2;
}

// Maps the library's exceptions onto exit codes.
template <typename Body>
int Guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what << '\n';
    return kExitIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvalidMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidMatrix;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
}

json ReportJson(const StructuralReport& r) {
  json srg = nullptr;
  if (const auto& p = r.strong_regularity.parameters) {
    srg = {{"k", p->k},
           {"mu1", p->mu1 ? json(*p->mu1) : json(nullptr)},
           {"mu2", p->mu2 ? json(*p->mu2) : json(nullptr)}};
  }
  return {
      {"diameterAtMost2", r.diameter_at_most_2},
      {"diameterUpperBound4", r.diameter_upper_bound_4},
      {"distinctEntryValues", r.strong_regularity.distinct_values},
      {"fourCycleCount", r.four_cycle_count},
      {"girthAtLeast5", r.girth_at_least_5},
      {"inducedC4Free", r.induced_c4_free},
      {"s1Term", r.s1_term.ToString()},
      {"s2Term", r.s2_term.ToString()},
      {"srgConsistent", r.strong_regularity.srg_consistent},
      {"srgParameters", srg},
      {"triangleCount", r.triangle_count},
      {"triangleFree", r.triangle_free},
  };
}

}  // namespace

int RunCompute(const ComputeOptions& options, std::ostream& out,
               std::ostream& err) {
  return Guarded(err, [&] {
    const Graph g = LoadGraph(options.input);
    std::ostringstream text;
    WriteMatrix(BuildNeighborhoodMatrix(g), options.format, text);
    WriteOutput(options.output, text.str(), out);
    return kExitOk;
  });
}

int RunReconstruct(const ReconstructOptions& options, std::ostream& out,
                   std::ostream& err) {
  return Guarded(err, [&] {
    const NeighborhoodMatrix m =
        ReadMatrix(std::string_view(ReadFile(options.input)));
    const Graph g = ReconstructGraph(m);
    std::ostringstream text;
    WriteEdgeList(g, text);
    WriteOutput(options.output, text.str(), out);
    return kExitOk;
  });
}

int RunAnalyze(const std::string& input, std::ostream& out,
               std::ostream& err) {
  return Guarded(err, [&] {
    auto start = Clock::now();
    const Graph g = LoadGraph(input);
    const double parse_us = MicrosSince(start);

    start = Clock::now();
    const NeighborhoodMatrix m = BuildNeighborhoodMatrix(g);
    const double build_us = MicrosSince(start);

    start = Clock::now();
    const StructuralReport report = Analyze(m, g);
    const double analyze_us = MicrosSince(start);

    const json doc = {
        {"input",
         {{"components", ConnectedComponents(g).count},
          {"m", g.size()},
          {"n", g.order()}}},
        {"report", ReportJson(report)},
        {"timingsMicros",
         {{"analyze", std::llround(analyze_us)},
          {"buildNm", std::llround(build_us)},
          {"parse", std::llround(parse_us)}}},
        {"toolVersion", kToolVersion},
    };
    out << doc.dump(2) << '\n';
    return kExitOk;
  });
}

int RunVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err) {
  return Guarded(err, [&] {
    InvariantSuite suite;
    std::optional<Graph> given;
    if (options.input) given = LoadGraph(*options.input);

    if (options.self_test) {
      Graph g = given && given->size() > 0 ? *given : ExampleSevenVertexGraph();
      NeighborhoodMatrix corrupted = BuildNeighborhoodMatrix(g);
      // Bump the first off-diagonal entry of row 0; every row-sum and
      // product identity must now fail.
      corrupted(0, 1) += 1;
      suite.Check(g, corrupted);
    } else {
      if (given) {
        suite.Check(*given);
      } else {
        for (const Graph& g :
             RandomCorpus(options.trials, options.size, options.seed)) {
          suite.Check(g);
        }
      }
      if (options.exhaustive > 0) {
        for (std::size_t n = 0; n <= options.exhaustive; ++n) {
          for (const Graph& g : AllGraphs(n)) suite.Check(g);
        }
      }
    }

    out << "graphs checked: " << suite.graphs_checked() << '\n';
    for (const auto& t : suite.tallies()) {
      out << (t.passed() ? "PASS" : "FAIL") << "  " << std::left
          << std::setw(36) << t.name << " checked=" << t.checked
          << " failed=" << t.failed << " skipped=" << t.skipped << '\n';
    }
    for (const auto& t : suite.tallies()) {
      if (!t.passed()) {
        out << "\ncounterexample for '" << t.name << "':\n"
            << t.counterexample;
      }
    }
    return suite.all_passed() ? kExitOk : kExitInvariantFailure;
  });
}

TriangleBenchResult MeasureTriangleCounting(const BenchOptions& options) {
  TriangleBenchResult r;
  r.n = options.size;
  r.repetitions = std::max<std::size_t>(1, options.repetitions);
  if (options.size == 0) return r;

  GraphRng rng(options.seed);
  const double p =
      options.size > 1 ? options.average_degree / (options.size - 1) : 0.0;
  const Graph g = RandomGraph(options.size, p, rng);
  r.m = g.size();

  std::vector<double> nm_us;
  std::vector<double> trace_us;
  for (std::size_t rep = 0; rep < r.repetitions; ++rep) {
    auto start = Clock::now();
    r.nm_triangles = CountTriangles(BuildNeighborhoodMatrix(g));
    nm_us.push_back(MicrosSince(start));

    start = Clock::now();
    r.trace_triangles = TriangleCountByTrace(g);
    trace_us.push_back(MicrosSince(start));
  }
  r.nm_median_micros = Median(nm_us);
  r.trace_median_micros = Median(trace_us);
  return r;
}

int RunBench(const BenchOptions& options, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    json rows = json::array();
    bool equal = true;
    if (options.size > 0) {
      const TriangleBenchResult r = MeasureTriangleCounting(options);
      equal = r.nm_triangles == r.trace_triangles;
      rows.push_back({
          {"averageDegree", options.average_degree},
          {"countsEqual", equal},
          {"edges", r.m},
          {"n", r.n},
          {"nmMedianMicros", r.nm_median_micros},
          {"nmNotSlower", r.nm_median_micros <= r.trace_median_micros},
          {"nmTriangles", r.nm_triangles},
          {"repetitions", r.repetitions},
          {"seed", options.seed},
          {"traceMedianMicros", r.trace_median_micros},
          {"traceTriangles", r.trace_triangles},
      });
    }
    out << json{{"rows", rows}, {"toolVersion", kToolVersion}}.dump(2) << '\n';
    if (!equal) {
      err << "triangle counts differ between the NM and trace paths\n";
      return kExitInvariantFailure;
    }
    return kExitOk;
  });
}

}  // namespace nmgraph::tools
