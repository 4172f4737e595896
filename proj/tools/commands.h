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

// Subcommands of the nmgraph tool. Each returns the process exit status and
// writes only to the streams it is given (and to the output path, if any).

#ifndef NMGRAPH_TOOLS_COMMANDS_H_
#define NMGRAPH_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "nmgraph/matrix_io.h"

namespace nmgraph::tools {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitInvariantFailure = 1,
  kExitParseError = 2,
  kExitIoError = 3,
  kExitInvalidMatrix = 4,
};

struct ComputeOptions {
  std::string input;
  std::string output = "-";  // "-" is standard output
  MatrixFormat format = MatrixFormat::kDense;
};
int RunCompute(const ComputeOptions& options, std::ostream& out,
               std::ostream& err);

struct ReconstructOptions {
  std::string input;
  std::string output = "-";
};
int RunReconstruct(const ReconstructOptions& options, std::ostream& out,
                   std::ostream& err);

int RunAnalyze(const std::string& input, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::optional<std::string> input;
  std::size_t trials = 200;
  std::size_t size = 32;
  std::uint64_t seed = 7;
  // Also check every labelled graph with up to this many vertices.
  std::size_t exhaustive = 0;
  // Feed a deliberately corrupted matrix; the run must then fail.
  bool self_test = false;
};
int RunVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err);

struct BenchOptions {
  std::size_t size = 1024;
  double average_degree = 8.0;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
};

struct TriangleBenchResult {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t repetitions = 0;
  std::uint64_t nm_triangles = 0;
  std::uint64_t trace_triangles = 0;
  double nm_median_micros = 0;
  double trace_median_micros = 0;
};

// Times NM construction plus the triangle formula against trace(A^3)/6 on
// G(n, average_degree / (n - 1)).
TriangleBenchResult MeasureTriangleCounting(const BenchOptions& options);

int RunBench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace nmgraph::tools

#endif  // NMGRAPH_TOOLS_COMMANDS_H_
