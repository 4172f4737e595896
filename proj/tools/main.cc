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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using namespace nmgraph::tools;

  CLI::App app{"Neighbourhood-matrix toolkit for undirected simple graphs"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* compute_cmd =
      app.add_subcommand("compute", "Write NM(G) for an edge-list file");
  compute_cmd->add_option("input", compute.input, "Edge-list file")
      ->required();
  compute_cmd->add_option("-o,--output", compute.output,
                          "Output file ('-' for stdout)");
  const std::map<std::string, nmgraph::MatrixFormat> formats{
      {"dense", nmgraph::MatrixFormat::kDense},
      {"mm", nmgraph::MatrixFormat::kMatrixMarket}};
  compute_cmd->add_option("--format", compute.format, "dense (default) or mm")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  ReconstructOptions reconstruct;
  auto* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Recover the edge list from an NM file (dense or mm)");
  reconstruct_cmd->add_option("input", reconstruct.input, "NM file")
      ->required();
  reconstruct_cmd->add_option("-o,--output", reconstruct.output,
                              "Output edge-list file ('-' for stdout)");

  std::string analyze_input;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Print the structural report of an edge list as JSON");
  analyze_cmd->add_option("input", analyze_input, "Edge-list file")
      ->required();

  VerifyOptions verify;
  std::string verify_input;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check every NM invariant against brute-force oracles");
  verify_cmd->add_option("input", verify_input,
                         "Edge-list file (random graphs when omitted)");
  verify_cmd->add_option("--trials", verify.trials, "Random graphs to check")
      ->capture_default_str();
  verify_cmd->add_option("--size", verify.size, "Maximum vertex count")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Generator seed")
      ->capture_default_str();
  verify_cmd->add_option("--exhaustive", verify.exhaustive,
                         "Also check all graphs up to this many vertices")
      ->check(CLI::Range(0, 7));
  verify_cmd->add_flag("--self-test", verify.self_test,
                       "Inject a corrupted matrix; the run must fail");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time NM triangle counting against trace(A^3)/6");
  bench_cmd->add_option("--size", bench.size, "Vertex count")
      ->capture_default_str();
  bench_cmd->add_option("--density", bench.average_degree, "Average degree")
      ->capture_default_str();
  bench_cmd->add_option("--repetitions", bench.repetitions,
                        "Timed repetitions (median reported)")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Generator seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  if (*compute_cmd) return RunCompute(compute, std::cout, std::cerr);
  if (*reconstruct_cmd) return RunReconstruct(reconstruct, std::cout, std::cerr);
  if (*analyze_cmd) return RunAnalyze(analyze_input, std::cout, std::cerr);
  if (*verify_cmd) {
    if (!verify_input.empty()) verify.input = verify_input;
    return RunVerify(verify, std::cout, std::cerr);
  }
  if (*bench_cmd) return RunBench(bench, std::cout, std::cerr);
  return kExitParseError;
}
