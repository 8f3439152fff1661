// Copyright 2026 The mlcluster Authors.
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

// Command-line front end: cluster, score, oracle and lattice-check.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mlcluster/cli.h"

namespace {

void AddInputFlags(CLI::App* cmd, mlcluster::RunConfig& config,
                   std::string& kind, std::string& normalize) {
  cmd->add_option("--input", config.input, "CSV input file, '-' for stdin");
  cmd->add_option("--kind", kind, "similarity, distance or score")
      ->check(CLI::IsMember({"similarity", "distance", "score"}));
  cmd->add_option("--normalize", normalize, "distance normalization")
      ->check(CLI::IsMember({"max", "none"}));
  cmd->add_option("--tol", config.tolerance, "numerical tolerance");
  cmd->add_option("--seed", config.seed, "random seed");
  cmd->add_option("--output", config.output, "output file, '-' for stdout");
  cmd->add_option("--max-n", config.max_n, "refuse inputs with more points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster a data set from pairwise similarities."};
  app.require_subcommand(1);

  mlcluster::RunConfig config;
  std::string kind = "similarity";
  std::string normalize = "max";
  std::string init = "uniform";
  std::string structure;
  int samples = 1000;
  int random_n = 0;
  int lattice_n = 4;
  int random_functions = 50;

  CLI::App* cluster = app.add_subcommand("cluster", "run LocalSearch");
  AddInputFlags(cluster, config, kind, normalize);
  cluster->add_option("--init", init,
                      "uniform, score, restricted or restricted:<path>");
  cluster->add_option("--restrict", config.restrict_path,
                      "JSON list of maximal subsets for --init restricted");
  cluster->add_flag("--trace", config.trace, "record candidate scores");
  cluster->add_option("--trace-jsonl", config.trace_jsonl,
                      "also write the trace as JSON lines");
  cluster->add_option("--options", config.options_path,
                      "JSON solver options");

  CLI::App* score = app.add_subcommand("score", "evaluate a partition or cover");
  AddInputFlags(score, config, kind, normalize);
  score->add_option("--structure", structure, "partition or cover JSON")
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force verification");
  AddInputFlags(oracle, config, kind, normalize);
  oracle->add_option("--samples", samples, "random covers to sample");
  oracle->add_option("--random", random_n,
                     "use a random quadratic instance with this many points");

  CLI::App* lattice =
      app.add_subcommand("lattice-check", "partition lattice invariants");
  lattice->add_option("--n", lattice_n, "number of points")->required();
  lattice->add_option("--seed", config.seed, "random seed");
  lattice->add_option("--tol", config.tolerance, "numerical tolerance");
  lattice->add_option("--functions", random_functions,
                      "random set functions per check");
  lattice->add_option("--output", config.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (!lattice->parsed()) {
    if (config.input.empty() && !(oracle->parsed() && random_n > 0)) {
      std::cerr << "error: --input is required\n";
      return 1;
    }
    try {
      config.kind = mlcluster::ParseInputKind(kind);
      config.normalize = mlcluster::ParseNormalize(normalize);
      mlcluster::ParseInit(init, config);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  if (cluster->parsed()) return mlcluster::CmdCluster(config, std::cerr);
  if (score->parsed()) {
    return mlcluster::CmdScore(config, structure, std::cerr);
  }
  if (oracle->parsed()) {
    return mlcluster::CmdOracle(
        config, samples,
        random_n > 0 ? std::optional<int>(random_n) : std::nullopt, std::cerr);
  }
  return mlcluster::CmdLatticeCheck(lattice_n, config, random_functions,
                                    std::cerr);
}
