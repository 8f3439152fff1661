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

#ifndef MLCLUSTER_CLI_H_
#define MLCLUSTER_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mlcluster/io.h"
#include "mlcluster/score.h"
#include "mlcluster/similarity.h"
#include "mlcluster/types.h"

namespace mlcluster {

enum class InputKind { kSimilarity, kDistance, kScore };

struct RunConfig {
  std::string input;  // empty or "-" reads stdin
  InputKind kind = InputKind::kSimilarity;
  DistanceMode normalize = DistanceMode::kMaxNormalize;
  // "uniform", "score" or "restricted"; the latter needs restrict_path.
  std::string init = "uniform";
  std::string restrict_path;
  double tolerance = kEqualityTol;
  std::uint64_t seed = 1;
  bool trace = false;
  std::string output;  // empty or "-" writes stdout
  int max_n = kMaxPoints;
  std::string options_path;  // JSON SolverOptions, overrides tolerance
  std::string trace_jsonl;   // also write the trace as JSON lines here

  // Throws ValidationError for a non-positive tolerance, an unknown
  // initializer or a restricted initializer without a collection.
  void Check() const;
};

// Parses "uniform", "score", "restricted" or "restricted:<path>" into
// config.init and config.restrict_path.
void ParseInit(const std::string& text, RunConfig& config);
InputKind ParseInputKind(const std::string& text);
DistanceMode ParseNormalize(const std::string& text);

struct Problem {
  Labels labels;
  Score score;
};

// Reads the input named by the config. Matrices with n >= 2 become
// quadratic scores; a single point gets w({1}) = 0.
Problem LoadProblem(const RunConfig& config);

// Each command writes JSON to config.output, diagnostics to `err`, and
// returns the process exit status: 0 success, 1 invalid input, 2 capacity,
// 3 failed check or internal invariant breach.
int CmdCluster(const RunConfig& config, std::ostream& err);
// `structure_path` holds a partition (list of blocks, or {"partition": ...})
// or a cover object.
int CmdScore(const RunConfig& config, const std::string& structure_path,
             std::ostream& err);
// Without config.input, `random_n` selects a random quadratic instance
// seeded by config.seed.
int CmdOracle(const RunConfig& config, int samples,
              std::optional<int> random_n, std::ostream& err);
int CmdLatticeCheck(int n, const RunConfig& config, int random_functions,
                    std::ostream& err);

}  // namespace mlcluster

#endif  // MLCLUSTER_CLI_H_
