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

#ifndef MLCLUSTER_ORACLE_H_
#define MLCLUSTER_ORACLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlcluster/fuzzy_cover.h"
#include "mlcluster/quadratic_score.h"
#include "mlcluster/score.h"
#include "mlcluster/similarity.h"

namespace mlcluster {

inline constexpr int kMaxRandomCoverN = 16;

// Off-diagonal entries drawn uniformly from [0, 1).
SimilarityMatrix RandomSimilarity(int n, std::uint64_t seed);
// QuadraticFromSimilarity(RandomSimilarity(n, seed)); n >= 2.
QuadraticScore RandomQuadraticScore(int n, std::uint64_t seed);

struct BruteForceResult {
  Partition partition;
  double score;
};

// Exact best partition over all Bell(n) partitions; exact ties keep the last
// in restricted-growth order, so the finest partition wins among equals.
// n <= kMaxEnumerateN.
BruteForceResult BestPartitionBruteforce(const Score& score);

struct RandomCoverSample {
  FuzzyCover cover;
  bool support_exact;
};

// Each point's distribution is uniform on its simplex (normalized
// exponentials). Without `support`, a point ranges over all subsets
// containing it (n <= kMaxRandomCoverN); with `support`, over the listed
// subsets containing it, or only its singleton if none is listed.
RandomCoverSample RandomCover(
    int n, std::uint64_t seed,
    std::optional<std::span<const Mask>> support = std::nullopt);

struct OracleViolation {
  int sample;        // -1 for instance-level checks
  std::string kind;  // "cover", "round_up", "sandwich", "local_search"
  double value;
  double bound;
};

struct OracleReport {
  Partition best_partition;
  double best_score = 0.0;
  int samples_checked = 0;
  double max_cover_score_sampled = 0.0;
  std::vector<OracleViolation> violations;

  // Local search runs from the uniform cover and the first few samples.
  // Purely descriptive: local search promises local, not global, optimality.
  int local_search_runs = 0;
  int local_search_optimal = 0;
  // Gap (best - found) counts over bins [0,1e-9], (1e-9,1e-2], (1e-2,1e-1],
  // (1e-1,1], (1,inf).
  std::vector<int> gap_histogram = std::vector<int>(5, 0);

  bool ok() const { return violations.empty(); }
};

// Samples random covers, rounds each up and down, and checks that no
// sampled or rounded cover beats the best partition. n <= kMaxEnumerateN.
OracleReport CorollaryCheck(const Score& score, int sample_count,
                            std::uint64_t seed,
                            double tolerance = kEqualityTol);

}  // namespace mlcluster

#endif  // MLCLUSTER_ORACLE_H_
