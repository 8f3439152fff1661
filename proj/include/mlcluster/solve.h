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

#ifndef MLCLUSTER_SOLVE_H_
#define MLCLUSTER_SOLVE_H_

#include <string>
#include <vector>

#include "mlcluster/fuzzy_cover.h"
#include "mlcluster/score.h"
#include "mlcluster/types.h"

namespace mlcluster {

struct SolverOptions {
  // Argmax ties always go to the lowest subset mask; Loop 2 always extracts
  // the largest-gain outlier first. Both enums exist so the choice is
  // spelled out in serialized options.
  enum class TieBreak { kLowestMask };
  enum class Loop2Order { kBestGainFirst };

  double tolerance = kEqualityTol;
  TieBreak tie_break = TieBreak::kLowestMask;
  Loop2Order loop2_order = Loop2Order::kBestGainFirst;
  // 0 means 4n.
  int max_iterations = 0;
  // Keep every candidate block score of each Loop 1 iteration in the trace.
  bool record_trace = false;

  int IterationLimit(int n) const { return max_iterations > 0 ? max_iterations : 4 * n; }
  // Throws ValidationError unless tolerance > 0 and the limit is >= n.
  void Check(int n) const;
};

struct CandidateScore {
  Mask subset;
  double score;
};

struct TraceRecord {
  enum class Kind { kRoundUp, kSelect, kExtract };

  Kind kind = Kind::kRoundUp;
  int iteration = 0;
  // kRoundUp: the point moved to a vertex. kExtract: the outlier.
  int point = -1;
  // kRoundUp: the chosen vertex. kSelect: the selected block.
  // kExtract: the block the outlier left.
  Mask subset = 0;
  // kRoundUp: reduced score of `subset`. kSelect: the block's summed
  // derivatives. kExtract: w({i}) + w(A\i) - w(A).
  double value = 0.0;
  // kSelect only, and only with record_trace.
  std::vector<CandidateScore> candidates;
  double global_score = 0.0;
};

struct SearchTrace {
  std::vector<TraceRecord> records;
};

enum class Direction { kMax, kMin };

struct RoundUpResult {
  FuzzyCover cover;
  SearchTrace trace;
};

// Moves points one at a time (lowest index first) to a best (or worst)
// vertex of their simplex given the others. Each step never decreases
// (never increases, for kMin) the global score; at most n steps.
RoundUpResult RoundUp(const Score& score, const FuzzyCover& cover,
                      Direction direction);

struct LocalSearchResult {
  Partition partition;
  double score = 0.0;
  SearchTrace trace;
  int selections = 0;
  int extractions = 0;
};

// Loop 1 repeatedly locks the fractional block with the largest summed
// derivatives and moves everyone else's mass off it; Loop 2 then extracts
// outliers into singletons until none remain. The input must satisfy the
// support condition.
LocalSearchResult LocalSearch(const Score& score, const FuzzyCover& cover,
                              const SolverOptions& options = {});

// No single point can raise the global score by redistributing its own
// membership mass (beyond `tolerance`).
bool IsLocalMaximizer(const Score& score, const FuzzyCover& cover,
                      double tolerance = kEqualityTol);

// (i, A) with i in A in P, |A| > 1 and w({i}) + w(A\i) - w(A) > tolerance.
std::vector<std::pair<int, Mask>> OutlierViolations(
    const Score& score, const Partition& p, double tolerance = kEqualityTol);

// Sum of block scores.
double PartitionScore(const Score& score, const Partition& p);

}  // namespace mlcluster

#endif  // MLCLUSTER_SOLVE_H_
