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

#ifndef MLCLUSTER_INITIALIZERS_H_
#define MLCLUSTER_INITIALIZERS_H_

#include <span>
#include <vector>

#include "mlcluster/fuzzy_cover.h"
#include "mlcluster/score.h"

namespace mlcluster {

// Every point spreads its mass evenly over all 2^(n-1) subsets containing it.
// Requires 2 <= n <= kMaxDenseN.
FuzzyCover InitUniform(int n);

// q_i^A = w(A) / sum_{B containing i} w(B). Requires a non-negative score on
// all subsets and n <= kMaxDenseN.
FuzzyCover InitScoreProportional(const Score& score);

enum class RestrictedMode { kUniform, kScoreProportional };

// Like the initializers above, but each point only receives mass on subsets
// lying inside one of the given maximal subsets. The collection must cover
// every point; sum_k 2^|A_k| is capped at 2^kMaxDenseN.
FuzzyCover InitRestricted(const Score& score, std::span<const Mask> maximal,
                          RestrictedMode mode);

// Subsets containing `i` that lie inside some member of `maximal`, sorted.
std::vector<Mask> RestrictedSupport(std::span<const Mask> maximal, int i);

}  // namespace mlcluster

#endif  // MLCLUSTER_INITIALIZERS_H_
