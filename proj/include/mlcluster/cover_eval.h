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

#ifndef MLCLUSTER_COVER_EVAL_H_
#define MLCLUSTER_COVER_EVAL_H_

#include <optional>
#include <span>
#include <vector>

#include "mlcluster/fuzzy_cover.h"
#include "mlcluster/score.h"

namespace mlcluster {

// Column view of a cover with lookup by subset.
class ColumnIndex {
 public:
  explicit ColumnIndex(const FuzzyCover& cover);

  const std::vector<Column>& columns() const { return columns_; }
  // Members with positive mass on `a`; empty if none.
  std::span<const Member> MembersOf(Mask a) const;

 private:
  std::vector<Column> columns_;
};

// Point i's reduced score (equivalently its gradient block), a set function
// on the subsets containing i. Stored sparsely: subsets not listed in
// `entries` have the singleton value `base` = w({i}), because no other point
// has mass on them.
struct ReducedScore {
  int point = 0;
  double base = 0.0;
  std::vector<std::pair<Mask, double>> entries;  // sorted by mask

  double operator()(Mask a) const;
};

// Global score W(q) = sum over subsets A of f(q^A).
double GlobalScore(const Score& score, const FuzzyCover& cover);

ReducedScore ComputeReducedScore(const Score& score, const FuzzyCover& cover,
                                 int i);
// Same quantity for a single subset.
double ReducedScoreAt(const Score& score, const FuzzyCover& cover, int i,
                      Mask a);

// <q_i, reduced score of i>.
double PointScore(const Score& score, const FuzzyCover& cover, int i);

// W with point i's distribution replaced by the null one.
double ComplementScore(const Score& score, const FuzzyCover& cover, int i);

// W(i fully on A) - W(i null), evaluated by two global-score passes.
double Derivative(const Score& score, const FuzzyCover& cover, int i, Mask a);

struct GradientEntry {
  int point;
  Mask subset;
  double value;
};

// Every (i, A)-derivative. Without `support` this enumerates all subsets
// containing each point and requires n <= kMaxDenseN; with `support` only
// the listed subsets are reported.
std::vector<GradientEntry> FullGradient(
    const Score& score, const FuzzyCover& cover,
    std::optional<std::span<const Mask>> support = std::nullopt);

namespace internal {
// Global score without validation; tolerates null distributions.
double RawGlobalScore(const Score& score, const FuzzyCover& cover);
// Reduced score of i at `a` given the other members on `a` (i excluded).
double ReducedFromColumn(const Score& score, int i,
                         std::span<const Member> members);
}  // namespace internal

}  // namespace mlcluster

#endif  // MLCLUSTER_COVER_EVAL_H_
