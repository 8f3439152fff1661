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

#include "mlcluster/cover_eval.h"

#include <algorithm>
#include <string>

namespace mlcluster {
namespace {

void CheckPointSubset(const FuzzyCover& cover, int i, Mask a) {
  if (i < 0 || i >= cover.size()) {
    throw ValidationError("point index " + std::to_string(i) +
                          " out of range");
  }
  if (!Contains(a, i) || (a & ~FullMask(cover.size())) != 0) {
    throw ValidationError("subset mask " + std::to_string(a) +
                          " does not contain point " + std::to_string(i) +
                          " or is out of range");
  }
}

void CheckSizes(const Score& score, const FuzzyCover& cover) {
  if (score.size() != cover.size()) {
    throw ValidationError("score has " + std::to_string(score.size()) +
                          " points but cover has " +
                          std::to_string(cover.size()));
  }
}

std::vector<Member> OthersOn(const FuzzyCover& cover, int i, Mask a) {
  std::vector<Member> others;
  for (int j : Members(a)) {
    if (j == i) continue;
    const double q = cover.mass(j, a);
    if (q > 0.0) others.push_back({j, q});
  }
  return others;
}

}  // namespace

namespace internal {

double RawGlobalScore(const Score& score, const FuzzyCover& cover) {
  double total = 0.0;
  for (const Column& c : cover.Columns()) total += score.Mle(c.members);
  return total;
}

double ReducedFromColumn(const Score& score, int i,
                         std::span<const Member> members) {
  std::vector<Member> others;
  others.reserve(members.size());
  for (const Member& m : members) {
    if (m.point != i) others.push_back(m);
  }
  return score.Slope(i, others);
}

}  // namespace internal

ColumnIndex::ColumnIndex(const FuzzyCover& cover)
    : columns_(cover.Columns()) {}

std::span<const Member> ColumnIndex::MembersOf(Mask a) const {
  auto it = std::lower_bound(
      columns_.begin(), columns_.end(), a,
      [](const Column& c, Mask m) { return c.subset < m; });
  if (it == columns_.end() || it->subset != a) return {};
  return it->members;
}

double ReducedScore::operator()(Mask a) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), a,
      [](const std::pair<Mask, double>& e, Mask m) { return e.first < m; });
  return it != entries.end() && it->first == a ? it->second : base;
}

double GlobalScore(const Score& score, const FuzzyCover& cover) {
  CheckSizes(score, cover);
  RequireValid(cover);
  return internal::RawGlobalScore(score, cover);
}

ReducedScore ComputeReducedScore(const Score& score, const FuzzyCover& cover,
                                 int i) {
  CheckSizes(score, cover);
  RequireValid(cover);
  CheckPointSubset(cover, i, Bit(i));
  ReducedScore out;
  out.point = i;
  out.base = score.Mobius(Bit(i));
  for (const Column& c : cover.Columns()) {
    if (!Contains(c.subset, i)) continue;
    out.entries.emplace_back(c.subset,
                             internal::ReducedFromColumn(score, i, c.members));
  }
  return out;
}

double ReducedScoreAt(const Score& score, const FuzzyCover& cover, int i,
                      Mask a) {
  CheckSizes(score, cover);
  CheckPointSubset(cover, i, a);
  return score.Slope(i, OthersOn(cover, i, a));
}

double PointScore(const Score& score, const FuzzyCover& cover, int i) {
  CheckSizes(score, cover);
  RequireValid(cover);
  CheckPointSubset(cover, i, Bit(i));
  double total = 0.0;
  for (const auto& [a, q] : cover.distribution(i)) {
    total += q * score.Slope(i, OthersOn(cover, i, a));
  }
  return total;
}

double ComplementScore(const Score& score, const FuzzyCover& cover, int i) {
  CheckSizes(score, cover);
  RequireValid(cover);
  CheckPointSubset(cover, i, Bit(i));
  FuzzyCover without = cover;
  without.SetDistribution(i, {});
  return internal::RawGlobalScore(score, without);
}

double Derivative(const Score& score, const FuzzyCover& cover, int i,
                  Mask a) {
  CheckSizes(score, cover);
  CheckPointSubset(cover, i, a);
  RequireValid(cover);
  FuzzyCover upper = cover;
  upper.SetVertex(i, a);
  FuzzyCover lower = cover;
  lower.SetDistribution(i, {});
  return internal::RawGlobalScore(score, upper) -
         internal::RawGlobalScore(score, lower);
}

std::vector<GradientEntry> FullGradient(
    const Score& score, const FuzzyCover& cover,
    std::optional<std::span<const Mask>> support) {
  CheckSizes(score, cover);
  RequireValid(cover);
  const int n = cover.size();
  std::vector<GradientEntry> out;
  if (support.has_value()) {
    std::vector<Mask> subsets(support->begin(), support->end());
    std::sort(subsets.begin(), subsets.end());
    subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    for (int i = 0; i < n; ++i) {
      for (Mask a : subsets) {
        if (Contains(a, i)) {
          out.push_back({i, a, ReducedScoreAt(score, cover, i, a)});
        }
      }
    }
    return out;
  }
  RequireDense(n, "FullGradient without a support restriction");
  const Mask full = FullMask(n);
  for (int i = 0; i < n; ++i) {
    const Mask rest = full & ~Bit(i);
    // Enumerate subsets of `rest` in increasing order, each joined with i.
    Mask sub = 0;
    do {
      const Mask a = sub | Bit(i);
      out.push_back({i, a, score.Slope(i, OthersOn(cover, i, a))});
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }
  return out;
}

}  // namespace mlcluster
