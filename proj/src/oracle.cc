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

#include "mlcluster/oracle.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "mlcluster/cover_eval.h"
#include "mlcluster/initializers.h"
#include "mlcluster/lattice.h"
#include "mlcluster/random.h"
#include "mlcluster/solve.h"

namespace mlcluster {
namespace {

constexpr int kLocalSearchStarts = 32;

Distribution ExponentialDraw(Rng& rng, const std::vector<Mask>& support) {
  Distribution d;
  double total = 0.0;
  for (Mask a : support) {
    const double e = rng.Exponential();
    total += e;
    d.emplace_back(a, e);
  }
  for (auto& e : d) e.second /= total;
  return d;
}

int GapBin(double gap) {
  if (gap <= 1e-9) return 0;
  if (gap <= 1e-2) return 1;
  if (gap <= 1e-1) return 2;
  if (gap <= 1.0) return 3;
  return 4;
}

}  // namespace

SimilarityMatrix RandomSimilarity(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityError("random similarity size out of range");
  }
  Rng rng(seed);
  SquareMatrix s(n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      s(i, j) = s(j, i) = rng.Uniform();
    }
  }
  return SimilarityMatrix(std::move(s));
}

QuadraticScore RandomQuadraticScore(int n, std::uint64_t seed) {
  return QuadraticFromSimilarity(RandomSimilarity(n, seed));
}

BruteForceResult BestPartitionBruteforce(const Score& score) {
  const int n = score.size();
  if (n < 1 || n > kMaxEnumerateN) {
    throw CapacityError("brute force needs 1 <= n <= " +
                        std::to_string(kMaxEnumerateN) + ", got " +
                        std::to_string(n));
  }
  std::optional<BruteForceResult> best;
  for (const PartitionCode& code : EnumeratePartitions(n)) {
    Partition p = ToPartition(code);
    const double s = PartitionScore(score, p);
    if (!best || s >= best->score) best = BruteForceResult{std::move(p), s};
  }
  return *best;
}

RandomCoverSample RandomCover(int n, std::uint64_t seed,
                              std::optional<std::span<const Mask>> support) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityError("random cover size out of range");
  }
  Rng rng(seed);
  FuzzyCover cover(n);
  if (!support.has_value()) {
    if (n > kMaxRandomCoverN) {
      throw CapacityError("dense random cover needs n <= " +
                          std::to_string(kMaxRandomCoverN) + ", got " +
                          std::to_string(n));
    }
    const Mask full = FullMask(n);
    for (int i = 0; i < n; ++i) {
      std::vector<Mask> subsets;
      for (Mask a = 1; a <= full; ++a) {
        if (Contains(a, i)) subsets.push_back(a);
      }
      cover.SetDistribution(i, ExponentialDraw(rng, subsets));
    }
  } else {
    std::vector<Mask> listed(support->begin(), support->end());
    std::sort(listed.begin(), listed.end());
    listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
    for (Mask a : listed) {
      if (a == 0 || (a & ~FullMask(n)) != 0) {
        throw ValidationError("support subset mask " + std::to_string(a) +
                              " is empty or out of range");
      }
    }
    if (listed.size() > (size_t{1} << kMaxDenseN)) {
      throw CapacityError("support collection too large");
    }
    for (int i = 0; i < n; ++i) {
      std::vector<Mask> subsets;
      for (Mask a : listed) {
        if (Contains(a, i)) subsets.push_back(a);
      }
      if (subsets.empty()) subsets.push_back(Bit(i));
      cover.SetDistribution(i, ExponentialDraw(rng, subsets));
    }
  }
  const bool exact = SupportCondition(cover);
  return RandomCoverSample{std::move(cover), exact};
}

OracleReport CorollaryCheck(const Score& score, int sample_count,
                            std::uint64_t seed, double tolerance) {
  const int n = score.size();
  BruteForceResult best = BestPartitionBruteforce(score);
  OracleReport report{best.partition};
  report.best_score = best.score;
  report.max_cover_score_sampled = -std::numeric_limits<double>::infinity();
  Rng seeds(seed);
  std::vector<FuzzyCover> starts;
  if (n >= 2) starts.push_back(InitUniform(n));

  for (int s = 0; s < sample_count; ++s) {
    RandomCoverSample sample = RandomCover(n, seeds.Next());
    const double w = GlobalScore(score, sample.cover);
    const RoundUpResult up = RoundUp(score, sample.cover, Direction::kMax);
    const RoundUpResult down = RoundUp(score, sample.cover, Direction::kMin);
    const double w_up = GlobalScore(score, up.cover);
    const double w_down = GlobalScore(score, down.cover);
    ++report.samples_checked;
    report.max_cover_score_sampled =
        std::max({report.max_cover_score_sampled, w, w_up});
    if (w > best.score + tolerance) {
      report.violations.push_back({s, "cover", w, best.score});
    }
    if (w_up > best.score + tolerance) {
      report.violations.push_back({s, "round_up", w_up, best.score});
    }
    if (w_down > w + tolerance) {
      report.violations.push_back({s, "sandwich", w_down, w});
    }
    if (w > w_up + tolerance) {
      report.violations.push_back({s, "sandwich", w, w_up});
    }
    if (static_cast<int>(starts.size()) < kLocalSearchStarts &&
        sample.support_exact) {
      starts.push_back(std::move(sample.cover));
    }
  }
  if (report.samples_checked == 0) report.max_cover_score_sampled = 0.0;

  for (const FuzzyCover& start : starts) {
    const LocalSearchResult found = LocalSearch(score, start);
    const double gap = best.score - found.score;
    ++report.local_search_runs;
    if (gap <= tolerance) ++report.local_search_optimal;
    ++report.gap_histogram[GapBin(std::max(gap, 0.0))];
    if (found.score > best.score + tolerance) {
      report.violations.push_back({-1, "local_search", found.score,
                                   best.score});
    }
  }
  return report;
}

}  // namespace mlcluster
