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

#include <vector>

#include <gtest/gtest.h>

#include "mlcluster/cover_eval.h"
#include "mlcluster/initializers.h"
#include "mlcluster/oracle.h"
#include "mlcluster/quadratic_score.h"
#include "mlcluster/random.h"
#include "mlcluster/solve.h"
#include "test_util.h"

namespace mlcluster {
namespace {

using testing::ThreePoint;
using testing::M;

constexpr double kTol = 1e-9;

TEST(BruteForceTest, ThreePoint) {
  const BruteForceResult r = BestPartitionBruteforce(Score(ThreePoint()));
  EXPECT_EQ(r.partition, Partition(3, {M({1, 2}), M({3})}));
  EXPECT_NEAR(r.score, 1.0, kTol);
}

TEST(BruteForceTest, AdditiveTieGoesToFinest) {
  std::vector<double> v(16, 0.0);
  for (Mask a = 1; a < 16; ++a) {
    for (int i : Members(a)) v[a] += 0.5 + i;
  }
  const BruteForceResult r =
      BestPartitionBruteforce(Score(ScoreFunction::FromValues(4, v)));
  EXPECT_EQ(r.partition, Partition::Finest(4));
  EXPECT_NEAR(r.score, 8.0, kTol);
}

TEST(BruteForceTest, CliqueIsKeptTogether) {
  const Score w(QuadraticFromSimilarity(testing::Clique(5, 3)));
  const BruteForceResult r = BestPartitionBruteforce(w);
  EXPECT_EQ(r.partition, Partition(5, {M({1, 2, 3}), M({4}), M({5})}));
  EXPECT_NEAR(r.score, 3.25, kTol);
}

TEST(BruteForceTest, TwoPointsPicksBetterVertex) {
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const ScoreFunction w = testing::RandomSetFunction(2, rng);
    const double split = w.value(1) + w.value(2);
    const double pair = w.value(3);
    EXPECT_NEAR(BestPartitionBruteforce(Score(w)).score, std::max(split, pair),
                kTol);
  }
}

TEST(BruteForceTest, Capacity) {
  EXPECT_THROW(BestPartitionBruteforce(Score(RandomQuadraticScore(11, 1))),
               CapacityError);
}

TEST(RandomCoverTest, DeterministicAndOnSimplex) {
  const RandomCoverSample a = RandomCover(5, 77);
  const RandomCoverSample b = RandomCover(5, 77);
  EXPECT_EQ(a.cover, b.cover);
  EXPECT_TRUE(a.support_exact);
  const CoverDiagnostics d = Validate(a.cover);
  EXPECT_TRUE(d.valid);
  for (double s : d.simplex_sums) EXPECT_NEAR(s, 1.0, kTol);
  EXPECT_NE(RandomCover(5, 78).cover, a.cover);
}

TEST(RandomCoverTest, Support) {
  const std::vector<Mask> support = {M({1, 2}), M({2, 3})};
  const RandomCoverSample s = RandomCover(4, 3, support);
  EXPECT_EQ(s.cover.distribution(3), (Distribution{{M({4}), 1.0}}));
  EXPECT_EQ(s.cover.distribution(0).size(), 1u);
  EXPECT_EQ(s.cover.distribution(1).size(), 2u);
  // Every member of a listed subset draws positive mass on it.
  EXPECT_TRUE(s.support_exact);
  EXPECT_THROW(RandomCover(17, 1), CapacityError);
}

TEST(RandomCoverTest, ThreePointNeverBeatsBestPartition) {
  const Score w(ThreePoint());
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    EXPECT_LE(GlobalScore(w, RandomCover(3, seed).cover), 1.0 + kTol);
  }
}

TEST(CorollaryCheckTest, ThreePoint) {
  const OracleReport r = CorollaryCheck(Score(ThreePoint()), 1000, 1);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.samples_checked, 1000);
  EXPECT_LT(r.max_cover_score_sampled, 1.0 + kTol);
  EXPECT_NEAR(r.best_score, 1.0, kTol);
}

TEST(CorollaryCheckTest, RandomQuadraticSeven) {
  const OracleReport r = CorollaryCheck(Score(RandomQuadraticScore(7, 42)),
                                        500, 42);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.local_search_runs, 0);
  int total = 0;
  for (int c : r.gap_histogram) total += c;
  EXPECT_EQ(total, r.local_search_runs);
}

TEST(CorollaryCheckTest, TwoPoints) {
  Rng rng(61);
  const ScoreFunction w = testing::RandomSetFunction(2, rng);
  const OracleReport r = CorollaryCheck(Score(w), 200, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_NEAR(r.best_score, std::max(w.value(3), w.value(1) + w.value(2)),
              kTol);
}

// LocalSearch never beats the brute-force optimum; how often it reaches it
// is only printed.
TEST(OracleVsSolverTest, NeverAboveOptimum) {
  Rng rng(67);
  int optimal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const Score w(RandomQuadraticScore(n, rng.Next()));
    const double best = BestPartitionBruteforce(w).score;
    const LocalSearchResult r = LocalSearch(w, InitUniform(n));
    EXPECT_LE(r.score, best + kTol);
    if (r.score >= best - kTol) ++optimal;
  }
  std::printf("local search reached the optimum on %d of 100 instances\n",
              optimal);
}

TEST(RandomSimilarityTest, Valid) {
  const SimilarityMatrix s = RandomSimilarity(6, 9);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(s(i, i), 1.0);
    for (int j = 0; j < 6; ++j) EXPECT_EQ(s(i, j), s(j, i));
  }
}

// The two singleton choices the quadratic construction avoids: S_ii = 1
// makes every pair coefficient negative and the finest partition optimal;
// zero singletons make all coefficients non-negative and the grand
// coalition optimal.
QuadraticScore WithSingletons(const SimilarityMatrix& s, double singleton) {
  const int n = s.size();
  std::vector<double> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back(s(i, j) - 2 * singleton);
  }
  return QuadraticScore(std::vector<double>(n, singleton), pairs);
}

TEST(SingletonFixtureTest, DiagonalSingletonsAreSubadditive) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Score w(WithSingletons(RandomSimilarity(6, seed), 1.0));
    EXPECT_EQ(BestPartitionBruteforce(w).partition, Partition::Finest(6));
  }
}

TEST(SingletonFixtureTest, ZeroSingletonsAreSuperadditive) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Score w(WithSingletons(RandomSimilarity(6, seed), 0.0));
    const BruteForceResult r = BestPartitionBruteforce(w);
    EXPECT_NEAR(r.score, w.Value(FullMask(6)), kTol);
  }
}

}  // namespace
}  // namespace mlcluster
