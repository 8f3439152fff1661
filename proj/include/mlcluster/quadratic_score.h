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

#ifndef MLCLUSTER_QUADRATIC_SCORE_H_
#define MLCLUSTER_QUADRATIC_SCORE_H_

#include <vector>

#include "mlcluster/score_function.h"
#include "mlcluster/similarity.h"
#include "mlcluster/types.h"

namespace mlcluster {

// Set function whose Mobius inversion vanishes above pairs. Stores only the
// singleton and pair coefficients, so there is no dense size cap.
class QuadraticScore {
 public:
  QuadraticScore(std::vector<double> singleton_coeffs,
                 std::vector<double> pair_coeffs);

  int size() const { return n_; }
  double singleton(int i) const { return singleton_[i]; }
  double pair(int i, int j) const { return pair_[PairIndex(i, j)]; }
  const std::vector<double>& singleton_coeffs() const { return singleton_; }
  const std::vector<double>& pair_coeffs() const { return pair_; }

  // w(A) in O(|A|^2).
  double value(Mask a) const;
  double mobius(Mask a) const;

  ScoreFunction ToDense() const;

 private:
  size_t PairIndex(int i, int j) const;

  int n_ = 0;
  std::vector<double> singleton_;
  std::vector<double> pair_;  // packed upper triangle, row-major, i < j
};

// Singletons score the mean half-diversity sum_{l != i} (1 - S_il) / (2(n-1));
// pairs score exactly S_ij.
QuadraticScore QuadraticFromSimilarity(const SimilarityMatrix& s);

}  // namespace mlcluster

#endif  // MLCLUSTER_QUADRATIC_SCORE_H_
