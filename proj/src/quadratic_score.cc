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

#include "mlcluster/quadratic_score.h"

#include <string>

namespace mlcluster {

QuadraticScore::QuadraticScore(std::vector<double> singleton_coeffs,
                               std::vector<double> pair_coeffs)
    : n_(static_cast<int>(singleton_coeffs.size())),
      singleton_(std::move(singleton_coeffs)),
      pair_(std::move(pair_coeffs)) {
  if (n_ > kMaxPoints) {
    throw CapacityError("quadratic score supports at most " +
                        std::to_string(kMaxPoints) + " points");
  }
  const size_t expected = static_cast<size_t>(n_) * (n_ - 1) / 2;
  if (pair_.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) +
                          " pair coefficients, got " +
                          std::to_string(pair_.size()));
  }
}

size_t QuadraticScore::PairIndex(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Row i of the packed upper triangle starts after rows 0..i-1.
  const size_t row_start =
      static_cast<size_t>(i) * (2 * n_ - i - 1) / 2;
  return row_start + (j - i - 1);
}

double QuadraticScore::value(Mask a) const {
  if (a & ~FullMask(n_)) {
    throw ValidationError("subset mask " + std::to_string(a) +
                          " out of range for n = " + std::to_string(n_));
  }
  const std::vector<int> pts = Members(a);
  double total = 0.0;
  for (size_t x = 0; x < pts.size(); ++x) {
    total += singleton_[pts[x]];
    for (size_t y = x + 1; y < pts.size(); ++y) total += pair(pts[x], pts[y]);
  }
  return total;
}

double QuadraticScore::mobius(Mask a) const {
  if (a & ~FullMask(n_)) {
    throw ValidationError("subset mask " + std::to_string(a) +
                          " out of range for n = " + std::to_string(n_));
  }
  switch (PopCount(a)) {
    case 1:
      return singleton_[LowestPoint(a)];
    case 2: {
      const int i = LowestPoint(a);
      return pair(i, LowestPoint(a & (a - 1)));
    }
    default:
      return 0.0;
  }
}

ScoreFunction QuadraticScore::ToDense() const {
  RequireDense(n_, "QuadraticScore::ToDense");
  std::vector<double> mobius(size_t{1} << n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    mobius[Bit(i)] = singleton_[i];
    for (int j = i + 1; j < n_; ++j) mobius[Bit(i) | Bit(j)] = pair(i, j);
  }
  return ScoreFunction::FromMobius(n_, std::move(mobius));
}

QuadraticScore QuadraticFromSimilarity(const SimilarityMatrix& s) {
  const int n = s.size();
  if (n < 2) {
    throw ValidationError("quadratic score needs at least 2 points, got " +
                          std::to_string(n));
  }
  const double denom = 2.0 * (n - 1);
  std::vector<double> singleton(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      if (l != i) singleton[i] += (1.0 - s(i, l)) / denom;
    }
  }
  std::vector<double> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.push_back(s(i, j) - singleton[i] - singleton[j]);
    }
  }
  return QuadraticScore(std::move(singleton), std::move(pairs));
}

}  // namespace mlcluster
