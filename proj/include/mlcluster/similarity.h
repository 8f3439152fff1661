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

#ifndef MLCLUSTER_SIMILARITY_H_
#define MLCLUSTER_SIMILARITY_H_

#include <span>
#include <vector>

namespace mlcluster {

// Row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<size_t>(n) * n, fill) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  double& operator()(int i, int j) { return data_[Index(i, j)]; }

 private:
  size_t Index(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<double> data_;
};

// Symmetric pairwise similarities in [0, 1] with unit diagonal.
class SimilarityMatrix {
 public:
  // Throws ValidationError naming the offending (row, column).
  explicit SimilarityMatrix(SquareMatrix entries);

  int size() const { return entries_.size(); }
  double operator()(int i, int j) const { return entries_(i, j); }
  const SquareMatrix& entries() const { return entries_; }

 private:
  SquareMatrix entries_;
};

enum class DistanceMode { kMaxNormalize, kAlreadyNormalized };

// S_ij = 1 - d_ij / d_max (or 1 - d_ij when already normalized).
SimilarityMatrix SimilarityFromDistances(const SquareMatrix& distances,
                                         DistanceMode mode);

}  // namespace mlcluster

#endif  // MLCLUSTER_SIMILARITY_H_
