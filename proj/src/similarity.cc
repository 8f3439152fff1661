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

#include "mlcluster/similarity.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlcluster/types.h"

namespace mlcluster {
namespace {

std::string At(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

void CheckDistances(const SquareMatrix& d) {
  const int n = d.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = d(i, j);
      if (!std::isfinite(x)) {
        throw ValidationError("distance at " + At(i, j) + " is not finite");
      }
      if (x < 0.0) {
        throw ValidationError("distance at " + At(i, j) + " is negative");
      }
      if (x != d(j, i)) {
        throw ValidationError("distance matrix is asymmetric at " + At(i, j));
      }
    }
    if (d(i, i) != 0.0) {
      throw ValidationError("distance diagonal at " + At(i, i) +
                            " is not zero");
    }
  }
}

}  // namespace

SimilarityMatrix::SimilarityMatrix(SquareMatrix entries)
    : entries_(std::move(entries)) {
  const int n = entries_.size();
  for (int i = 0; i < n; ++i) {
    if (entries_(i, i) != 1.0) {
      throw ValidationError("similarity diagonal at " + At(i, i) +
                            " is not 1");
    }
    for (int j = 0; j < n; ++j) {
      const double s = entries_(i, j);
      if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
        throw ValidationError("similarity at " + At(i, j) +
                              " is outside [0, 1]");
      }
      if (s != entries_(j, i)) {
        throw ValidationError("similarity matrix is asymmetric at " +
                              At(i, j));
      }
    }
  }
}

SimilarityMatrix SimilarityFromDistances(const SquareMatrix& distances,
                                         DistanceMode mode) {
  CheckDistances(distances);
  const int n = distances.size();
  double scale = 1.0;
  if (mode == DistanceMode::kMaxNormalize) {
    double d_max = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d_max = std::max(d_max, distances(i, j));
    }
    scale = d_max;
  }
  SquareMatrix s(n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = distances(i, j);
      if (mode == DistanceMode::kAlreadyNormalized) {
        if (d > 1.0) {
          throw ValidationError("normalized distance at " + At(i, j) +
                                " exceeds 1");
        }
        s(i, j) = 1.0 - d;
      } else {
        s(i, j) = scale == 0.0 ? 1.0 : 1.0 - d / scale;
      }
    }
  }
  return SimilarityMatrix(std::move(s));
}

}  // namespace mlcluster
