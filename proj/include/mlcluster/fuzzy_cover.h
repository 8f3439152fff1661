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

#ifndef MLCLUSTER_FUZZY_COVER_H_
#define MLCLUSTER_FUZZY_COVER_H_

#include <utility>
#include <vector>

#include "mlcluster/score.h"
#include "mlcluster/types.h"

namespace mlcluster {

// Membership distribution of one point: (subset, mass) pairs sorted by mask.
using Distribution = std::vector<std::pair<Mask, double>>;

// A subset together with the members that place positive mass on it.
struct Column {
  Mask subset;
  std::vector<Member> members;  // increasing point order
};

// A point of the product of simplices: for each point i, a distribution over
// the subsets containing i. The class stores whatever it is given (so that
// malformed input can be diagnosed); Validate() and the evaluators enforce
// the simplex and locality constraints.
class FuzzyCover {
 public:
  explicit FuzzyCover(int n);

  int size() const { return static_cast<int>(points_.size()); }
  const Distribution& distribution(int i) const { return points_.at(i); }
  double mass(int i, Mask a) const;

  // Sorts and merges `d`; zero entries are dropped.
  void SetDistribution(int i, Distribution d);
  void SetVertex(int i, Mask a) { points_.at(i) = {{a, 1.0}}; }

  // Drops masses below `tol` and rescales every point back to total mass 1.
  void Prune(double tol = kZeroMass);

  // True iff i's whole mass sits on one subset.
  bool IsVertex(int i, double tol = kEqualityTol) const;

  // Subsets carrying positive mass for at least one point, by increasing mask.
  std::vector<Column> Columns() const;

  friend bool operator==(const FuzzyCover&, const FuzzyCover&) = default;

 private:
  std::vector<Distribution> points_;
};

// Disjoint non-empty blocks covering {0, ..., n-1}, ordered by lowest point.
class Partition {
 public:
  // Throws ValidationError on overlap, gaps, empty or out-of-range blocks.
  Partition(int n, std::vector<Mask> blocks);

  static Partition Finest(int n);
  static Partition Coarsest(int n);

  int size() const { return n_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  Mask BlockOf(int i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> blocks_;
};

struct CoverDiagnostics {
  bool valid = true;
  std::vector<double> simplex_sums;
  // Points whose masses do not sum to 1 within kEqualityTol.
  std::vector<int> bad_simplex_points;
  // (point, subset) pairs with mass on a subset that excludes the point.
  std::vector<std::pair<int, Mask>> locality_violations;
  std::vector<std::pair<int, Mask>> negative_masses;
  // Support condition on the cover as given and after Prune().
  bool support_exact = true;
  bool support_exact_pruned = true;
  // Subsets whose positive-mass support is neither empty nor full.
  std::vector<Mask> partial_support;
};

CoverDiagnostics Validate(const FuzzyCover& cover);

// Throws ValidationError describing the first defect found by Validate().
void RequireValid(const FuzzyCover& cover);

// Every subset's positive-mass support is empty or the whole subset.
bool SupportCondition(const FuzzyCover& cover);

// Vertex cover putting each point's full mass on its block.
FuzzyCover EmbedPartition(const Partition& p);

// Inverse of EmbedPartition for vertex covers whose vertices agree blockwise.
// Throws ValidationError otherwise.
Partition ExtractPartition(const FuzzyCover& cover);

}  // namespace mlcluster

#endif  // MLCLUSTER_FUZZY_COVER_H_
