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

#ifndef MLCLUSTER_SCORE_FUNCTION_H_
#define MLCLUSTER_SCORE_FUNCTION_H_

#include <span>
#include <vector>

#include "mlcluster/types.h"

namespace mlcluster {

// In-place fast transforms over a table of size 2^n indexed by mask.
// Mobius: mu(A) = sum_{B subset A} (-1)^{|A\B|} w(B).
// Zeta:   w(B)  = sum_{A subset B} mu(A).
std::vector<double> MobiusTransform(std::span<const double> values);
std::vector<double> ZetaTransform(std::span<const double> mobius);

// Dense set function on all subsets of n <= kMaxDenseN points together with
// its Mobius coefficients. The empty set carries value and coefficient 0.
class ScoreFunction {
 public:
  static ScoreFunction FromValues(int n, std::vector<double> values);
  static ScoreFunction FromMobius(int n, std::vector<double> mobius);

  int size() const { return n_; }
  double value(Mask a) const { return values_[Check(a)]; }
  double mobius(Mask a) const { return mobius_[Check(a)]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& mobius_table() const { return mobius_; }
  // Largest |A| with a coefficient of magnitude above kZeroMass.
  int degree() const { return degree_; }

 private:
  ScoreFunction(int n, std::vector<double> values, std::vector<double> mobius);
  size_t Check(Mask a) const;

  int n_ = 0;
  std::vector<double> values_;
  std::vector<double> mobius_;
  int degree_ = 0;
};

}  // namespace mlcluster

#endif  // MLCLUSTER_SCORE_FUNCTION_H_
