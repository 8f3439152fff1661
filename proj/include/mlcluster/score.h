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

#ifndef MLCLUSTER_SCORE_H_
#define MLCLUSTER_SCORE_H_

#include <span>
#include <variant>
#include <vector>

#include "mlcluster/quadratic_score.h"
#include "mlcluster/score_function.h"
#include "mlcluster/types.h"

namespace mlcluster {

// One coordinate of a hypercube point: point index and its value in [0, 1].
struct Member {
  int point;
  double mass;
};

// A cluster score, either dense or quadratic. Cheap to copy for quadratic,
// shares nothing mutable in either case.
class Score {
 public:
  Score(ScoreFunction dense) : rep_(std::move(dense)) {}  // NOLINT
  Score(QuadraticScore quadratic) : rep_(std::move(quadratic)) {}  // NOLINT

  int size() const;
  bool is_quadratic() const {
    return std::holds_alternative<QuadraticScore>(rep_);
  }
  const ScoreFunction* dense() const {
    return std::get_if<ScoreFunction>(&rep_);
  }
  const QuadraticScore* quadratic() const {
    return std::get_if<QuadraticScore>(&rep_);
  }

  // w(A); throws ValidationError if A has points outside 0..n-1.
  double Value(Mask a) const;
  double Mobius(Mask a) const;

  // Multilinear extension f(q) = sum_A (prod_{i in A} q_i) mu(A), where q is
  // given sparsely: coordinates not listed are 0.
  double Mle(std::span<const Member> q) const;

  // Coefficient of q_i in f(q): sum over B within others of (prod q_j) mu(B+i).
  // `others` must not list point i.
  double Slope(int i, std::span<const Member> others) const;

  // Slope(i, q without i) for every member of q, in the order of q.
  std::vector<double> Slopes(std::span<const Member> q) const;

 private:
  void CheckMask(Mask a) const;

  std::variant<ScoreFunction, QuadraticScore> rep_;
};

// Dense multilinear extension over the full hypercube; q has n entries in
// [0, 1]. Throws ValidationError for coordinates outside [0, 1].
double MleEvaluate(const Score& score, std::span<const double> q);

}  // namespace mlcluster

#endif  // MLCLUSTER_SCORE_H_
