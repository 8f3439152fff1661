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

#include "mlcluster/score_function.h"

#include <bit>
#include <cmath>
#include <string>

namespace mlcluster {
namespace {

int DimensionOf(size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw ValidationError("set-function table size " + std::to_string(size) +
                          " is not a power of two");
  }
  const int n = std::countr_zero(size);
  RequireDense(n, "set-function table");
  return n;
}

}  // namespace

std::vector<double> MobiusTransform(std::span<const double> values) {
  const int n = DimensionOf(values.size());
  std::vector<double> out(values.begin(), values.end());
  for (int i = 0; i < n; ++i) {
    const Mask bit = Bit(i);
    for (Mask a = 0; a < out.size(); ++a) {
      if (a & bit) out[a] -= out[a ^ bit];
    }
  }
  return out;
}

std::vector<double> ZetaTransform(std::span<const double> mobius) {
  const int n = DimensionOf(mobius.size());
  std::vector<double> out(mobius.begin(), mobius.end());
  for (int i = 0; i < n; ++i) {
    const Mask bit = Bit(i);
    for (Mask a = 0; a < out.size(); ++a) {
      if (a & bit) out[a] += out[a ^ bit];
    }
  }
  return out;
}

ScoreFunction::ScoreFunction(int n, std::vector<double> values,
                             std::vector<double> mobius)
    : n_(n), values_(std::move(values)), mobius_(std::move(mobius)) {
  for (Mask a = 1; a < mobius_.size(); ++a) {
    if (std::abs(mobius_[a]) > kZeroMass) {
      degree_ = std::max(degree_, PopCount(a));
    }
  }
}

ScoreFunction ScoreFunction::FromValues(int n, std::vector<double> values) {
  RequireDense(n, "ScoreFunction");
  if (values.size() != (size_t{1} << n)) {
    throw ValidationError("expected " + std::to_string(size_t{1} << n) +
                          " set-function values, got " +
                          std::to_string(values.size()));
  }
  if (values[0] != 0.0) {
    throw ValidationError("score of the empty set must be 0");
  }
  std::vector<double> mobius = MobiusTransform(values);
  mobius[0] = 0.0;
  return ScoreFunction(n, std::move(values), std::move(mobius));
}

ScoreFunction ScoreFunction::FromMobius(int n, std::vector<double> mobius) {
  RequireDense(n, "ScoreFunction");
  if (mobius.size() != (size_t{1} << n)) {
    throw ValidationError("expected " + std::to_string(size_t{1} << n) +
                          " Mobius coefficients, got " +
                          std::to_string(mobius.size()));
  }
  if (mobius[0] != 0.0) {
    throw ValidationError("Mobius coefficient of the empty set must be 0");
  }
  std::vector<double> values = ZetaTransform(mobius);
  values[0] = 0.0;
  return ScoreFunction(n, std::move(values), std::move(mobius));
}

size_t ScoreFunction::Check(Mask a) const {
  if (a >= values_.size()) {
    throw ValidationError("subset mask " + std::to_string(a) +
                          " out of range for n = " + std::to_string(n_));
  }
  return static_cast<size_t>(a);
}

}  // namespace mlcluster
