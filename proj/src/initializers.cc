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

#include "mlcluster/initializers.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace mlcluster {
namespace {

// All subsets of `full` that contain `i`, in increasing mask order.
std::vector<Mask> SubsetsContaining(Mask full, int i) {
  const Mask rest = full & ~Bit(i);
  std::vector<Mask> out;
  out.reserve(size_t{1} << PopCount(rest));
  Mask sub = 0;
  do {
    out.push_back(sub | Bit(i));
    sub = (sub - rest) & rest;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

Distribution Proportional(const Score& score, int i,
                          const std::vector<Mask>& support) {
  Distribution d;
  d.reserve(support.size());
  double total = 0.0;
  for (Mask a : support) {
    const double w = score.Value(a);
    if (w < 0.0) {
      throw ValidationError("score-proportional initializer needs w >= 0, "
                            "but a subset containing point " +
                            std::to_string(i) + " scores " +
                            std::to_string(w));
    }
    total += w;
    d.emplace_back(a, w);
  }
  if (!(total > 0.0)) {
    throw ValidationError("score-proportional initializer: subsets "
                          "containing point " + std::to_string(i) +
                          " have zero total score");
  }
  for (auto& e : d) e.second /= total;
  return d;
}

Distribution Even(const std::vector<Mask>& support) {
  Distribution d;
  d.reserve(support.size());
  const double q = 1.0 / static_cast<double>(support.size());
  for (Mask a : support) d.emplace_back(a, q);
  return d;
}

}  // namespace

FuzzyCover InitUniform(int n) {
  if (n < 2) {
    throw ValidationError("uniform initializer needs n >= 2, got " +
                          std::to_string(n));
  }
  RequireDense(n, "InitUniform");
  FuzzyCover cover(n);
  const double q = std::ldexp(1.0, 1 - n);
  for (int i = 0; i < n; ++i) {
    Distribution d;
    for (Mask a : SubsetsContaining(FullMask(n), i)) d.emplace_back(a, q);
    cover.SetDistribution(i, std::move(d));
  }
  return cover;
}

FuzzyCover InitScoreProportional(const Score& score) {
  const int n = score.size();
  RequireDense(n, "InitScoreProportional");
  const Mask full = FullMask(n);
  for (Mask a = 1; a <= full; ++a) {
    if (score.Value(a) < 0.0) {
      throw ValidationError("score-proportional initializer needs w >= 0; "
                            "subset mask " + std::to_string(a) + " scores " +
                            std::to_string(score.Value(a)));
    }
  }
  FuzzyCover cover(n);
  for (int i = 0; i < n; ++i) {
    cover.SetDistribution(i,
                          Proportional(score, i, SubsetsContaining(full, i)));
  }
  return cover;
}

std::vector<Mask> RestrictedSupport(std::span<const Mask> maximal, int i) {
  std::vector<Mask> out;
  for (Mask a : maximal) {
    if (!Contains(a, i)) continue;
    const std::vector<Mask> subs = SubsetsContaining(a, i);
    out.insert(out.end(), subs.begin(), subs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FuzzyCover InitRestricted(const Score& score, std::span<const Mask> maximal,
                          RestrictedMode mode) {
  const int n = score.size();
  const Mask full = FullMask(n);
  Mask covered = 0;
  double budget = 0.0;
  for (Mask a : maximal) {
    if (a == 0 || (a & ~full) != 0) {
      throw ValidationError("restriction subset mask " + std::to_string(a) +
                            " is empty or out of range");
    }
    covered |= a;
    budget += std::ldexp(1.0, PopCount(a));
  }
  if (covered != full) {
    throw ValidationError("restriction collection does not cover point " +
                          std::to_string(LowestPoint(full & ~covered)));
  }
  if (budget > std::ldexp(1.0, kMaxDenseN)) {
    throw CapacityError("restriction collection spans more than 2^" +
                        std::to_string(kMaxDenseN) + " subsets");
  }
  FuzzyCover cover(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<Mask> support = RestrictedSupport(maximal, i);
    cover.SetDistribution(i, mode == RestrictedMode::kUniform
                                 ? Even(support)
                                 : Proportional(score, i, support));
  }
  return cover;
}

}  // namespace mlcluster
