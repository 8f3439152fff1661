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

#include "mlcluster/score.h"

#include <string>

namespace mlcluster {
namespace {

// Sum over non-empty subsets B of `q` of (prod_{j in B} q_j) mu(B | extra).
// Includes the empty B (product 1) when `extra` is non-empty.
double DenseSubsetSum(const ScoreFunction& f, std::span<const Member> q,
                      Mask extra) {
  std::vector<Member> pos;
  pos.reserve(q.size());
  for (const Member& m : q) {
    if (m.mass != 0.0) pos.push_back(m);
  }
  const size_t count = size_t{1} << pos.size();
  std::vector<double> prod(count);
  std::vector<Mask> global(count);
  prod[0] = 1.0;
  global[0] = 0;
  const std::vector<double>& mu = f.mobius_table();
  double total = extra != 0 ? mu[extra] : 0.0;
  for (size_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    const size_t prev = s & (s - 1);
    prod[s] = prod[prev] * pos[low].mass;
    global[s] = global[prev] | Bit(pos[low].point);
    total += prod[s] * mu[global[s] | extra];
  }
  return total;
}

}  // namespace

int Score::size() const {
  return std::visit([](const auto& s) { return s.size(); }, rep_);
}

void Score::CheckMask(Mask a) const {
  if (a & ~FullMask(size())) {
    throw ValidationError("subset mask " + std::to_string(a) +
                          " out of range for n = " + std::to_string(size()));
  }
}

double Score::Value(Mask a) const {
  CheckMask(a);
  return std::visit([a](const auto& s) { return s.value(a); }, rep_);
}

double Score::Mobius(Mask a) const {
  CheckMask(a);
  return std::visit([a](const auto& s) { return s.mobius(a); }, rep_);
}

double Score::Mle(std::span<const Member> q) const {
  if (const auto* f = dense()) return DenseSubsetSum(*f, q, 0);
  const QuadraticScore& qs = *quadratic();
  double total = 0.0;
  for (size_t x = 0; x < q.size(); ++x) {
    if (q[x].mass == 0.0) continue;
    double inner = qs.singleton(q[x].point);
    for (size_t y = x + 1; y < q.size(); ++y) {
      inner += q[y].mass * qs.pair(q[x].point, q[y].point);
    }
    total += q[x].mass * inner;
  }
  return total;
}

double Score::Slope(int i, std::span<const Member> others) const {
  if (const auto* f = dense()) return DenseSubsetSum(*f, others, Bit(i));
  const QuadraticScore& qs = *quadratic();
  double total = qs.singleton(i);
  for (const Member& m : others) total += m.mass * qs.pair(i, m.point);
  return total;
}

std::vector<double> Score::Slopes(std::span<const Member> q) const {
  std::vector<double> out(q.size());
  if (const auto* qs = quadratic()) {
    for (size_t x = 0; x < q.size(); ++x) {
      out[x] += qs->singleton(q[x].point);
      for (size_t y = x + 1; y < q.size(); ++y) {
        const double p = qs->pair(q[x].point, q[y].point);
        out[x] += q[y].mass * p;
        out[y] += q[x].mass * p;
      }
    }
    return out;
  }
  std::vector<Member> others;
  others.reserve(q.size());
  for (size_t x = 0; x < q.size(); ++x) {
    others.clear();
    for (size_t y = 0; y < q.size(); ++y) {
      if (y != x) others.push_back(q[y]);
    }
    out[x] = Slope(q[x].point, others);
  }
  return out;
}

double MleEvaluate(const Score& score, std::span<const double> q) {
  if (static_cast<int>(q.size()) != score.size()) {
    throw ValidationError("expected " + std::to_string(score.size()) +
                          " coordinates, got " + std::to_string(q.size()));
  }
  std::vector<Member> members;
  for (int i = 0; i < score.size(); ++i) {
    if (!(q[i] >= 0.0 && q[i] <= 1.0)) {
      throw ValidationError("coordinate " + std::to_string(i) +
                            " is outside [0, 1]");
    }
    if (q[i] != 0.0) members.push_back({i, q[i]});
  }
  return score.Mle(members);
}

}  // namespace mlcluster
