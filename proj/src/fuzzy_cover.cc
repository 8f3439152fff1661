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

#include "mlcluster/fuzzy_cover.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace mlcluster {
namespace {

std::string MaskText(Mask a) {
  std::string out = "{";
  for (int p : Members(a)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(p);
  }
  return out + "}";
}

bool SupportExact(const FuzzyCover& cover, std::vector<Mask>* partial) {
  bool ok = true;
  for (const Column& c : cover.Columns()) {
    if (static_cast<int>(c.members.size()) != PopCount(c.subset)) {
      ok = false;
      if (partial != nullptr) partial->push_back(c.subset);
    }
  }
  return ok;
}

}  // namespace

FuzzyCover::FuzzyCover(int n) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityError("cover size " + std::to_string(n) +
                        " outside 1.." + std::to_string(kMaxPoints));
  }
  points_.resize(n);
}

double FuzzyCover::mass(int i, Mask a) const {
  const Distribution& d = points_.at(i);
  auto it = std::lower_bound(
      d.begin(), d.end(), a,
      [](const std::pair<Mask, double>& e, Mask m) { return e.first < m; });
  return it != d.end() && it->first == a ? it->second : 0.0;
}

void FuzzyCover::SetDistribution(int i, Distribution d) {
  if (i < 0 || i >= size()) {
    throw ValidationError("point index " + std::to_string(i) +
                          " out of range");
  }
  const Mask full = FullMask(size());
  for (const auto& [a, q] : d) {
    if (a == 0 || (a & ~full) != 0) {
      throw ValidationError("point " + std::to_string(i) +
                            ": subset mask " + std::to_string(a) +
                            " is empty or out of range");
    }
    if (!std::isfinite(q)) {
      throw ValidationError("point " + std::to_string(i) +
                            ": non-finite mass");
    }
  }
  std::sort(d.begin(), d.end());
  Distribution merged;
  merged.reserve(d.size());
  for (const auto& e : d) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0.0; });
  points_[i] = std::move(merged);
}

void FuzzyCover::Prune(double tol) {
  for (Distribution& d : points_) {
    std::erase_if(d, [tol](const auto& e) { return e.second < tol; });
    double total = 0.0;
    for (const auto& e : d) total += e.second;
    if (total > 0.0) {
      for (auto& e : d) e.second /= total;
    }
  }
}

bool FuzzyCover::IsVertex(int i, double tol) const {
  const Distribution& d = points_.at(i);
  return d.size() == 1 && std::abs(d.front().second - 1.0) <= tol;
}

std::vector<Column> FuzzyCover::Columns() const {
  std::vector<std::tuple<Mask, int, double>> triples;
  for (int i = 0; i < size(); ++i) {
    for (const auto& [a, q] : points_[i]) {
      if (q > 0.0 && Contains(a, i)) triples.emplace_back(a, i, q);
    }
  }
  std::sort(triples.begin(), triples.end());
  std::vector<Column> out;
  for (const auto& [a, i, q] : triples) {
    if (out.empty() || out.back().subset != a) out.push_back({a, {}});
    out.back().members.push_back({i, q});
  }
  return out;
}

Partition::Partition(int n, std::vector<Mask> blocks) : n_(n) {
  if (n < 1 || n > kMaxPoints) {
    throw ValidationError("partition size " + std::to_string(n) +
                          " outside 1.." + std::to_string(kMaxPoints));
  }
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw ValidationError("partition has an empty block");
    if (b & ~FullMask(n)) {
      throw ValidationError("block " + MaskText(b) + " has points >= " +
                            std::to_string(n));
    }
    if (b & seen) {
      throw ValidationError("block " + MaskText(b) + " overlaps another block");
    }
    seen |= b;
  }
  if (seen != FullMask(n)) {
    throw ValidationError("blocks do not cover point " +
                          std::to_string(LowestPoint(FullMask(n) & ~seen)));
  }
  std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) {
    return LowestPoint(a) < LowestPoint(b);
  });
  blocks_ = std::move(blocks);
}

Partition Partition::Finest(int n) {
  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(Bit(i));
  return Partition(n, std::move(blocks));
}

Partition Partition::Coarsest(int n) { return Partition(n, {FullMask(n)}); }

Mask Partition::BlockOf(int i) const {
  for (Mask b : blocks_) {
    if (Contains(b, i)) return b;
  }
  throw ValidationError("point " + std::to_string(i) + " not in partition");
}

CoverDiagnostics Validate(const FuzzyCover& cover) {
  CoverDiagnostics diag;
  for (int i = 0; i < cover.size(); ++i) {
    double total = 0.0;
    for (const auto& [a, q] : cover.distribution(i)) {
      total += q;
      if (!Contains(a, i)) diag.locality_violations.emplace_back(i, a);
      if (q < 0.0) diag.negative_masses.emplace_back(i, a);
    }
    diag.simplex_sums.push_back(total);
    if (std::abs(total - 1.0) > kEqualityTol) {
      diag.bad_simplex_points.push_back(i);
    }
  }
  diag.valid = diag.bad_simplex_points.empty() &&
               diag.locality_violations.empty() &&
               diag.negative_masses.empty();
  diag.support_exact = SupportExact(cover, &diag.partial_support);
  FuzzyCover pruned = cover;
  pruned.Prune();
  diag.support_exact_pruned = SupportExact(pruned, nullptr);
  return diag;
}

void RequireValid(const FuzzyCover& cover) {
  const CoverDiagnostics diag = Validate(cover);
  if (!diag.negative_masses.empty()) {
    const auto& [i, a] = diag.negative_masses.front();
    throw ValidationError("point " + std::to_string(i) +
                          " has negative mass on " + MaskText(a));
  }
  if (!diag.locality_violations.empty()) {
    const auto& [i, a] = diag.locality_violations.front();
    throw ValidationError("point " + std::to_string(i) + " has mass on " +
                          MaskText(a) + " which does not contain it");
  }
  if (!diag.bad_simplex_points.empty()) {
    const int i = diag.bad_simplex_points.front();
    throw ValidationError("point " + std::to_string(i) +
                          " memberships sum to " +
                          std::to_string(diag.simplex_sums[i]) + ", not 1");
  }
}

bool SupportCondition(const FuzzyCover& cover) {
  return SupportExact(cover, nullptr);
}

FuzzyCover EmbedPartition(const Partition& p) {
  FuzzyCover cover(p.size());
  for (Mask b : p.blocks()) {
    for (int i : Members(b)) cover.SetVertex(i, b);
  }
  return cover;
}

Partition ExtractPartition(const FuzzyCover& cover) {
  const int n = cover.size();
  std::vector<Mask> owner(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!cover.IsVertex(i)) {
      throw ValidationError("point " + std::to_string(i) +
                            " is not at a vertex of its simplex");
    }
    owner[i] = cover.distribution(i).front().first;
    if (!Contains(owner[i], i)) {
      throw ValidationError("point " + std::to_string(i) +
                            " sits on a subset that excludes it");
    }
  }
  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) {
    for (int j : Members(owner[i])) {
      if (owner[j] != owner[i]) {
        throw ValidationError("points " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " disagree on their block");
      }
    }
    if (LowestPoint(owner[i]) == i) blocks.push_back(owner[i]);
  }
  return Partition(n, std::move(blocks));
}

}  // namespace mlcluster
