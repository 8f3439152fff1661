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

#include "mlcluster/solve.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>

#include "mlcluster/cover_eval.h"

namespace mlcluster {
namespace {

void CheckSizes(const Score& score, int n) {
  if (score.size() != n) {
    throw ValidationError("score has " + std::to_string(score.size()) +
                          " points but the structure has " +
                          std::to_string(n));
  }
}

// Columns whose subset contains point i, including those where i itself has
// no mass. Sorted by mask.
std::vector<Column> ColumnsContaining(const FuzzyCover& q, int i) {
  std::vector<std::tuple<Mask, int, double>> triples;
  for (int j = 0; j < q.size(); ++j) {
    for (const auto& [a, m] : q.distribution(j)) {
      if (m > 0.0 && Contains(a, i) && Contains(a, j)) {
        triples.emplace_back(a, j, m);
      }
    }
  }
  std::sort(triples.begin(), triples.end());
  std::vector<Column> out;
  for (const auto& [a, j, m] : triples) {
    if (out.empty() || out.back().subset != a) out.push_back({a, {}});
    out.back().members.push_back({j, m});
  }
  return out;
}

std::vector<Member> Without(std::span<const Member> members, int i) {
  std::vector<Member> out;
  out.reserve(members.size());
  for (const Member& m : members) {
    if (m.point != i) out.push_back(m);
  }
  return out;
}

double MassOf(std::span<const Member> members, int i) {
  for (const Member& m : members) {
    if (m.point == i) return m.mass;
  }
  return 0.0;
}

class ScoreCache {
 public:
  explicit ScoreCache(const Score& score) : score_(score) {}
  double operator()(Mask a) {
    auto [it, inserted] = cache_.try_emplace(a, 0.0);
    if (inserted) it->second = score_.Value(a);
    return it->second;
  }

 private:
  const Score& score_;
  std::unordered_map<Mask, double> cache_;
};

std::string MaskText(Mask a) {
  std::string out = "{";
  for (int p : Members(a)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(p);
  }
  return out + "}";
}

}  // namespace

void SolverOptions::Check(int n) const {
  if (!(tolerance > 0.0)) {
    throw ValidationError("solver tolerance must be positive");
  }
  if (max_iterations != 0 && max_iterations < n) {
    throw ValidationError("max_iterations must be at least n = " +
                          std::to_string(n));
  }
}

RoundUpResult RoundUp(const Score& score, const FuzzyCover& cover,
                      Direction direction) {
  const int n = cover.size();
  CheckSizes(score, n);
  RequireValid(cover);
  RoundUpResult result{cover, {}};
  FuzzyCover& q = result.cover;
  double total = internal::RawGlobalScore(score, q);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    if (q.IsVertex(i)) continue;
    ++t;
    Mask best_mask = Bit(i);
    double best = score.Mobius(Bit(i));
    double current = 0.0;
    for (const Column& c : ColumnsContaining(q, i)) {
      const double v = score.Slope(i, Without(c.members, i));
      current += MassOf(c.members, i) * v;
      if (c.subset == Bit(i)) continue;
      const bool better =
          direction == Direction::kMax ? v > best : v < best;
      if (better) {
        best = v;
        best_mask = c.subset;
      }
    }
    q.SetVertex(i, best_mask);
    total += best - current;
    TraceRecord rec;
    rec.kind = TraceRecord::Kind::kRoundUp;
    rec.iteration = t;
    rec.point = i;
    rec.subset = best_mask;
    rec.value = best;
    rec.global_score = total;
    result.trace.records.push_back(std::move(rec));
  }
  return result;
}

LocalSearchResult LocalSearch(const Score& score, const FuzzyCover& cover,
                              const SolverOptions& options) {
  const int n = cover.size();
  CheckSizes(score, n);
  options.Check(n);
  RequireValid(cover);
  {
    const CoverDiagnostics diag = Validate(cover);
    if (!diag.support_exact) {
      throw ValidationError(
          "local search input fails the support condition on subset " +
          MaskText(diag.partial_support.front()));
    }
  }
  const double tol = options.tolerance;
  const int limit = options.IterationLimit(n);
  ScoreCache w(score);
  FuzzyCover q = cover;
  SearchTrace trace;
  int t = 0;
  int selections = 0;

  // Loop 1: lock the best fractional block until none is left.
  while (true) {
    Mask chosen = 0;
    double chosen_sum = -std::numeric_limits<double>::infinity();
    std::vector<CandidateScore> candidates;
    for (const Column& c : q.Columns()) {
      double mass = 0.0;
      for (const Member& m : c.members) mass += m.mass;
      const int size = PopCount(c.subset);
      if (!(mass > tol && mass < size - tol)) continue;
      if (static_cast<int>(c.members.size()) != size) {
        throw InvariantError("support condition lost on subset " +
                             MaskText(c.subset));
      }
      double sum = 0.0;
      for (double s : score.Slopes(c.members)) sum += s;
      if (options.record_trace) candidates.push_back({c.subset, sum});
      if (chosen == 0 || sum > chosen_sum) {
        chosen = c.subset;
        chosen_sum = sum;
      }
    }
    if (chosen == 0) break;
    if (++t > limit) {
      throw InvariantError("local search exceeded " + std::to_string(limit) +
                           " iterations");
    }
    ++selections;

    for (int i : Members(chosen)) q.SetVertex(i, chosen);
    for (int j = 0; j < n; ++j) {
      if (Contains(chosen, j)) continue;
      double freed = 0.0;
      double before = 0.0;
      Distribution keep;
      for (const auto& [a, m] : q.distribution(j)) {
        before += m;
        if (a & chosen) {
          freed += m;
        } else {
          keep.emplace_back(a, m);
        }
      }
      if (freed == 0.0) continue;
      double denom = 0.0;
      for (const auto& e : keep) denom += std::max(w(e.first), 0.0);
      if (denom > 0.0) {
        for (auto& e : keep) {
          e.second += freed * std::max(w(e.first), 0.0) / denom;
        }
      } else {
        keep.emplace_back(Bit(j), freed);
      }
      double after = 0.0;
      for (const auto& e : keep) after += e.second;
      if (std::abs(after - before) > kEqualityTol) {
        throw InvariantError("redistribution changed the mass of point " +
                             std::to_string(j));
      }
      q.SetDistribution(j, std::move(keep));
    }

    TraceRecord rec;
    rec.kind = TraceRecord::Kind::kSelect;
    rec.iteration = t;
    rec.subset = chosen;
    rec.value = chosen_sum;
    rec.candidates = std::move(candidates);
    rec.global_score = internal::RawGlobalScore(score, q);
    trace.records.push_back(std::move(rec));
  }

  // Every point now sits on a fully supported block; snap away round-off.
  std::vector<Mask> owner(n, 0);
  for (int i = 0; i < n; ++i) {
    const Distribution& d = q.distribution(i);
    auto top = std::max_element(
        d.begin(), d.end(),
        [](const auto& x, const auto& y) { return x.second < y.second; });
    owner[i] = top->first;
    q.SetVertex(i, owner[i]);
  }
  try {
    ExtractPartition(q);
  } catch (const ValidationError& e) {
    throw InvariantError(std::string("loop 1 did not end at a partition: ") +
                         e.what());
  }

  // Loop 2: extract the outlier with the largest gain while one exists.
  int extractions = 0;
  while (true) {
    int best_point = -1;
    double best_gain = tol;
    for (int i = 0; i < n; ++i) {
      const Mask a = owner[i];
      if (PopCount(a) < 2) continue;
      const double gain = w(Bit(i)) + w(a & ~Bit(i)) - w(a);
      if (gain > best_gain) {
        best_gain = gain;
        best_point = i;
      }
    }
    if (best_point < 0) break;
    if (++t > limit) {
      throw InvariantError("local search exceeded " + std::to_string(limit) +
                           " iterations");
    }
    ++extractions;
    const Mask left = owner[best_point];
    const Mask rest = left & ~Bit(best_point);
    for (int j : Members(rest)) owner[j] = rest;
    owner[best_point] = Bit(best_point);

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      if (LowestPoint(owner[i]) == i) total += w(owner[i]);
    }
    TraceRecord rec;
    rec.kind = TraceRecord::Kind::kExtract;
    rec.iteration = t;
    rec.point = best_point;
    rec.subset = left;
    rec.value = best_gain;
    rec.global_score = total;
    trace.records.push_back(std::move(rec));
  }

  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) {
    if (LowestPoint(owner[i]) == i) blocks.push_back(owner[i]);
  }
  Partition partition(n, std::move(blocks));
  const double total = PartitionScore(score, partition);
  return LocalSearchResult{std::move(partition), total, std::move(trace),
                           selections, extractions};
}

bool IsLocalMaximizer(const Score& score, const FuzzyCover& cover,
                      double tolerance) {
  const int n = cover.size();
  CheckSizes(score, n);
  RequireValid(cover);
  std::vector<double> best(n);
  std::vector<double> current(n, 0.0);
  for (int i = 0; i < n; ++i) best[i] = score.Mobius(Bit(i));
  for (const Column& c : cover.Columns()) {
    for (int i : Members(c.subset)) {
      const double v = score.Slope(i, Without(c.members, i));
      best[i] = std::max(best[i], v);
      current[i] += MassOf(c.members, i) * v;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (current[i] < best[i] - tolerance) return false;
  }
  return true;
}

std::vector<std::pair<int, Mask>> OutlierViolations(const Score& score,
                                                    const Partition& p,
                                                    double tolerance) {
  CheckSizes(score, p.size());
  std::vector<std::pair<int, Mask>> out;
  for (Mask a : p.blocks()) {
    if (PopCount(a) < 2) continue;
    const double whole = score.Value(a);
    for (int i : Members(a)) {
      if (score.Value(Bit(i)) + score.Value(a & ~Bit(i)) - whole > tolerance) {
        out.emplace_back(i, a);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double PartitionScore(const Score& score, const Partition& p) {
  CheckSizes(score, p.size());
  double total = 0.0;
  for (Mask a : p.blocks()) total += score.Value(a);
  return total;
}

}  // namespace mlcluster
