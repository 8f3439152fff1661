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

#include "mlcluster/lattice.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "mlcluster/random.h"

namespace mlcluster {
namespace {

void RequireEnumerable(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " outside 1.." + std::to_string(limit));
  }
}

// completions[k][b]: restricted-growth tails of length k after b blocks.
std::vector<std::vector<std::uint64_t>> CompletionTable(int n) {
  std::vector<std::vector<std::uint64_t>> c(
      n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (int b = 0; b <= n + 1; ++b) c[0][b] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int b = 0; b + 1 <= n + 1; ++b) {
      c[k][b] = b * c[k - 1][b] + c[k - 1][b + 1];
    }
  }
  return c;
}

// Sign and factorial product with n taken as the number of blocks of the
// finer partition (the atoms of the interval).
std::int64_t ClosedFormMobius(std::span<const int> parts_per_block) {
  int atoms = 0;
  std::map<int, int> multiplicity;  // m_k
  for (int k : parts_per_block) {
    atoms += k;
    ++multiplicity[k];
  }
  int blocks = static_cast<int>(parts_per_block.size());  // sum_k m_k
  std::int64_t value = ((blocks - atoms) % 2 == 0) ? 1 : -1;
  for (int k = 2; k < atoms; ++k) {
    auto it = multiplicity.find(k + 1);
    if (it == multiplicity.end()) continue;
    std::int64_t factorial = 1;
    for (int f = 2; f <= k; ++f) factorial *= f;
    for (int e = 0; e < it->second; ++e) value *= factorial;
  }
  return value;
}

// Calls f(rgs of q, parts per block of p) for every refinement q of p.
void ForEachRefinement(
    const Partition& p,
    const std::function<void(const std::vector<int>&, std::span<const int>)>&
        f) {
  const int n = p.size();
  std::vector<std::vector<int>> members;
  for (Mask b : p.blocks()) members.push_back(Members(b));
  const size_t nb = members.size();
  std::vector<int> label(n, 0);
  std::vector<int> parts(nb, 0);
  std::vector<int> rgs(n);
  std::vector<int> relabel(static_cast<size_t>(n) * n, -1);

  std::function<void(size_t, size_t, int)> rec = [&](size_t b, size_t idx,
                                                     int used) {
    if (b == nb) {
      std::fill(relabel.begin(), relabel.end(), -1);
      int next = 0;
      for (int i = 0; i < n; ++i) {
        int& r = relabel[label[i]];
        if (r < 0) r = next++;
        rgs[i] = r;
      }
      f(rgs, parts);
      return;
    }
    if (idx == members[b].size()) {
      parts[b] = used;
      rec(b + 1, 0, 0);
      return;
    }
    for (int v = 0; v <= used; ++v) {
      label[members[b][idx]] = static_cast<int>(b) * n + v;
      rec(b, idx + 1, std::max(used, v + 1));
    }
  };
  rec(0, 0, 0);
}

std::vector<Mask> BlocksOf(const PartitionCode& code) {
  std::vector<Mask> blocks;
  for (size_t i = 0; i < code.rgs.size(); ++i) {
    const size_t b = static_cast<size_t>(code.rgs[i]);
    if (b >= blocks.size()) blocks.resize(b + 1, 0);
    blocks[b] |= Bit(static_cast<int>(i));
  }
  return blocks;
}

void CheckCode(const PartitionCode& code) {
  int max_seen = -1;
  for (size_t i = 0; i < code.rgs.size(); ++i) {
    const int r = code.rgs[i];
    if (r < 0 || r > max_seen + 1) {
      throw ValidationError("invalid restricted-growth string at position " +
                            std::to_string(i));
    }
    max_seen = std::max(max_seen, r);
  }
}

}  // namespace

std::uint64_t BellNumber(int n) {
  if (n < 0 || n > 25) throw CapacityError("BellNumber: n out of range");
  return CompletionTable(std::max(n, 0))[n][0];
}

std::vector<PartitionCode> EnumeratePartitions(int n) {
  RequireEnumerable(n, kMaxEnumerateN, "EnumeratePartitions");
  std::vector<PartitionCode> out;
  out.reserve(BellNumber(n));
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      out.push_back({rgs});
      return;
    }
    for (int v = 0; v <= used; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(used, v + 1));
    }
  };
  rec(1, 1);
  return out;
}

Partition ToPartition(const PartitionCode& code) {
  CheckCode(code);
  return Partition(static_cast<int>(code.rgs.size()), BlocksOf(code));
}

PartitionCode ToCode(const Partition& p) {
  // Blocks are ordered by lowest point, which is first-occurrence order.
  PartitionCode code{std::vector<int>(p.size())};
  for (size_t b = 0; b < p.blocks().size(); ++b) {
    for (int i : Members(p.blocks()[b])) code.rgs[i] = static_cast<int>(b);
  }
  return code;
}

std::size_t PartitionRank(const PartitionCode& code) {
  CheckCode(code);
  const int n = static_cast<int>(code.rgs.size());
  const auto completions = CompletionTable(n);
  std::size_t rank = 0;
  int blocks = n > 0 ? 1 : 0;
  for (int i = 1; i < n; ++i) {
    rank += static_cast<std::size_t>(code.rgs[i]) *
            completions[n - i - 1][blocks];
    blocks = std::max(blocks, code.rgs[i] + 1);
  }
  return rank;
}

bool Coarsens(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw ValidationError("partitions of different sizes");
  }
  for (Mask b : q.blocks()) {
    const Mask host = p.BlockOf(LowestPoint(b));
    if ((b & ~host) != 0) return false;
  }
  return true;
}

std::int64_t PartitionMobius(const Partition& q, const Partition& p) {
  if (q.size() != p.size()) {
    throw ValidationError("partitions of different sizes");
  }
  if (p.size() > kMaxDenseN) {
    throw CapacityError("PartitionMobius: n > " + std::to_string(kMaxDenseN));
  }
  if (!Coarsens(p, q)) return 0;
  std::vector<int> parts;
  for (Mask a : p.blocks()) {
    int k = 0;
    for (Mask b : q.blocks()) {
      if ((b & a) != 0) ++k;
    }
    parts.push_back(k);
  }
  return ClosedFormMobius(parts);
}

std::int64_t PartitionMobiusByRecursion(const Partition& q,
                                        const Partition& p) {
  if (q.size() != p.size()) {
    throw ValidationError("partitions of different sizes");
  }
  RequireEnumerable(p.size(), kMaxRecursionN, "PartitionMobiusByRecursion");
  if (!Coarsens(p, q)) return 0;
  // Interval [q, p], coarsest first.
  std::vector<Partition> interval;
  for (const Partition& z : Refinements(p)) {
    if (Coarsens(z, q)) interval.push_back(z);
  }
  std::stable_sort(interval.begin(), interval.end(),
                   [](const Partition& a, const Partition& b) {
                     return a.blocks().size() < b.blocks().size();
                   });
  std::vector<std::int64_t> mu(interval.size(), 0);
  for (size_t y = 0; y < interval.size(); ++y) {
    if (interval[y] == p) {
      mu[y] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (size_t z = 0; z < y; ++z) {
      if (Coarsens(interval[z], interval[y])) sum += mu[z];
    }
    mu[y] = -sum;
    if (interval[y] == q) return mu[y];
  }
  return mu.front();  // q == p
}

std::vector<Partition> Refinements(const Partition& p) {
  std::vector<Partition> out;
  ForEachRefinement(p, [&](const std::vector<int>& rgs, std::span<const int>) {
    out.push_back(ToPartition(PartitionCode{rgs}));
  });
  return out;
}

PartitionFunction::PartitionFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  RequireEnumerable(n, kMaxEnumerateN, "PartitionFunction");
  if (values_.size() != BellNumber(n)) {
    throw ValidationError("partition function on n = " + std::to_string(n) +
                          " needs " + std::to_string(BellNumber(n)) +
                          " values, got " + std::to_string(values_.size()));
  }
}

double PartitionFunction::at(const PartitionCode& code) const {
  if (static_cast<int>(code.rgs.size()) != n_) {
    throw ValidationError("partition size does not match function");
  }
  return values_[PartitionRank(code)];
}

PartitionFunction SeparableFrom(const Score& v) {
  const int n = v.size();
  RequireEnumerable(n, kMaxEnumerateN, "SeparableFrom");
  std::vector<double> values;
  for (const PartitionCode& code : EnumeratePartitions(n)) {
    double h = 0.0;
    for (Mask b : BlocksOf(code)) h += v.Value(b);
    values.push_back(h);
  }
  return PartitionFunction(n, std::move(values));
}

namespace {

// Both directions sum over refinements; only the kernel differs.
PartitionFunction SumOverRefinements(const PartitionFunction& f,
                                     bool with_mobius) {
  const int n = f.size();
  RequireEnumerable(n, kMaxInversionN, "partition-lattice inversion");
  const auto completions = CompletionTable(n);
  std::vector<double> out;
  for (const PartitionCode& code : EnumeratePartitions(n)) {
    double total = 0.0;
    ForEachRefinement(
        ToPartition(code),
        [&](const std::vector<int>& rgs, std::span<const int> parts) {
          std::size_t rank = 0;
          int blocks = 1;
          for (int i = 1; i < n; ++i) {
            rank += static_cast<std::size_t>(rgs[i]) *
                    completions[n - i - 1][blocks];
            blocks = std::max(blocks, rgs[i] + 1);
          }
          const double value = f.values()[rank];
          total += with_mobius
                       ? static_cast<double>(ClosedFormMobius(parts)) * value
                       : value;
        });
    out.push_back(total);
  }
  return PartitionFunction(n, std::move(out));
}

}  // namespace

PartitionFunction MobiusInversion(const PartitionFunction& h) {
  return SumOverRefinements(h, true);
}

PartitionFunction ZetaInversion(const PartitionFunction& mobius) {
  return SumOverRefinements(mobius, false);
}

bool IsModular(const Partition& p) {
  int big = 0;
  for (Mask b : p.blocks()) {
    if (PopCount(b) > 1) ++big;
  }
  return big <= 1;
}

ScoreFunction SeparatingVariant(const ScoreFunction& v,
                                std::span<const double> delta) {
  const int n = v.size();
  if (static_cast<int>(delta.size()) != n) {
    throw ValidationError("delta needs " + std::to_string(n) + " entries");
  }
  double sum = 0.0;
  double scale = 0.0;
  for (double d : delta) {
    sum += d;
    scale = std::max(scale, std::abs(d));
  }
  if (scale <= kZeroMass) throw ValidationError("delta must not vanish");
  if (std::abs(sum) > kEqualityTol) {
    throw ValidationError("delta must sum to 0, sums to " +
                          std::to_string(sum));
  }
  std::vector<double> values = v.values();
  for (Mask a = 1; a < values.size(); ++a) {
    for (int i : Members(a)) values[a] += delta[i];
  }
  return ScoreFunction::FromValues(n, std::move(values));
}

LatticeCheckReport CheckLattice(int n, const LatticeCheckOptions& options) {
  RequireEnumerable(n, kMaxInversionN, "CheckLattice");
  const double tol = options.tolerance;
  LatticeCheckReport report;
  report.n = n;
  const std::vector<PartitionCode> codes = EnumeratePartitions(n);
  report.partitions = codes.size();
  report.modular_expected = (1 << n) - n;
  std::vector<Partition> parts;
  for (const PartitionCode& c : codes) parts.push_back(ToPartition(c));
  std::vector<bool> zero_everywhere(parts.size(), true);
  for (const Partition& p : parts) {
    if (IsModular(p)) {
      ++report.modular;
    } else {
      ++report.nonmodular_total;
    }
  }
  if (report.modular != report.modular_expected) {
    report.failures.push_back("modular count " +
                              std::to_string(report.modular) + " != 2^n - n");
  }

  const Partition finest = Partition::Finest(n);
  const Partition top = Partition::Coarsest(n);
  Rng rng(options.seed);
  for (int s = 0; s < options.random_functions; ++s) {
    std::vector<double> values(size_t{1} << n, 0.0);
    for (size_t a = 1; a < values.size(); ++a) values[a] = rng.Uniform(-1, 1);
    const ScoreFunction v = ScoreFunction::FromValues(n, values);
    const PartitionFunction h = SeparableFrom(v);
    const PartitionFunction mu = MobiusInversion(h);
    for (size_t r = 0; r < parts.size(); ++r) {
      const Partition& p = parts[r];
      const double got = mu.values()[r];
      if (!IsModular(p)) {
        if (std::abs(got) > tol) zero_everywhere[r] = false;
        continue;
      }
      double want = 0.0;
      if (p == finest) {
        for (int i = 0; i < n; ++i) want += v.value(Bit(i));
      } else if (p == top) {
        want = v.mobius(FullMask(n));
      } else {
        for (Mask b : p.blocks()) {
          if (PopCount(b) > 1) want = v.mobius(b);
        }
      }
      if (std::abs(got - want) > tol) report.modular_values_match = false;
    }
    const PartitionFunction back = ZetaInversion(mu);
    for (size_t r = 0; r < parts.size(); ++r) {
      if (std::abs(back.values()[r] - h.values()[r]) > tol) {
        report.zeta_roundtrip = false;
      }
    }
    if (n >= 2) {
      std::vector<double> delta(n);
      double mean = 0.0;
      for (double& d : delta) {
        d = rng.Uniform(-1, 1);
        mean += d / n;
      }
      for (double& d : delta) d -= mean;
      const ScoreFunction w = SeparatingVariant(v, delta);
      const PartitionFunction hw = SeparableFrom(w);
      bool differs = false;
      for (size_t a = 1; a < values.size(); ++a) {
        if (std::abs(w.values()[a] - v.values()[a]) > tol) differs = true;
      }
      bool same_h = true;
      for (size_t r = 0; r < parts.size(); ++r) {
        if (std::abs(hw.values()[r] - h.values()[r]) > tol) same_h = false;
      }
      if (!differs || !same_h) report.separation = false;
    }
  }
  for (size_t r = 0; r < parts.size(); ++r) {
    if (!IsModular(parts[r]) && zero_everywhere[r]) ++report.nonmodular_zero;
  }
  if (report.nonmodular_zero != report.nonmodular_total) {
    report.failures.push_back("Mobius inversion of a separable function is "
                              "non-zero on a non-modular partition");
  }
  if (!report.modular_values_match) {
    report.failures.push_back("modular Mobius values do not match mu^v");
  }
  if (!report.zeta_roundtrip) {
    report.failures.push_back("partition-lattice zeta roundtrip failed");
  }
  if (!report.separation) {
    report.failures.push_back("separating variant changed h or equals v");
  }

  report.mobius_bottom_top = PartitionMobius(finest, top);
  if (n <= 5) {
    for (const Partition& p : parts) {
      for (const Partition& q : parts) {
        const std::int64_t closed = PartitionMobius(q, p);
        if (!Coarsens(p, q)) {
          if (closed != 0) {
            report.failures.push_back("closed form non-zero off the order");
          }
          continue;
        }
        ++report.mobius_pairs_checked;
        if (closed != PartitionMobiusByRecursion(q, p)) {
          report.failures.push_back("closed-form Mobius disagrees with the "
                                    "recursion");
        }
      }
    }
  }
  return report;
}

}  // namespace mlcluster
