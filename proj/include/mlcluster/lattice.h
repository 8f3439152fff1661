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

#ifndef MLCLUSTER_LATTICE_H_
#define MLCLUSTER_LATTICE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mlcluster/fuzzy_cover.h"
#include "mlcluster/score.h"
#include "mlcluster/score_function.h"

namespace mlcluster {

// Largest n for which all partitions are enumerated (Bell(10) = 115975).
inline constexpr int kMaxEnumerateN = 10;
// Largest n for partition-function Mobius inversion (double enumeration).
inline constexpr int kMaxInversionN = 8;
// Largest n for the recursive partition-lattice Mobius oracle.
inline constexpr int kMaxRecursionN = 6;

// Restricted-growth string: rgs[i] is the block index of point i, blocks
// numbered by first occurrence.
struct PartitionCode {
  std::vector<int> rgs;

  friend bool operator==(const PartitionCode&, const PartitionCode&) = default;
  friend auto operator<=>(const PartitionCode&, const PartitionCode&) = default;
};

std::uint64_t BellNumber(int n);

// All partitions of n points in lexicographic restricted-growth order.
std::vector<PartitionCode> EnumeratePartitions(int n);

Partition ToPartition(const PartitionCode& code);
PartitionCode ToCode(const Partition& p);
// Position of `code` in EnumeratePartitions(code.rgs.size()), in O(n).
std::size_t PartitionRank(const PartitionCode& code);

// Every block of q lies inside a block of p (p is coarser or equal).
bool Coarsens(const Partition& p, const Partition& q);

// Mobius function of the partition lattice, closed form. Zero unless q is a
// refinement of p.
std::int64_t PartitionMobius(const Partition& q, const Partition& p);

// Same value from mu(x, x) = 1, mu(y, x) = -sum_{y <= z < x} mu(z, x).
// n <= kMaxRecursionN.
std::int64_t PartitionMobiusByRecursion(const Partition& q,
                                        const Partition& p);

// All refinements of p (partitions q with p coarsening q).
std::vector<Partition> Refinements(const Partition& p);

// Real-valued function on all partitions of n points, stored by rank.
class PartitionFunction {
 public:
  PartitionFunction(int n, std::vector<double> values);

  int size() const { return n_; }
  double at(const PartitionCode& code) const;
  double at(const Partition& p) const { return at(ToCode(p)); }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

// h_v(P) = sum of v over the blocks of P.
PartitionFunction SeparableFrom(const Score& v);

// mu^h(P) = sum_{Q <= P} mu(Q, P) h(Q). n <= kMaxInversionN.
PartitionFunction MobiusInversion(const PartitionFunction& h);
// h(P) = sum_{Q <= P} mu^h(Q); inverse of MobiusInversion.
PartitionFunction ZetaInversion(const PartitionFunction& mobius);

// At most one block has more than one point.
bool IsModular(const Partition& p);

// w(A) = v(A) + sum_{i in A} delta_i. Separates the same partition function
// as v while differing from it. delta must sum to 0 and not vanish.
ScoreFunction SeparatingVariant(const ScoreFunction& v,
                                std::span<const double> delta);

struct LatticeCheckOptions {
  std::uint64_t seed = 1;
  int random_functions = 50;
  double tolerance = kEqualityTol;
};

struct LatticeCheckReport {
  int n = 0;
  std::uint64_t partitions = 0;
  int modular = 0;
  int modular_expected = 0;
  // Non-modular partitions on which every sampled mu^{h_v} vanished.
  int nonmodular_zero = 0;
  int nonmodular_total = 0;
  // Modular values matched sum v({i}), mu^v(A), mu^v(N) for all samples.
  bool modular_values_match = true;
  // Comparable pairs checked against the recursion (0 when n is too big).
  std::uint64_t mobius_pairs_checked = 0;
  std::int64_t mobius_bottom_top = 0;
  bool zeta_roundtrip = true;
  bool separation = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Runs the invariant suite for n <= kMaxInversionN (the recursion cross-check
// only for n <= 5).
LatticeCheckReport CheckLattice(int n, const LatticeCheckOptions& options = {});

}  // namespace mlcluster

#endif  // MLCLUSTER_LATTICE_H_
