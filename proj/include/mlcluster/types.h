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

#ifndef MLCLUSTER_TYPES_H_
#define MLCLUSTER_TYPES_H_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlcluster {

// Subsets of the point set {0, ..., n-1} are bitmasks; bit i is point i.
using Mask = std::uint64_t;

// Largest n for which dense 2^n tables are built.
inline constexpr int kMaxDenseN = 20;
// Largest n a Mask can describe.
inline constexpr int kMaxPoints = 62;

inline constexpr double kEqualityTol = 1e-9;
inline constexpr double kZeroMass = 1e-12;

inline Mask Bit(int i) { return Mask{1} << i; }
inline Mask FullMask(int n) { return n == 0 ? Mask{0} : (~Mask{0} >> (64 - n)); }
inline bool Contains(Mask a, int i) { return (a >> i) & 1U; }
inline int PopCount(Mask a) { return std::popcount(a); }
inline int LowestPoint(Mask a) { return std::countr_zero(a); }

// Points of `a` in increasing order.
std::vector<int> Members(Mask a);

// Bad input: asymmetric matrix, broken simplex, malformed file, ...
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dense table or enumeration would exceed its size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal postcondition failed; always a bug or a guard trip.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void RequireDense(int n, const char* what);

}  // namespace mlcluster

#endif  // MLCLUSTER_TYPES_H_
