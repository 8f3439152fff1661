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

#include "mlcluster/types.h"

#include <string>

namespace mlcluster {

std::vector<int> Members(Mask a) {
  std::vector<int> out;
  out.reserve(PopCount(a));
  while (a != 0) {
    out.push_back(LowestPoint(a));
    a &= a - 1;
  }
  return out;
}

void RequireDense(int n, const char* what) {
  if (n < 0 || n > kMaxDenseN) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the dense limit of " +
                        std::to_string(kMaxDenseN));
  }
}

}  // namespace mlcluster
