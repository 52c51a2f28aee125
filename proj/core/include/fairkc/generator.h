// Copyright 2026 The Authors.
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

#ifndef FAIRKC_GENERATOR_H_
#define FAIRKC_GENERATOR_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "fairkc/instance.h"

namespace fairkc {

// Seeded planted-cluster instance description.
struct GenSpec {
  enum class Problem { kFairKCenter, kFairRange, kFairSupplier, kColorful };
  enum class GroupScheme { kUniform, kSkewed, kForbidden };

  Problem problem = Problem::kFairKCenter;
  uint64_t seed = 0;
  int n = 12;  // clients (all points for the k-center variants)
  int k = 2;
  int z = 1;
  int dim = 2;
  // Emit an integer L1 distance matrix instead of Euclidean coordinates;
  // every distance is then an exact small integer.
  bool matrix = false;
  double sigma = 1.0;       // cluster spread
  double separation = 10.0; // distance between consecutive planted centers
  int outliers = -1;        // planted strays; -1 means z
  double displacement = 0.0;  // stray distance; 0 means 5 * separation
  int groups = 2;           // demographic groups (unit groups for supplier)
  GroupScheme scheme = GroupScheme::kUniform;
  int max_bound = 0;        // per-group upper bound cap; 0 means k
  int facilities = 0;       // supplier variants; 0 means n / 2 (at least k)
};

absl::StatusOr<AnyInstance> Generate(const GenSpec& spec);

}  // namespace fairkc

#endif  // FAIRKC_GENERATOR_H_
