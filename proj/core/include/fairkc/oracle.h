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

#ifndef FAIRKC_ORACLE_H_
#define FAIRKC_ORACLE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "fairkc/instance.h"
#include "fairkc/metric.h"

namespace fairkc {

// An exact optimum together with its clustering. clusters[i] holds the
// non-outlier clients whose nearest center is centers[i] (ties to the
// smaller index i).
struct OracleClustering {
  std::vector<PointId> centers;
  // Color class (colorful) or group (fair variants) of each center.
  std::vector<int> center_groups;
  std::vector<std::vector<PointId>> clusters;
  std::vector<PointId> outliers;
  Length radius = 0.0;
};

inline constexpr uint64_t kDefaultOracleCap = 1'000'000;

// Every tuple of the cartesian product of color classes; the first minimizer
// in lexicographic tuple order wins. clusters[c] belongs to the center of
// class c.
absl::StatusOr<OracleClustering> BruteForceColorful(const ColorfulInstance& in,
                                                    uint64_t cap = kDefaultOracleCap);

// Every feasible center set of size 1..k; ties go to the lexicographically
// smallest sorted id sequence.
absl::StatusOr<OracleClustering> BruteForceFair(const FairKCenterInstance& in,
                                                uint64_t cap = kDefaultOracleCap);

// Every feasible center set of size exactly k.
absl::StatusOr<OracleClustering> BruteForceFairRange(const FairRangeInstance& in,
                                                     uint64_t cap = kDefaultOracleCap);

// Every feasible facility set of size 1..k with at most one per unit group.
absl::StatusOr<OracleClustering> BruteForceSupplier(const FairSupplierInstance& in,
                                                    uint64_t cap = kDefaultOracleCap);

// Unconstrained k-center with outliers over all points, |S| <= k.
absl::StatusOr<OracleClustering> BruteForceUnconstrained(
    const Metric& metric, int k, int z, uint64_t cap = kDefaultOracleCap);

absl::StatusOr<OracleClustering> BruteForce(const AnyInstance& instance,
                                            uint64_t cap = kDefaultOracleCap);

// Assembles the clustering of a fixed center set.
OracleClustering ClusteringOf(const Metric& metric,
                              const std::vector<PointId>& clients,
                              const std::vector<PointId>& centers,
                              const std::vector<int>& center_groups, int z);

// C(n, r), saturating.
uint64_t Binomial(uint64_t n, uint64_t r);

}  // namespace fairkc

#endif  // FAIRKC_ORACLE_H_
