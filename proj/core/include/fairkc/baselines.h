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

#ifndef FAIRKC_BASELINES_H_
#define FAIRKC_BASELINES_H_

#include <optional>

#include "absl/status/statusor.h"
#include "fairkc/instance.h"
#include "fairkc/metric.h"

namespace fairkc {

// One radius of the greedy densest-ball algorithm for unconstrained k-center
// with outliers: k rounds of "take the point whose r-ball holds the most
// uncovered points, then discard its 3r-ball". Succeeds when at most z
// points are left uncovered.
std::optional<Solution> CharikarOutliers(const Metric& metric, int k, int z,
                                         Length radius);

// CharikarOutliers over the ascending candidate radii; cost <= 3 OPT.
absl::StatusOr<Solution> CharikarScan(const Metric& metric, int k, int z);

// Farthest-first traversal from point 0 (ties to the smallest id). Cost is
// the plain k-center objective, no outliers.
absl::StatusOr<Solution> Gonzalez(const Metric& metric, int k);

}  // namespace fairkc

#endif  // FAIRKC_BASELINES_H_
