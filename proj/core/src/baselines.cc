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

#include "fairkc/baselines.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "fairkc/client_set.h"

namespace fairkc {

std::optional<Solution> CharikarOutliers(const Metric& metric, int k, int z,
                                         Length radius) {
  const std::size_t n = metric.size();
  const std::vector<PointId> points = AllPoints(metric);
  if (k <= 0) {
    if (static_cast<std::size_t>(std::max(z, 0)) < n) return std::nullopt;
    Solution vacuous;
    vacuous.outliers = points;
    return vacuous;
  }
  std::vector<ClientSet> near(n, ClientSet(n)), far(n, ClientSet(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const Length d = metric(u, v);
      if (d <= radius) near[u].Insert(v);
      if (d <= 3.0 * radius) far[u].Insert(v);
    }
  ClientSet uncovered(n, true);
  Solution solution;
  for (int round = 0; round < k && !uncovered.Empty(); ++round) {
    std::size_t best = 0, best_size = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t size = near[p].IntersectCount(uncovered);
      if (p == 0 || size > best_size) {
        best = p;
        best_size = size;
      }
    }
    solution.centers.push_back(static_cast<PointId>(best));
    uncovered.Subtract(far[best]);
  }
  if (uncovered.Count() > static_cast<std::size_t>(std::max(z, 0)))
    return std::nullopt;
  std::sort(solution.centers.begin(), solution.centers.end());
  solution.center_groups.assign(solution.centers.size(), -1);
  CostResult cost = EvaluateCost(metric, points, solution.centers, z);
  solution.cost = cost.cost;
  solution.outliers = std::move(cost.outliers);
  return solution;
}

absl::StatusOr<Solution> CharikarScan(const Metric& metric, int k, int z) {
  if (metric.size() == 0) return absl::InvalidArgumentError("empty metric");
  const std::vector<PointId> points = AllPoints(metric);
  auto radii = CandidateRadii(metric, points, points);
  if (!radii.ok()) return radii.status();
  for (Length r : *radii)
    if (auto solution = CharikarOutliers(metric, k, z, r)) return *solution;
  return absl::InternalError("no radius succeeded; k must be at least 1");
}

absl::StatusOr<Solution> Gonzalez(const Metric& metric, int k) {
  if (k < 1) return absl::InvalidArgumentError("k must be positive");
  const std::size_t n = metric.size();
  if (n == 0) return absl::InvalidArgumentError("empty metric");
  Solution solution;
  std::vector<Length> nearest(n, std::numeric_limits<Length>::infinity());
  PointId next = 0;
  for (int round = 0; round < k && static_cast<std::size_t>(round) < n; ++round) {
    solution.centers.push_back(next);
    for (std::size_t p = 0; p < n; ++p)
      nearest[p] = std::min(nearest[p], metric(p, next));
    // Farthest point; ties keep the smallest id.
    next = 0;
    for (std::size_t p = 1; p < n; ++p)
      if (nearest[p] > nearest[next]) next = static_cast<PointId>(p);
    if (nearest[next] == 0.0) break;  // every point already coincides with a center
  }
  solution.cost = *std::max_element(nearest.begin(), nearest.end());
  std::sort(solution.centers.begin(), solution.centers.end());
  solution.center_groups.assign(solution.centers.size(), -1);
  return solution;
}

}  // namespace fairkc
