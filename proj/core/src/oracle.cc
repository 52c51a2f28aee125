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

#include "fairkc/oracle.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fairkc {

uint64_t Binomial(uint64_t n, uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > std::numeric_limits<uint64_t>::max())
      return std::numeric_limits<uint64_t>::max();
  }
  return static_cast<uint64_t>(result);
}

OracleClustering ClusteringOf(const Metric& metric,
                              const std::vector<PointId>& clients,
                              const std::vector<PointId>& centers,
                              const std::vector<int>& center_groups, int z) {
  OracleClustering out;
  out.centers = centers;
  out.center_groups = center_groups;
  out.clusters.assign(centers.size(), {});
  const CostResult cost = EvaluateCost(metric, clients, centers, z);
  out.radius = cost.cost;
  out.outliers = cost.outliers;
  for (PointId c : clients) {
    if (std::binary_search(out.outliers.begin(), out.outliers.end(), c)) continue;
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < centers.size(); ++i)
      if (metric(c, centers[i]) < metric(c, centers[nearest])) nearest = i;
    out.clusters[nearest].push_back(c);
  }
  return out;
}

namespace {

// Distances from every client to every candidate center, plus the
// (z+1)-th largest nearest-center distance of a center subset.
class CostTable {
 public:
  CostTable(const Metric& metric, const std::vector<PointId>& clients,
            const std::vector<PointId>& candidates, int z)
      : clients_(clients.size()),
        z_(static_cast<std::size_t>(std::max(z, 0))),
        table_(clients.size() * candidates.size()),
        stride_(candidates.size()),
        scratch_(clients.size()) {
    for (std::size_t c = 0; c < clients.size(); ++c)
      for (std::size_t f = 0; f < candidates.size(); ++f)
        table_[c * stride_ + f] = metric(clients[c], candidates[f]);
  }

  // `chosen` holds candidate positions.
  Length Evaluate(const std::vector<std::size_t>& chosen) {
    if (z_ >= clients_) return 0.0;
    for (std::size_t c = 0; c < clients_; ++c) {
      const Length* row = &table_[c * stride_];
      Length best = row[chosen[0]];
      for (std::size_t i = 1; i < chosen.size(); ++i)
        best = std::min(best, row[chosen[i]]);
      scratch_[c] = best;
    }
    std::nth_element(scratch_.begin(), scratch_.begin() + z_, scratch_.end(),
                     std::greater<>());
    return scratch_[z_];
  }

 private:
  std::size_t clients_;
  std::size_t z_;
  std::vector<Length> table_;
  std::size_t stride_;
  std::vector<Length> scratch_;
};

// Enumerates subsets of `candidates` (sorted ascending) with sizes in
// [min_size, max_size] that pass `feasible`; returns the minimizer of
// (cost, sorted ids).
absl::StatusOr<std::vector<PointId>> BestSubset(
    const Metric& metric, const std::vector<PointId>& clients,
    const std::vector<PointId>& candidates, int min_size, int max_size, int z,
    uint64_t cap,
    const std::function<bool(const std::vector<std::size_t>&)>& feasible) {
  const std::size_t n = candidates.size();
  max_size = std::min<int>(max_size, static_cast<int>(n));
  uint64_t total = 0;
  for (int s = min_size; s <= max_size; ++s) {
    const uint64_t b = Binomial(n, s);
    total = b > cap ? cap + 1 : total + b;
    if (total > cap)
      return absl::ResourceExhaustedError(absl::StrCat(
          "exact search over subsets of ", n, " points up to size ", max_size,
          " exceeds the oracle cap ", cap));
  }
  CostTable table(metric, clients, candidates, z);
  std::optional<std::pair<Length, std::vector<PointId>>> best;
  std::vector<std::size_t> chosen;
  std::vector<PointId> ids;
  for (int size = std::max(min_size, 1); size <= max_size; ++size) {
    chosen.resize(size);
    for (int i = 0; i < size; ++i) chosen[i] = i;
    while (true) {
      if (feasible(chosen)) {
        const Length cost = table.Evaluate(chosen);
        if (!best || cost <= best->first) {
          ids.clear();
          for (std::size_t pos : chosen) ids.push_back(candidates[pos]);
          if (!best || cost < best->first || ids < best->second)
            best.emplace(cost, ids);
        }
      }
      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && chosen[i] == n - size + i) --i;
      if (i < 0) break;
      ++chosen[i];
      for (int j = i + 1; j < size; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  if (!best) return absl::NotFoundError("no feasible center set exists");
  return best->second;
}

std::vector<int> OwnerOf(std::size_t n, const std::vector<std::vector<PointId>>& groups) {
  std::vector<int> owner(n, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (PointId p : groups[g]) owner[p] = static_cast<int>(g);
  return owner;
}

absl::Status CheckValid(const ValidationReport& report) {
  if (report.ok()) return absl::OkStatus();
  return absl::InvalidArgumentError(report.ToString());
}

}  // namespace

absl::StatusOr<OracleClustering> BruteForceColorful(const ColorfulInstance& in,
                                                    uint64_t cap) {
  if (absl::Status s = CheckValid(Validate(in)); !s.ok()) return s;
  std::vector<std::vector<PointId>> classes = in.classes;
  uint64_t product = 1;
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
    if (product > cap / cls.size())
      return absl::ResourceExhaustedError(absl::StrCat(
          "cartesian product of color classes exceeds the oracle cap ", cap));
    product *= cls.size();
  }
  // Candidate positions: class members laid out consecutively.
  std::vector<PointId> candidates;
  std::vector<std::size_t> offset;
  for (const auto& cls : classes) {
    offset.push_back(candidates.size());
    candidates.insert(candidates.end(), cls.begin(), cls.end());
  }
  CostTable table(in.metric, in.clients, candidates, in.z);
  const std::size_t k = classes.size();
  std::vector<std::size_t> digit(k, 0), chosen(k);
  std::optional<std::pair<Length, std::vector<std::size_t>>> best;
  while (true) {
    for (std::size_t c = 0; c < k; ++c) chosen[c] = offset[c] + digit[c];
    const Length cost = table.Evaluate(chosen);
    if (!best || cost < best->first) best.emplace(cost, chosen);
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++digit[pos] < classes[pos].size()) break;
      digit[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  std::vector<PointId> centers;
  std::vector<int> colors;
  for (std::size_t c = 0; c < k; ++c) {
    centers.push_back(candidates[best->second[c]]);
    colors.push_back(static_cast<int>(c));
  }
  return ClusteringOf(in.metric, in.clients, centers, colors, in.z);
}

absl::StatusOr<OracleClustering> BruteForceFair(const FairKCenterInstance& in,
                                                uint64_t cap) {
  if (absl::Status s = CheckValid(Validate(in)); !s.ok()) return s;
  const std::vector<PointId> points = AllPoints(in.metric);
  const std::vector<int> owner = OwnerOf(points.size(), in.groups);
  std::vector<int> counts(in.groups.size());
  auto feasible = [&](const std::vector<std::size_t>& chosen) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t p : chosen)
      if (++counts[owner[p]] > in.upper_bounds[owner[p]]) return false;
    return true;
  };
  auto best = BestSubset(in.metric, points, points, 1, in.k, in.z, cap, feasible);
  if (!best.ok()) return best.status();
  std::vector<int> groups;
  for (PointId p : *best) groups.push_back(owner[p]);
  return ClusteringOf(in.metric, points, *best, groups, in.z);
}

absl::StatusOr<OracleClustering> BruteForceFairRange(const FairRangeInstance& in,
                                                     uint64_t cap) {
  if (absl::Status s = CheckValid(Validate(in)); !s.ok()) return s;
  const std::vector<PointId> points = AllPoints(in.metric);
  const std::vector<int> owner = OwnerOf(points.size(), in.groups);
  std::vector<int> counts(in.groups.size());
  auto feasible = [&](const std::vector<std::size_t>& chosen) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t p : chosen) ++counts[owner[p]];
    for (std::size_t g = 0; g < counts.size(); ++g)
      if (counts[g] < in.lower_bounds[g] || counts[g] > in.upper_bounds[g])
        return false;
    return true;
  };
  auto best =
      BestSubset(in.metric, points, points, in.k, in.k, in.z, cap, feasible);
  if (!best.ok()) return best.status();
  std::vector<int> groups;
  for (PointId p : *best) groups.push_back(owner[p]);
  return ClusteringOf(in.metric, points, *best, groups, in.z);
}

absl::StatusOr<OracleClustering> BruteForceSupplier(const FairSupplierInstance& in,
                                                    uint64_t cap) {
  if (absl::Status s = CheckValid(Validate(in)); !s.ok()) return s;
  std::vector<PointId> facilities = in.facilities;
  std::sort(facilities.begin(), facilities.end());
  const std::vector<int> point_owner = OwnerOf(in.metric.size(), in.groups);
  std::vector<int> owner;
  for (PointId f : facilities) owner.push_back(point_owner[f]);
  std::vector<int> counts(in.groups.size());
  auto feasible = [&](const std::vector<std::size_t>& chosen) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t pos : chosen)
      if (++counts[owner[pos]] > 1) return false;
    return true;
  };
  auto best = BestSubset(in.metric, in.clients, facilities, 1, in.k, in.z, cap,
                         feasible);
  if (!best.ok()) return best.status();
  std::vector<int> groups;
  for (PointId f : *best) groups.push_back(point_owner[f]);
  return ClusteringOf(in.metric, in.clients, *best, groups, in.z);
}

absl::StatusOr<OracleClustering> BruteForceUnconstrained(const Metric& metric,
                                                         int k, int z,
                                                         uint64_t cap) {
  if (k < 1) return absl::InvalidArgumentError("k must be positive");
  const std::vector<PointId> points = AllPoints(metric);
  auto best = BestSubset(metric, points, points, 1, k, z, cap,
                         [](const std::vector<std::size_t>&) { return true; });
  if (!best.ok()) return best.status();
  return ClusteringOf(metric, points, *best, std::vector<int>(best->size(), 0), z);
}

absl::StatusOr<OracleClustering> BruteForce(const AnyInstance& instance,
                                            uint64_t cap) {
  switch (instance.index()) {
    case 0:
      return BruteForceFair(std::get<FairKCenterInstance>(instance), cap);
    case 1:
      return BruteForceSupplier(std::get<FairSupplierInstance>(instance), cap);
    case 2:
      return BruteForceColorful(std::get<ColorfulInstance>(instance), cap);
    default:
      return BruteForceFairRange(std::get<FairRangeInstance>(instance), cap);
  }
}

}  // namespace fairkc
