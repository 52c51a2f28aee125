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

#include "fairkc/reductions.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fairkc {
namespace {

// Builds the copy layout shared by both fair reductions. copies[i] is the
// number of unit groups made from groups[i]; the first equality[i] of them
// are tagged kEquality when `range` is set.
absl::StatusOr<UnitReduction> Duplicate(
    const Metric& metric, int k, int z,
    const std::vector<std::vector<PointId>>& groups,
    const std::vector<int>& copies, const std::vector<int>& equality,
    bool range) {
  const auto n = static_cast<PointId>(metric.size());
  UnitReduction out;
  BackMap& bm = out.back_map;
  std::vector<PointId> origins;
  for (PointId p = 0; p < n; ++p) {
    origins.push_back(p);
    bm.origin.push_back({p, -1, -1, CopyTag::kUpper});
    out.instance.clients.push_back(p);
  }
  PointId next = n;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (int j = 0; j < copies[i]; ++j) {
      CopyTag tag = CopyTag::kUpper;
      if (range) tag = j < equality[i] ? CopyTag::kEquality : CopyTag::kSlack;
      std::vector<PointId> unit;
      for (PointId x : groups[i]) {
        origins.push_back(x);
        bm.origin.push_back({x, static_cast<int>(i), j, tag});
        out.instance.facilities.push_back(next);
        unit.push_back(next++);
      }
      out.instance.groups.push_back(std::move(unit));
      bm.unit_groups.push_back({static_cast<int>(i), j, tag});
    }
  }
  auto aliased = Metric::Alias(metric, std::move(origins));
  if (!aliased.ok()) return aliased.status();
  out.instance.metric = *std::move(aliased);
  out.instance.k = k;
  out.instance.z = z;
  return out;
}

}  // namespace

absl::StatusOr<UnitReduction> FairToUnitSupplier(const FairKCenterInstance& in) {
  const ValidationReport report = Validate(in);
  if (!report.ok()) return absl::InvalidArgumentError(report.ToString());
  return Duplicate(in.metric, in.k, in.z, in.groups, in.upper_bounds, {}, false);
}

absl::StatusOr<UnitReduction> FairRangeToUnitSupplier(const FairRangeInstance& in) {
  const ValidationReport report = Validate(in);
  if (!report.ok()) return absl::InvalidArgumentError(report.ToString());
  return Duplicate(in.metric, in.k, in.z, in.groups, in.upper_bounds,
                   in.lower_bounds, true);
}

absl::StatusOr<UnitReduction> IdentityReduction(const FairSupplierInstance& in) {
  const ValidationReport report = Validate(in);
  if (!report.ok()) return absl::InvalidArgumentError(report.ToString());
  UnitReduction out;
  out.instance = in;
  const auto n = static_cast<PointId>(in.metric.size());
  out.back_map.origin.resize(n);
  for (PointId p = 0; p < n; ++p) out.back_map.origin[p] = {p, -1, -1, CopyTag::kUpper};
  for (std::size_t g = 0; g < in.groups.size(); ++g) {
    for (PointId f : in.groups[g])
      out.back_map.origin[f] = {f, static_cast<int>(g), 0, CopyTag::kUpper};
    out.back_map.unit_groups.push_back({static_cast<int>(g), 0, CopyTag::kUpper});
  }
  return out;
}

absl::StatusOr<std::vector<PointId>> ImageInReduced(
    std::span<const PointId> centers, const BackMap& back_map) {
  // (original point, copy) -> reduced facility id, and the group of each point.
  std::map<std::pair<PointId, int>, PointId> copy_of;
  std::map<PointId, int> group_of;
  for (std::size_t id = 0; id < back_map.origin.size(); ++id) {
    const CopyOrigin& o = back_map.origin[id];
    if (o.group < 0) continue;
    copy_of[{o.point, o.copy}] = static_cast<PointId>(id);
    group_of[o.point] = o.group;
  }
  std::map<int, int> used;
  std::vector<PointId> image;
  for (PointId x : centers) {
    auto g = group_of.find(x);
    if (g == group_of.end())
      return absl::InvalidArgumentError(
          absl::StrCat("point ", x, " has no facility copy"));
    const int j = used[g->second]++;
    auto it = copy_of.find({x, j});
    if (it == copy_of.end())
      return absl::FailedPreconditionError(absl::StrCat(
          "group ", g->second, " has no copy ", j, " left for point ", x));
    image.push_back(it->second);
  }
  return image;
}

Solution MapBack(const Solution& reduced, const BackMap& back_map,
                 const AnyInstance& original) {
  std::vector<std::pair<PointId, int>> mapped;
  for (PointId t : reduced.centers) {
    const CopyOrigin& o = back_map.origin[t];
    mapped.emplace_back(o.point, o.group);
  }
  std::sort(mapped.begin(), mapped.end());
  mapped.erase(std::unique(mapped.begin(), mapped.end(),
                           [](const auto& a, const auto& b) {
                             return a.first == b.first;
                           }),
               mapped.end());
  Solution out;
  for (const auto& [p, g] : mapped) {
    out.centers.push_back(p);
    out.center_groups.push_back(g);
  }
  if (!out.centers.empty()) {
    const std::vector<PointId> clients = Clients(original);
    CostResult cost = EvaluateCost(MetricOf(original), clients, out.centers,
                                   ZOf(original));
    out.cost = cost.cost;
    out.outliers = std::move(cost.outliers);
  }
  out.trace = reduced.trace;
  return out;
}

ColoredInstance ApplyColoring(const FairSupplierInstance& reduced,
                              Coloring coloring) {
  ColoredInstance out;
  ColorfulInstance& j = out.instance;
  j.metric = reduced.metric;
  j.facilities = reduced.facilities;
  j.clients = reduced.clients;
  j.k = reduced.k;
  j.z = reduced.z;
  j.classes.assign(std::max(reduced.k, 0), {});
  for (std::size_t g = 0; g < reduced.groups.size(); ++g) {
    auto& cls = j.classes[coloring.color_of_group[g]];
    cls.insert(cls.end(), reduced.groups[g].begin(), reduced.groups[g].end());
  }
  for (auto& cls : j.classes) {
    std::sort(cls.begin(), cls.end());
    if (cls.empty()) out.has_empty_class = true;
  }
  out.coloring = std::move(coloring);
  return out;
}

ColoredInstance ColorCode(const FairSupplierInstance& reduced, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> color(0, std::max(reduced.k, 1) - 1);
  Coloring coloring;
  coloring.seed = seed;
  coloring.color_of_group.resize(reduced.groups.size());
  for (int& c : coloring.color_of_group) c = color(rng);
  return ApplyColoring(reduced, std::move(coloring));
}

uint64_t ColoringCount(int k, std::size_t groups) {
  uint64_t total = 1;
  for (std::size_t i = 0; i < groups; ++i) {
    if (total > UINT64_MAX / static_cast<uint64_t>(k)) return UINT64_MAX;
    total *= static_cast<uint64_t>(k);
  }
  return total;
}

absl::StatusOr<ColoringEnumerator> ColoringEnumerator::Create(
    const FairSupplierInstance& reduced, uint64_t cap) {
  if (reduced.k < 1) return absl::InvalidArgumentError("k must be positive");
  const uint64_t total = ColoringCount(reduced.k, reduced.groups.size());
  if (total > cap)
    return absl::ResourceExhaustedError(
        absl::StrCat(reduced.k, "^", reduced.groups.size(),
                     " colorings exceed the enumeration cap ", cap));
  return ColoringEnumerator(&reduced, total);
}

ColoringEnumerator::ColoringEnumerator(const FairSupplierInstance* reduced,
                                       uint64_t total)
    : reduced_(reduced), total_(total), digits_(reduced->groups.size(), 0) {}

std::optional<Coloring> ColoringEnumerator::NextColoring() {
  const int k = reduced_->k;
  std::vector<int> hits(k, 0);
  while (index_ < total_) {
    const uint64_t current = index_++;
    // digits_ holds `current` in base k, most significant digit first.
    std::fill(hits.begin(), hits.end(), 0);
    for (int d : digits_) hits[d] = 1;
    const bool surjective =
        std::all_of(hits.begin(), hits.end(), [](int h) { return h != 0; });
    std::vector<int> assignment = digits_;
    for (std::size_t pos = digits_.size(); pos-- > 0;) {
      if (++digits_[pos] < k) break;
      digits_[pos] = 0;
    }
    if (!surjective) continue;
    Coloring coloring;
    coloring.color_of_group = std::move(assignment);
    coloring.enumeration_index = current;
    return coloring;
  }
  return std::nullopt;
}

std::optional<ColoredInstance> ColoringEnumerator::Next() {
  std::optional<Coloring> c = NextColoring();
  if (!c) return std::nullopt;
  return ApplyColoring(*reduced_, *std::move(c));
}

bool IsCanonicalColoring(std::span<const int> color_of_group) {
  int next = 0;
  for (int c : color_of_group) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

uint64_t RandomTrialCount(int k, double delta) {
  return static_cast<uint64_t>(std::ceil(std::exp(k) * std::log(1.0 / delta)));
}

}  // namespace fairkc
