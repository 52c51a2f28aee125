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

#include "fairkc/instance.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace fairkc {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  settle_calls += o.settle_calls;
  memo_hits += o.memo_hits;
  bound_prunes += o.bound_prunes;
  hard_picks_without_center += o.hard_picks_without_center;
  geometry_violations += o.geometry_violations;
  ball_cap_violations += o.ball_cap_violations;
  max_balls_per_call = std::max(max_balls_per_call, o.max_balls_per_call);
  max_nodes_per_radius = std::max(max_nodes_per_radius, o.max_nodes_per_radius);
  radii_tried += o.radii_tried;
  return *this;
}

std::vector<PointId> AllPoints(const Metric& metric) {
  std::vector<PointId> ids(metric.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::vector<PointId> Clients(const AnyInstance& instance) {
  return std::visit(
      [](const auto& in) -> std::vector<PointId> {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, FairSupplierInstance> ||
                      std::is_same_v<T, ColorfulInstance>) {
          return in.clients;
        } else {
          return AllPoints(in.metric);
        }
      },
      instance);
}

std::vector<PointId> Facilities(const AnyInstance& instance) {
  return std::visit(
      [](const auto& in) -> std::vector<PointId> {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, FairSupplierInstance> ||
                      std::is_same_v<T, ColorfulInstance>) {
          return in.facilities;
        } else {
          return AllPoints(in.metric);
        }
      },
      instance);
}

const Metric& MetricOf(const AnyInstance& instance) {
  return std::visit([](const auto& in) -> const Metric& { return in.metric; },
                    instance);
}
int KOf(const AnyInstance& instance) {
  return std::visit([](const auto& in) { return in.k; }, instance);
}
int ZOf(const AnyInstance& instance) {
  return std::visit([](const auto& in) { return in.z; }, instance);
}

std::string KindName(const AnyInstance& instance) {
  switch (instance.index()) {
    case 0:
      return "fair_kcenter";
    case 1:
      return "fair_supplier";
    case 2:
      return "colorful";
    default:
      return "fair_range";
  }
}

CostResult EvaluateCost(const Metric& metric, std::span<const PointId> clients,
                        std::span<const PointId> centers, int z) {
  CostResult result;
  const std::size_t drop =
      std::min<std::size_t>(std::max(z, 0), clients.size());
  std::vector<std::pair<Length, PointId>> dist;
  dist.reserve(clients.size());
  for (PointId c : clients) {
    Length best = metric(c, centers.front());
    for (PointId s : centers.subspan(1)) best = std::min(best, metric(c, s));
    dist.emplace_back(best, c);
  }
  // Farthest first; among equal distances the larger id is dropped first.
  std::sort(dist.begin(), dist.end(),
            [](const auto& a, const auto& b) { return a > b; });
  for (std::size_t i = 0; i < drop; ++i) result.outliers.push_back(dist[i].second);
  std::sort(result.outliers.begin(), result.outliers.end());
  result.cost = drop < dist.size() ? dist[drop].first : 0.0;
  return result;
}

absl::StatusOr<CostResult> Cost(const AnyInstance& instance,
                                std::span<const PointId> centers) {
  if (centers.empty())
    return absl::InvalidArgumentError("cost needs a nonempty center set");
  const Metric& metric = MetricOf(instance);
  for (PointId c : centers)
    if (c < 0 || static_cast<std::size_t>(c) >= metric.size())
      return absl::OutOfRangeError(absl::StrCat("center ", c, " out of range"));
  const std::vector<PointId> clients = Clients(instance);
  return EvaluateCost(metric, clients, centers, ZOf(instance));
}

namespace {

// Index of the group containing each point, -1 if none.
std::vector<int> GroupIndex(std::size_t n,
                            const std::vector<std::vector<PointId>>& groups) {
  std::vector<int> owner(n, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (PointId p : groups[g])
      if (p >= 0 && static_cast<std::size_t>(p) < n) owner[p] = static_cast<int>(g);
  return owner;
}

// Shared preamble: range and duplicate checks; returns per-group counts.
std::vector<int> CountPerGroup(std::size_t n,
                               const std::vector<std::vector<PointId>>& groups,
                               std::span<const PointId> centers,
                               FeasibilityReport& report) {
  const std::vector<int> owner = GroupIndex(n, groups);
  std::vector<int> counts(groups.size(), 0);
  std::set<PointId> seen;
  for (PointId c : centers) {
    if (c < 0 || static_cast<std::size_t>(c) >= n) {
      report.feasible = false;
      report.violations.push_back(absl::StrCat("center ", c, " out of range"));
      continue;
    }
    if (!seen.insert(c).second) {
      report.feasible = false;
      report.violations.push_back(absl::StrCat("center ", c, " repeated"));
      continue;
    }
    if (owner[c] < 0) {
      report.feasible = false;
      report.violations.push_back(
          absl::StrCat("center ", c, " is not a candidate center"));
      continue;
    }
    ++counts[owner[c]];
  }
  return counts;
}

void Fail(FeasibilityReport& report, std::string message) {
  report.feasible = false;
  report.violations.push_back(std::move(message));
}

}  // namespace

FeasibilityReport CheckFeasibility(const FairKCenterInstance& instance,
                                   std::span<const PointId> centers) {
  FeasibilityReport report;
  const auto counts =
      CountPerGroup(instance.metric.size(), instance.groups, centers, report);
  if (static_cast<int>(centers.size()) > instance.k)
    Fail(report, absl::StrCat("|centers| = ", centers.size(), " exceeds k = ",
                              instance.k));
  for (std::size_t g = 0; g < counts.size(); ++g)
    if (g < instance.upper_bounds.size() && counts[g] > instance.upper_bounds[g])
      Fail(report, absl::StrCat("group ", g, " count ", counts[g],
                                " exceeds upper bound ", instance.upper_bounds[g]));
  return report;
}

FeasibilityReport CheckFeasibility(const FairSupplierInstance& instance,
                                   std::span<const PointId> centers) {
  FeasibilityReport report;
  const auto counts =
      CountPerGroup(instance.metric.size(), instance.groups, centers, report);
  if (static_cast<int>(centers.size()) > instance.k)
    Fail(report, absl::StrCat("|centers| = ", centers.size(), " exceeds k = ",
                              instance.k));
  for (std::size_t g = 0; g < counts.size(); ++g)
    if (counts[g] > 1)
      Fail(report, absl::StrCat("unit group ", g, " count ", counts[g],
                                " exceeds 1"));
  return report;
}

FeasibilityReport CheckFeasibility(const ColorfulInstance& instance,
                                   std::span<const PointId> centers) {
  FeasibilityReport report;
  const auto counts =
      CountPerGroup(instance.metric.size(), instance.classes, centers, report);
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (counts[c] != 1)
      Fail(report, absl::StrCat("class ", c, " count ", counts[c],
                                ", expected exactly 1"));
  return report;
}

FeasibilityReport CheckFeasibility(const FairRangeInstance& instance,
                                   std::span<const PointId> centers) {
  FeasibilityReport report;
  const auto counts =
      CountPerGroup(instance.metric.size(), instance.groups, centers, report);
  if (static_cast<int>(centers.size()) != instance.k)
    Fail(report, absl::StrCat("|centers| = ", centers.size(),
                              ", expected exactly k = ", instance.k));
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (g < instance.lower_bounds.size() && counts[g] < instance.lower_bounds[g])
      Fail(report, absl::StrCat("group ", g, " count ", counts[g],
                                " below lower bound ", instance.lower_bounds[g]));
    if (g < instance.upper_bounds.size() && counts[g] > instance.upper_bounds[g])
      Fail(report, absl::StrCat("group ", g, " count ", counts[g],
                                " exceeds upper bound ", instance.upper_bounds[g]));
  }
  return report;
}

FeasibilityReport CheckFeasibility(const AnyInstance& instance,
                                   std::span<const PointId> centers) {
  return std::visit(
      [&](const auto& in) { return CheckFeasibility(in, centers); }, instance);
}

bool ValidationReport::Has(ValidationIssue::Code code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [code](const ValidationIssue& i) { return i.code == code; });
}

std::string ValidationReport::ToString() const {
  std::vector<std::string> lines;
  for (const auto& issue : issues) lines.push_back(issue.message);
  return absl::StrJoin(lines, "; ");
}

namespace {

using Code = ValidationIssue::Code;

void Add(ValidationReport& report, Code code, std::string message) {
  report.issues.push_back({code, std::move(message)});
}

bool CheckIds(ValidationReport& report, std::size_t n,
              const std::vector<PointId>& ids, const char* what) {
  std::set<PointId> seen;
  for (PointId p : ids) {
    if (p < 0 || static_cast<std::size_t>(p) >= n) {
      Add(report, Code::kIdOutOfRange,
          absl::StrCat(what, " id ", p, " outside metric of size ", n));
      return false;
    }
    if (!seen.insert(p).second) {
      Add(report, Code::kRoleMismatch, absl::StrCat(what, " id ", p, " repeated"));
      return false;
    }
  }
  return true;
}

// groups must partition `universe` exactly.
void CheckPartition(ValidationReport& report, std::size_t n,
                    const std::vector<PointId>& universe,
                    const std::vector<std::vector<PointId>>& groups,
                    const char* what) {
  std::vector<int> hits(n, 0);
  std::vector<char> in_universe(n, 0);
  for (PointId p : universe) in_universe[p] = 1;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (PointId p : groups[g]) {
      if (p < 0 || static_cast<std::size_t>(p) >= n) {
        Add(report, Code::kIdOutOfRange,
            absl::StrCat(what, " ", g, " contains id ", p,
                         " outside metric of size ", n));
        return;
      }
      ++hits[p];
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    const int expected = in_universe[p] ? 1 : 0;
    if (hits[p] != expected) {
      Add(report, Code::kNotAPartition,
          absl::StrCat(what, "s are not a partition: point ", p, " covered ",
                       hits[p], " times, expected ", expected));
      return;
    }
  }
}

void CheckKZ(ValidationReport& report, int k, int z, std::size_t clients) {
  if (k < 1) Add(report, Code::kBadParameter, absl::StrCat("k = ", k, " must be positive"));
  if (z < 0) Add(report, Code::kBadParameter, absl::StrCat("z = ", z, " must be nonnegative"));
  if (z >= 0 && static_cast<std::size_t>(z) >= clients) report.degenerate = true;
}

}  // namespace

ValidationReport Validate(const FairKCenterInstance& in) {
  ValidationReport report;
  const std::size_t n = in.metric.size();
  CheckKZ(report, in.k, in.z, n);
  CheckPartition(report, n, AllPoints(in.metric), in.groups, "group");
  if (in.upper_bounds.size() != in.groups.size()) {
    Add(report, Code::kBoundCountMismatch,
        absl::StrCat(in.upper_bounds.size(), " upper bounds for ",
                     in.groups.size(), " groups"));
    return report;
  }
  long long total = 0;
  for (std::size_t g = 0; g < in.upper_bounds.size(); ++g) {
    const int b = in.upper_bounds[g];
    if (b < 0 || b > in.k)
      Add(report, Code::kBoundOutOfRange,
          absl::StrCat("upper bound ", b, " of group ", g, " outside [0, k]"));
    total += b;
  }
  if (total < in.k)
    Add(report, Code::kAggregateBoundsBelowK,
        absl::StrCat("aggregate upper bounds below k: ", total, " < ", in.k));
  return report;
}

ValidationReport Validate(const FairSupplierInstance& in) {
  ValidationReport report;
  const std::size_t n = in.metric.size();
  CheckKZ(report, in.k, in.z, in.clients.size());
  if (!CheckIds(report, n, in.facilities, "facility") ||
      !CheckIds(report, n, in.clients, "client"))
    return report;
  if (in.facilities.empty())
    Add(report, Code::kEmptyGroup, "no facilities");
  CheckPartition(report, n, in.facilities, in.groups, "group");
  for (std::size_t g = 0; g < in.groups.size(); ++g)
    if (in.groups[g].empty())
      Add(report, Code::kEmptyGroup, absl::StrCat("unit group ", g, " is empty"));
  if (static_cast<int>(in.groups.size()) < in.k)
    Add(report, Code::kAggregateBoundsBelowK,
        absl::StrCat("aggregate upper bounds below k: ", in.groups.size(),
                     " unit groups < ", in.k));
  return report;
}

ValidationReport Validate(const ColorfulInstance& in) {
  ValidationReport report;
  const std::size_t n = in.metric.size();
  CheckKZ(report, in.k, in.z, in.clients.size());
  if (!CheckIds(report, n, in.facilities, "facility") ||
      !CheckIds(report, n, in.clients, "client"))
    return report;
  if (static_cast<int>(in.classes.size()) != in.k)
    Add(report, Code::kWrongClassCount,
        absl::StrCat(in.classes.size(), " color classes, expected k = ", in.k));
  CheckPartition(report, n, in.facilities, in.classes, "color class");
  for (std::size_t c = 0; c < in.classes.size(); ++c)
    if (in.classes[c].empty())
      Add(report, Code::kEmptyGroup, absl::StrCat("color class ", c, " is empty"));
  return report;
}

ValidationReport Validate(const FairRangeInstance& in) {
  ValidationReport report;
  const std::size_t n = in.metric.size();
  CheckKZ(report, in.k, in.z, n);
  CheckPartition(report, n, AllPoints(in.metric), in.groups, "group");
  if (in.lower_bounds.size() != in.groups.size() ||
      in.upper_bounds.size() != in.groups.size()) {
    Add(report, Code::kBoundCountMismatch,
        absl::StrCat(in.lower_bounds.size(), " lower and ",
                     in.upper_bounds.size(), " upper bounds for ",
                     in.groups.size(), " groups"));
    return report;
  }
  long long lower = 0, upper = 0;
  for (std::size_t g = 0; g < in.groups.size(); ++g) {
    const int lo = in.lower_bounds[g], hi = in.upper_bounds[g];
    if (lo < 0 || lo > hi)
      Add(report, Code::kBoundOutOfRange,
          absl::StrCat("bounds [", lo, ", ", hi, "] of group ", g, " invalid"));
    if (lo > static_cast<int>(in.groups[g].size()))
      Add(report, Code::kInfeasibleRange,
          absl::StrCat("lower bound ", lo, " of group ", g, " exceeds its size ",
                       in.groups[g].size()));
    lower += lo;
    upper += hi;
  }
  if (lower > in.k || upper < in.k)
    Add(report, Code::kInfeasibleRange,
        absl::StrCat("infeasible bounds: need sum(lower) = ", lower,
                     " <= k = ", in.k, " <= sum(upper) = ", upper));
  return report;
}

ValidationReport Validate(const AnyInstance& instance) {
  return std::visit([](const auto& in) { return Validate(in); }, instance);
}

}  // namespace fairkc
