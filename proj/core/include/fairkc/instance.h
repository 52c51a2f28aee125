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

#ifndef FAIRKC_INSTANCE_H_
#define FAIRKC_INSTANCE_H_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "fairkc/metric.h"
#include "fairkc/trace.h"

namespace fairkc {

// Fair k-center with outliers: every point is both client and candidate
// center; at most upper_bounds[i] centers may come from groups[i].
struct FairKCenterInstance {
  Metric metric;
  int k = 0;
  int z = 0;
  std::vector<std::vector<PointId>> groups;
  std::vector<int> upper_bounds;
};

// Fair k-supplier with outliers and unit requirements: facilities and clients
// are separate roles over one metric, and at most one center may come from
// each facility group.
struct FairSupplierInstance {
  Metric metric;
  std::vector<PointId> facilities;
  std::vector<PointId> clients;
  int k = 0;
  int z = 0;
  std::vector<std::vector<PointId>> groups;
};

// Colorful k-supplier with outliers: exactly k classes, one center from each.
struct ColorfulInstance {
  Metric metric;
  std::vector<PointId> facilities;
  std::vector<PointId> clients;
  int k = 0;
  int z = 0;
  std::vector<std::vector<PointId>> classes;
};

// Fair-range k-center with outliers: exactly k centers, between
// lower_bounds[i] and upper_bounds[i] of them from groups[i].
struct FairRangeInstance {
  Metric metric;
  int k = 0;
  int z = 0;
  std::vector<std::vector<PointId>> groups;
  std::vector<int> lower_bounds;
  std::vector<int> upper_bounds;
};

using AnyInstance = std::variant<FairKCenterInstance, FairSupplierInstance,
                                 ColorfulInstance, FairRangeInstance>;

struct Solution {
  std::vector<PointId> centers;
  // Group (or color class) each center was selected for; -1 when unknown.
  std::vector<int> center_groups;
  Length cost = 0.0;
  std::vector<PointId> outliers;
  std::optional<BranchTrace> trace;
};

// 0, 1, ..., metric.size() - 1.
std::vector<PointId> AllPoints(const Metric& metric);

// Clients and candidate centers of any variant.
std::vector<PointId> Clients(const AnyInstance& instance);
std::vector<PointId> Facilities(const AnyInstance& instance);
const Metric& MetricOf(const AnyInstance& instance);
int KOf(const AnyInstance& instance);
int ZOf(const AnyInstance& instance);
std::string KindName(const AnyInstance& instance);

struct CostResult {
  Length cost = 0.0;
  std::vector<PointId> outliers;  // ascending ids
};

// Drops the z clients farthest from `centers` (ties: larger id dropped first)
// and returns the largest remaining distance, or 0 if every client is dropped.
// `centers` must be nonempty.
CostResult EvaluateCost(const Metric& metric, std::span<const PointId> clients,
                        std::span<const PointId> centers, int z);

// Same as EvaluateCost, reading clients, metric and z from the instance;
// rejects an empty center set.
absl::StatusOr<CostResult> Cost(const AnyInstance& instance,
                                std::span<const PointId> centers);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::string> violations;
};

FeasibilityReport CheckFeasibility(const FairKCenterInstance& instance,
                                   std::span<const PointId> centers);
FeasibilityReport CheckFeasibility(const FairSupplierInstance& instance,
                                   std::span<const PointId> centers);
FeasibilityReport CheckFeasibility(const ColorfulInstance& instance,
                                   std::span<const PointId> centers);
FeasibilityReport CheckFeasibility(const FairRangeInstance& instance,
                                   std::span<const PointId> centers);
FeasibilityReport CheckFeasibility(const AnyInstance& instance,
                                   std::span<const PointId> centers);

struct ValidationIssue {
  enum class Code {
    kBadParameter,
    kIdOutOfRange,
    kNotAPartition,
    kBoundOutOfRange,
    kBoundCountMismatch,
    kAggregateBoundsBelowK,
    kEmptyGroup,
    kWrongClassCount,
    kInfeasibleRange,
    kRoleMismatch,
  };
  Code code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  // z >= number of clients: accepted, every solution costs 0.
  bool degenerate = false;

  bool ok() const { return issues.empty(); }
  bool Has(ValidationIssue::Code code) const;
  std::string ToString() const;
};

ValidationReport Validate(const FairKCenterInstance& instance);
ValidationReport Validate(const FairSupplierInstance& instance);
ValidationReport Validate(const ColorfulInstance& instance);
ValidationReport Validate(const FairRangeInstance& instance);
ValidationReport Validate(const AnyInstance& instance);

}  // namespace fairkc

#endif  // FAIRKC_INSTANCE_H_
