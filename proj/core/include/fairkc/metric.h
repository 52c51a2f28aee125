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

#ifndef FAIRKC_METRIC_H_
#define FAIRKC_METRIC_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace fairkc {

// Dense index of a point inside one Metric, in [0, size()).
using PointId = int32_t;

// Distances are plain doubles and are compared exactly everywhere. Every
// radius a solver tries is itself a realized distance (see CandidateRadii).
using Length = double;

// Immutable, cheaply copyable distance oracle over a finite point set.
//
// Three storage kinds:
//  * matrix: a full symmetric n x n table,
//  * coords: Euclidean coordinates; the full table is built on first use when
//    n <= cache_threshold, otherwise each query recomputes the distance,
//  * alias: every point is a copy of a point of a base metric. Copies of one
//    base point sit at distance 0 from each other, which makes the result a
//    pseudometric.
//
// Copies share the underlying storage, and concurrent reads are safe.
class Metric {
 public:
  enum class Kind { kMatrix, kCoords, kAlias };

  static constexpr std::size_t kDefaultCacheThreshold = 4096;

  Metric();

  static absl::StatusOr<Metric> FromMatrix(std::vector<std::vector<Length>> rows);
  static absl::StatusOr<Metric> FromCoords(
      std::vector<std::vector<double>> coords,
      std::size_t cache_threshold = kDefaultCacheThreshold);
  // Point p of the result is a copy of origins[p] in base.
  static absl::StatusOr<Metric> Alias(const Metric& base,
                                      std::vector<PointId> origins);

  std::size_t size() const;
  Kind kind() const;

  // Unchecked hot-path lookup; u and v must be in range.
  Length operator()(PointId u, PointId v) const;
  // Checked lookup for external callers.
  absl::StatusOr<Length> Distance(PointId u, PointId v) const;

  // Point of the base metric that p was copied from (p itself unless alias).
  PointId Origin(PointId p) const;

  const std::vector<std::vector<double>>& coords() const;
  std::vector<std::vector<Length>> ToMatrix() const;

 private:
  struct Storage;
  explicit Metric(std::shared_ptr<const Storage> storage);
  std::shared_ptr<const Storage> storage_;
};

// {p in candidates : d(p, center) <= radius}, in candidate order.
std::vector<PointId> Ball(const Metric& metric, PointId center, Length radius,
                          std::span<const PointId> candidates);

// Sorted, deduplicated {d(c, f)} over client/facility pairs, plus 0.
absl::StatusOr<std::vector<Length>> CandidateRadii(
    const Metric& metric, std::span<const PointId> facilities,
    std::span<const PointId> clients);

struct MetricViolation {
  enum class Type { kNegative, kAsymmetric, kNonzeroDiagonal, kTriangle };
  Type type;
  PointId u = 0;
  PointId v = 0;
  PointId w = 0;  // middle point of a triangle violation
  std::string ToString() const;
};

struct MetricReport {
  bool nonnegative = true;
  bool symmetric = true;
  bool zero_diagonal = true;
  bool triangle = true;
  // Capped at max_violations entries; the flags above are always exact.
  std::vector<MetricViolation> violations;

  bool ok() const { return nonnegative && symmetric && zero_diagonal && triangle; }
};

// O(n^3) audit of the metric axioms (zero distances between distinct points
// are allowed).
MetricReport VerifyMetric(const Metric& metric, std::size_t max_violations = 16);

}  // namespace fairkc

#endif  // FAIRKC_METRIC_H_
