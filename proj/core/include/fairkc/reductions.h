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

#ifndef FAIRKC_REDUCTIONS_H_
#define FAIRKC_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "fairkc/instance.h"
#include "fairkc/metric.h"

namespace fairkc {

// Role of a unit group created from a demographic group.
enum class CopyTag {
  kUpper,     // upper-bound copy (plain fair instances)
  kEquality,  // fair-range copy that enforces a lower bound
  kSlack,     // fair-range copy that grants room up to the upper bound
};

// Where a point of the reduced instance came from: copy number `copy` of
// original point `point` made for demographic group `group`. Clients are
// their own origin with group == -1.
struct CopyOrigin {
  PointId point = -1;
  int group = -1;
  int copy = -1;
  CopyTag tag = CopyTag::kUpper;
};

struct UnitGroupInfo {
  int group = -1;
  int copy = -1;
  CopyTag tag = CopyTag::kUpper;
};

struct BackMap {
  // Indexed by point id of the reduced instance.
  std::vector<CopyOrigin> origin;
  // Indexed by unit group of the reduced instance.
  std::vector<UnitGroupInfo> unit_groups;
};

struct UnitReduction {
  FairSupplierInstance instance;
  BackMap back_map;
};

// Duplicates group X_i k_i times. Clients of the result are the original
// points under their original ids; facility copies follow at ids >= n and sit
// at distance 0 from their origin.
absl::StatusOr<UnitReduction> FairToUnitSupplier(const FairKCenterInstance& in);

// Per group G_i: lower_bounds[i] equality copies followed by
// upper_bounds[i] - lower_bounds[i] slack copies.
absl::StatusOr<UnitReduction> FairRangeToUnitSupplier(const FairRangeInstance& in);

// Unit-requirement supplier input needs no duplication.
absl::StatusOr<UnitReduction> IdentityReduction(const FairSupplierInstance& in);

// Image of an original feasible center set: each center takes the next unused
// copy of its group (equality copies before slack copies).
absl::StatusOr<std::vector<PointId>> ImageInReduced(
    std::span<const PointId> centers, const BackMap& back_map);

// Replaces every copy by its origin, collapses duplicates and recomputes cost
// and outliers on the original instance.
Solution MapBack(const Solution& reduced, const BackMap& back_map,
                 const AnyInstance& original);

struct Coloring {
  std::vector<int> color_of_group;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> enumeration_index;
};

struct ColoredInstance {
  ColorfulInstance instance;
  Coloring coloring;
  // Some color received no unit group; such an instance has no solution.
  bool has_empty_class = false;
};

// Merges the unit groups of `reduced` into k classes as `coloring` dictates.
ColoredInstance ApplyColoring(const FairSupplierInstance& reduced,
                              Coloring coloring);

// Colors every unit group uniformly at random from [0, k), seeded.
ColoredInstance ColorCode(const FairSupplierInstance& reduced, uint64_t seed);

// k^groups, saturating at UINT64_MAX.
uint64_t ColoringCount(int k, std::size_t groups);

// Lexicographic walk over all k^groups assignments that yields only the
// surjective ones; each carries its base-k enumeration index.
class ColoringEnumerator {
 public:
  // Fails with ResourceExhausted when k^groups > cap. `reduced` must outlive
  // the enumerator.
  static absl::StatusOr<ColoringEnumerator> Create(
      const FairSupplierInstance& reduced, uint64_t cap);

  // Next surjective assignment without materializing the instance.
  std::optional<Coloring> NextColoring();
  std::optional<ColoredInstance> Next();

  uint64_t total() const { return total_; }

 private:
  ColoringEnumerator(const FairSupplierInstance* reduced, uint64_t total);

  const FairSupplierInstance* reduced_;
  uint64_t total_;
  uint64_t index_ = 0;
  std::vector<int> digits_;
};

// True when colors appear in first-occurrence order 0, 1, 2, ... Every
// surjective coloring is a relabeling of exactly one canonical coloring.
bool IsCanonicalColoring(std::span<const int> color_of_group);

// Number of random colorings that finds a good one with probability 1 - delta
// when each succeeds with probability k!/k^k >= e^-k: ceil(e^k ln(1/delta)).
uint64_t RandomTrialCount(int k, double delta);

}  // namespace fairkc

#endif  // FAIRKC_REDUCTIONS_H_
