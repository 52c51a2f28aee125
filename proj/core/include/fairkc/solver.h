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

#ifndef FAIRKC_SOLVER_H_
#define FAIRKC_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairkc/client_set.h"
#include "fairkc/instance.h"
#include "fairkc/metric.h"
#include "fairkc/reductions.h"
#include "fairkc/trace.h"

namespace fairkc {

// Per-radius lookup tables for one colorful instance: for every facility, the
// clients within r and within 3r, as bitsets over client positions.
class SearchContext {
 public:
  SearchContext(const ColorfulInstance& instance, Length radius);

  const ColorfulInstance& instance() const { return *instance_; }
  Length radius() const { return radius_; }
  int k() const { return instance_->k; }
  std::size_t client_count() const { return instance_->clients.size(); }
  // Clients that must be covered: |C| - z, floored at 0.
  std::size_t required_coverage() const { return required_; }

  // Facility slots of color class c, ascending by point id.
  const std::vector<int>& class_slots(int c) const { return class_slots_[c]; }
  PointId facility(int slot) const { return facility_[slot]; }
  int color(int slot) const { return color_[slot]; }
  int SlotOf(PointId facility) const { return slot_of_[facility]; }
  const ClientSet& WithinRadius(int slot) const { return within_r_[slot]; }
  const ClientSet& WithinTripleRadius(int slot) const { return within_3r_[slot]; }
  // Facility slots within 2r of facility slot `slot` (a set over slots).
  const ClientSet& NearbyFacilities(int slot) const { return within_2r_[slot]; }
  std::size_t facility_count() const { return facility_.size(); }
  PointId ClientId(std::size_t position) const {
    return instance_->clients[position];
  }

 private:
  const ColorfulInstance* instance_;
  Length radius_;
  std::size_t required_;
  std::vector<std::vector<int>> class_slots_;
  std::vector<PointId> facility_;
  std::vector<int> color_;
  std::vector<int> slot_of_;
  std::vector<ClientSet> within_r_;
  std::vector<ClientSet> within_3r_;
  std::vector<ClientSet> within_2r_;
};

// Remaining clients, marked colors and commitments along one search path.
struct SolverState {
  ClientSet remaining;
  uint64_t marked = 0;  // bit c set once color c has a center
  std::vector<std::pair<int, PointId>> committed;  // (color, facility)

  static SolverState Initial(const SearchContext& context);
  bool IsMarked(int color) const { return (marked >> color) & 1u; }
};

// A radius-r ball built by SettleBalls. `covered` is the set of clients it
// captured out of the shrinking working set at construction time.
struct BallRecord {
  PointId center = -1;
  int color = -1;
  ClientSet covered;
  std::size_t size = 0;
};

// Greedy densest-first disjoint balls of color `color` over the remaining
// clients: at most min(|F_color|, 4k) balls, ties to the smallest facility
// id, empty balls included.
std::vector<BallRecord> SettleBalls(const SearchContext& context,
                                    const SolverState& state, int color);

// Facility of class `target_color` within 2r of both ball centers that covers
// the most remaining clients at radius 3r (ties: smallest id), if any.
std::optional<PointId> SelectHardPickCenter(const SearchContext& context,
                                            const SolverState& state,
                                            const BallRecord& a,
                                            const BallRecord& b,
                                            int target_color);

// SelectHardPickCenter with |WithinTripleRadius(slot) ∩ C'| supplied per slot.
std::optional<PointId> SelectHardPickCenter(const SearchContext& context,
                                            std::span<const std::size_t> gain,
                                            const BallRecord& a,
                                            const BallRecord& b,
                                            int target_color);

// Remaining clients within 3r of `facility`.
ClientSet Expansion(const SearchContext& context, const SolverState& state,
                    PointId facility);

struct SearchLimits {
  uint64_t max_nodes = 100'000'000;  // per radius
  std::optional<std::chrono::milliseconds> time_budget;  // per radius
  // Skip states (marked colors, remaining clients) already proven to fail.
  bool memoize_failures = true;
  std::size_t memo_capacity = 1u << 20;
  // Prune a node when even the best 3r-ball of every unmarked color cannot
  // reach |C| - z coverage.
  bool coverage_bound = true;
  // With two or more unmarked colors, also prune when no facility f of the
  // smallest unmarked class reaches |C| - z with f's 3r-ball plus the best
  // marginal 3r-ball of every other unmarked color.
  bool marginal_bound = true;
};

// Worst-case branch count at one radius: (k (4k + C(4k,2) k))^k, saturating.
uint64_t NodeCap(int k);

struct BranchOutcome {
  enum class Status { kFound, kExhausted, kNodeLimit, kTimeLimit };
  Status status = Status::kExhausted;
  std::optional<Solution> solution;  // kFound only; carries the trace
  SearchStats stats;
};

// Depth-first search over the k iterations at a fixed radius. Children of a
// node, in order: for every unmarked build color j, one easy pick per ball
// of SettleBalls(j), then one hard pick per ball pair and unmarked target
// color. Returns the first leaf whose 3r-balls cover at least |C| - z clients.
BranchOutcome BranchSolve(const SearchContext& context, const SearchLimits& limits);
BranchOutcome BranchSolve(const ColorfulInstance& instance, Length radius,
                          const SearchLimits& limits);

// Necessary condition for BranchSolve to succeed at `radius`; monotone in
// the radius.
bool PassesRootCoverageBound(const ColorfulInstance& instance, Length radius);

// Necessary condition from SearchLimits::marginal_bound at the root. Not
// monotone, but failure at a radius implies failure at every smaller one, so
// a binary search that only moves past failing radii skips no success.
bool PassesRootMarginalBound(const ColorfulInstance& instance, Length radius);

enum class RadiusMode { kScan, kBinary };

struct ColorfulOptions {
  RadiusMode radius_mode = RadiusMode::kScan;
  // Binary mode: how many radii below the found one are re-checked.
  int verify_window = 3;
  // Skip a prefix of radii proven to fail by PassesRootCoverageBound and
  // PassesRootMarginalBound.
  bool skip_by_root_bound = true;
  // Give up (without error) once the scan reaches a radius >= this value.
  std::optional<Length> stop_at;
  SearchLimits limits;
};

struct ColorfulResult {
  std::optional<Solution> solution;  // empty only when cut off by stop_at
  Length radius = 0.0;
  SearchStats stats;
};

// Ascending scan over candidate radii; returns the first success, whose cost
// is at most 3 times that radius.
absl::StatusOr<ColorfulResult> SolveColorful(const ColorfulInstance& instance,
                                             const ColorfulOptions& options = {});

enum class ColoringMode { kAuto, kExhaustive, kRandom };

struct PipelineOptions {
  ColoringMode coloring_mode = ColoringMode::kAuto;
  uint64_t enumeration_cap = 1'000'000;
  // Random mode: 0 means RandomTrialCount(k, delta).
  uint64_t trials = 0;
  double delta = 0.01;
  uint64_t seed = 0;
  // Solve one coloring per class of color relabelings. Random mode skips a
  // trial whose coloring relabels an earlier trial's.
  bool skip_relabelings = true;
  // Stop a coloring's radius scan at the smallest radius at which an earlier
  // coloring produced an accepted solution. The returned cost stays within 3
  // times that radius.
  bool prune_by_incumbent = true;
  ColorfulOptions colorful;
};

struct TrialRecord {
  enum class Outcome {
    kSolved,
    kCutOff,
    kEmptyClass,
    kLowerBoundRejected,
    kRepeated,  // relabeling of an earlier trial's coloring; not solved again
  };
  uint64_t index = 0;
  Coloring coloring;
  Outcome outcome = Outcome::kSolved;
  std::optional<Length> radius;
  std::optional<Length> cost;
  uint64_t nodes = 0;
};

struct PipelineReport {
  std::optional<Solution> solution;
  std::string failure;  // set when no feasible solution was found
  std::string coloring_mode;
  uint64_t colorings_total = 0;
  uint64_t colorings_solved = 0;
  uint64_t skipped_relabelings = 0;
  uint64_t empty_class_discards = 0;
  uint64_t lower_bound_rejections = 0;
  SearchStats stats;
  std::vector<TrialRecord> trials;
};

// Reduce to unit groups, color, solve each colorful instance, map back,
// keep the cheapest solution that is feasible for the original instance.
// Resource limits surface as ResourceExhausted / DeadlineExceeded.
absl::StatusOr<PipelineReport> SolvePipeline(const AnyInstance& instance,
                                             const PipelineOptions& options = {});

}  // namespace fairkc

#endif  // FAIRKC_SOLVER_H_
