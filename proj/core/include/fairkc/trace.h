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

#ifndef FAIRKC_TRACE_H_
#define FAIRKC_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairkc/metric.h"

namespace fairkc {

// One committed iteration of the branching search.
struct TraceStep {
  enum class Decision { kEasy, kHard };

  int iteration = 0;
  int build_color = 0;
  Decision decision = Decision::kEasy;
  // Centers of every ball produced by the settle call, in construction order.
  std::vector<PointId> ball_centers;
  // kEasy: index of the chosen ball. kHard: the chosen pair.
  int ball_index = -1;
  int ball_a = -1;
  int ball_b = -1;
  PointId committed = -1;
  int marked = -1;
  int covered_new = 0;
};

// Where the colorful instance behind a solution came from.
struct ColoringProvenance {
  std::string mode;  // "exhaustive", "random" or "given"
  std::optional<uint64_t> seed;
  std::optional<uint64_t> enumeration_index;
  std::vector<int> assignment;  // color of each unit group
};

struct SearchStats {
  uint64_t nodes = 0;  // committed children, the root excluded
  uint64_t settle_calls = 0;
  uint64_t memo_hits = 0;
  uint64_t bound_prunes = 0;
  uint64_t hard_picks_without_center = 0;
  uint64_t geometry_violations = 0;
  uint64_t ball_cap_violations = 0;
  uint64_t max_balls_per_call = 0;
  uint64_t max_nodes_per_radius = 0;
  uint64_t radii_tried = 0;

  SearchStats& operator+=(const SearchStats& o);
};

struct BranchTrace {
  Length radius = 0.0;
  std::vector<TraceStep> steps;
  std::optional<ColoringProvenance> coloring;
  SearchStats stats;
};

}  // namespace fairkc

#endif  // FAIRKC_TRACE_H_
