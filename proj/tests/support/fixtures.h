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

#ifndef FAIRKC_TESTS_SUPPORT_FIXTURES_H_
#define FAIRKC_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "fairkc/instance.h"
#include "fairkc/metric.h"

namespace fairkc::testing {

// Points on a line at the given positions (1-D Euclidean).
Metric LineMetric(const std::vector<double>& positions);

// n random integer points in [0, span)^2 under L1; exact integer distances.
Metric RandomGridMetric(std::mt19937_64& rng, int n, int span);

// Uniformly random group labels, every group nonempty (needs n >= groups).
std::vector<std::vector<PointId>> RandomPartition(std::mt19937_64& rng,
                                                  const std::vector<PointId>& ids,
                                                  int groups);

FairKCenterInstance RandomFair(uint64_t seed, int n, int k, int z, int groups);
FairRangeInstance RandomFairRange(uint64_t seed, int n, int k, int z, int groups);
// `clients` clients followed by `facilities` facilities in k classes.
ColorfulInstance RandomColorful(uint64_t seed, int clients, int facilities, int k,
                                int z);

// Two-color instance whose first guided iteration has neither a nearby nor a
// good ball: eight decoy facilities of class 0, each within r of seven
// outliers and one point of cluster 1, outrank the optimal class-0 center.
// Coordinates are rotated by `rotation` radians and scaled by `scale`.
ColorfulInstance LightPairGadget(double rotation, double scale);

// A center set feasible for `in`, drawn at random.
std::vector<PointId> RandomFeasibleCenters(std::mt19937_64& rng,
                                           const FairKCenterInstance& in);

}  // namespace fairkc::testing

#endif  // FAIRKC_TESTS_SUPPORT_FIXTURES_H_
