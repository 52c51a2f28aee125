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
#include <map>
#include <random>
#include <set>

#include "fairkc/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "support/reference.h"

namespace fairkc {
namespace {

using ::testing::ElementsAre;
using ::testing::SizeIs;

TEST(FairToUnitSupplierTest, DuplicatesEachGroupByItsBound) {
  // X = {a, b} in one group with bound 2.
  Metric m = testing::LineMetric({0, 4});
  FairKCenterInstance in{m, 2, 0, {{0, 1}}, {2}};
  UnitReduction r = *FairToUnitSupplier(in);
  EXPECT_THAT(r.instance.clients, ElementsAre(0, 1));
  EXPECT_THAT(r.instance.facilities, SizeIs(4));
  ASSERT_THAT(r.instance.groups, SizeIs(2));
  EXPECT_THAT(r.instance.groups[0], ElementsAre(2, 3));
  EXPECT_THAT(r.instance.groups[1], ElementsAre(4, 5));
  EXPECT_EQ(r.back_map.origin[2].point, 0);
  EXPECT_EQ(r.back_map.origin[3].point, 1);
  EXPECT_EQ(r.back_map.origin[4].copy, 1);
  // A copy sits at distance 0 from its origin and inherits its distances.
  EXPECT_EQ(r.instance.metric(2, 0), 0.0);
  EXPECT_EQ(r.instance.metric(4, 1), 4.0);
}

TEST(FairToUnitSupplierTest, ZeroBoundGroupContributesNothing) {
  Metric m = testing::LineMetric({0, 1, 2});
  FairKCenterInstance in{m, 1, 0, {{0}, {1, 2}}, {0, 1}};
  UnitReduction r = *FairToUnitSupplier(in);
  ASSERT_THAT(r.instance.groups, SizeIs(1));
  EXPECT_EQ(r.back_map.unit_groups[0].group, 1);
  for (PointId f : r.instance.facilities) EXPECT_NE(r.back_map.origin[f].point, 0);
}

TEST(FairToUnitSupplierTest, RejectsInvalidInput) {
  Metric m = testing::LineMetric({0, 1});
  EXPECT_FALSE(FairToUnitSupplier(FairKCenterInstance{m, 2, 0, {{0, 1}}, {1}}).ok());
}

TEST(FairRangeToUnitSupplierTest, EqualityThenSlackCopies) {
  Metric m = testing::LineMetric({0, 1, 2, 3});
  FairRangeInstance in{m, 3, 0, {{0, 1}, {2, 3}}, {1, 0}, {3, 1}};
  UnitReduction r = *FairRangeToUnitSupplier(in);
  ASSERT_THAT(r.back_map.unit_groups, SizeIs(4));
  EXPECT_EQ(r.back_map.unit_groups[0].tag, CopyTag::kEquality);
  EXPECT_EQ(r.back_map.unit_groups[1].tag, CopyTag::kSlack);
  EXPECT_EQ(r.back_map.unit_groups[2].tag, CopyTag::kSlack);
  EXPECT_EQ(r.back_map.unit_groups[3].group, 1);
  EXPECT_EQ(r.back_map.unit_groups[3].tag, CopyTag::kSlack);
}

TEST(FairRangeToUnitSupplierTest, VacuousLowerBoundsMatchUpperReduction) {
  const FairRangeInstance range = testing::RandomFairRange(4, 8, 2, 1, 2);
  FairRangeInstance vacuous = range;
  vacuous.lower_bounds.assign(2, 0);
  vacuous.upper_bounds.assign(2, 2);
  FairKCenterInstance fair{range.metric, 2, 1, range.groups, {2, 2}};
  UnitReduction a = *FairRangeToUnitSupplier(vacuous);
  UnitReduction b = *FairToUnitSupplier(fair);
  EXPECT_EQ(a.instance.facilities, b.instance.facilities);
  EXPECT_EQ(a.instance.groups, b.instance.groups);
  for (const auto& u : a.back_map.unit_groups) EXPECT_EQ(u.tag, CopyTag::kSlack);
}

TEST(FairRangeToUnitSupplierTest, AllEqualityGroupsMapBackExactly) {
  // l = u = (1, 1), k = 2: every colorful solution under a separating
  // coloring takes one center per group.
  Metric m = testing::LineMetric({0, 1, 5, 6});
  FairRangeInstance in{m, 2, 0, {{0, 1}, {2, 3}}, {1, 1}, {1, 1}};
  UnitReduction r = *FairRangeToUnitSupplier(in);
  ColoredInstance j = ApplyColoring(r.instance, Coloring{{0, 1}, {}, {}});
  for (PointId a : j.instance.classes[0])
    for (PointId b : j.instance.classes[1]) {
      Solution t;
      t.centers = {a, b};
      Solution s = MapBack(t, r.back_map, AnyInstance(in));
      EXPECT_TRUE(CheckFeasibility(in, s.centers).feasible);
    }
}

TEST(MapBackTest, SingleCopyKeepsCost) {
  Metric m = testing::LineMetric({0, 4});
  FairKCenterInstance in{m, 2, 0, {{0, 1}}, {2}};
  UnitReduction r = *FairToUnitSupplier(in);
  Solution t;
  t.centers = {2};  // (a, 1, 1)
  t.cost = EvaluateCost(r.instance.metric, r.instance.clients, t.centers, 0).cost;
  Solution s = MapBack(t, r.back_map, AnyInstance(in));
  EXPECT_THAT(s.centers, ElementsAre(0));
  EXPECT_EQ(s.cost, t.cost);
}

TEST(MapBackTest, DuplicateCopiesCollapse) {
  Metric m = testing::LineMetric({0, 4});
  FairKCenterInstance in{m, 2, 0, {{0, 1}}, {2}};
  UnitReduction r = *FairToUnitSupplier(in);
  Solution t;
  t.centers = {2, 4};  // (a, 1, 1) and (a, 1, 2)
  Solution s = MapBack(t, r.back_map, AnyInstance(in));
  EXPECT_THAT(s.centers, ElementsAre(0));
  EXPECT_TRUE(CheckFeasibility(in, s.centers).feasible);
  EXPECT_EQ(s.cost, 4.0);
}

TEST(ReductionPropertyTest, CostsAgreeBothWays) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    FairKCenterInstance in = testing::RandomFair(trial, 9, 1 + trial % 3, trial % 3,
                                                 1 + trial % 3);
    UnitReduction r = *FairToUnitSupplier(in);
    const std::vector<PointId> s = testing::RandomFeasibleCenters(rng, in);
    const std::vector<PointId> t = *ImageInReduced(s, r.back_map);
    EXPECT_TRUE(CheckFeasibility(r.instance, t).feasible);
    EXPECT_EQ(EvaluateCost(in.metric, AllPoints(in.metric), s, in.z).cost,
              EvaluateCost(r.instance.metric, r.instance.clients, t, in.z).cost);
    // Any feasible reduced set maps back to a feasible set of equal cost.
    std::vector<PointId> pick;
    for (const auto& g : r.instance.groups)
      if (rng() % 2 && static_cast<int>(pick.size()) < in.k)
        pick.push_back(g[rng() % g.size()]);
    if (pick.empty()) pick.push_back(r.instance.groups[0][0]);
    Solution reduced;
    reduced.centers = pick;
    reduced.cost = EvaluateCost(r.instance.metric, r.instance.clients, pick, in.z).cost;
    Solution back = MapBack(reduced, r.back_map, AnyInstance(in));
    EXPECT_TRUE(CheckFeasibility(in, back.centers).feasible);
    EXPECT_EQ(back.cost, reduced.cost);
  }
}

TEST(ReductionPropertyTest, OptimumIsPreserved) {
  for (int trial = 0; trial < 40; ++trial) {
    FairKCenterInstance in = testing::RandomFair(100 + trial, 8, 2, 1, 2);
    UnitReduction r = *FairToUnitSupplier(in);
    EXPECT_EQ(BruteForceFair(in)->radius, BruteForceSupplier(r.instance)->radius);
    EXPECT_EQ(BruteForceFair(in)->radius, testing::RefFairOpt(in));
  }
}

TEST(ColorCodeTest, ClassesPartitionFacilities) {
  FairKCenterInstance in = testing::RandomFair(5, 8, 3, 1, 3);
  UnitReduction r = *FairToUnitSupplier(in);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    ColoredInstance j = ColorCode(r.instance, seed);
    std::size_t total = 0;
    std::set<PointId> seen;
    for (const auto& cls : j.instance.classes) {
      total += cls.size();
      seen.insert(cls.begin(), cls.end());
    }
    EXPECT_EQ(total, r.instance.facilities.size());
    EXPECT_EQ(seen.size(), r.instance.facilities.size());
    EXPECT_EQ(j.coloring.seed, seed);
    EXPECT_EQ(ColorCode(r.instance, seed).coloring.color_of_group,
              j.coloring.color_of_group);
  }
}

TEST(ColorCodeTest, TwoGroupsTwoColorsAreEquallyLikely) {
  Metric m = testing::LineMetric({0, 1});
  FairSupplierInstance unit{m, {0, 1}, {0, 1}, 2, 0, {{0}, {1}}};
  std::map<std::vector<int>, int> counts;
  for (uint64_t seed = 0; seed < 4000; ++seed)
    ++counts[ColorCode(unit, seed).coloring.color_of_group];
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [assignment, count] : counts) EXPECT_NEAR(count, 1000, 120);
}

TEST(ColorCodeTest, FeasibleColorfulSolutionsAreFeasibleForTheReduction) {
  FairKCenterInstance in = testing::RandomFair(9, 8, 2, 1, 2);
  UnitReduction r = *FairToUnitSupplier(in);
  ColoredInstance j = ColorCode(r.instance, 3);
  if (j.has_empty_class) GTEST_SKIP() << "coloring left a class empty";
  for (PointId a : j.instance.classes[0])
    for (PointId b : j.instance.classes[1])
      EXPECT_TRUE(CheckFeasibility(r.instance, std::vector<PointId>{a, b}).feasible);
}

TEST(ColoringEnumeratorTest, TwoGroupsTwoColors) {
  Metric m = testing::LineMetric({0, 1});
  FairSupplierInstance unit{m, {0, 1}, {0, 1}, 2, 0, {{0}, {1}}};
  auto e = *ColoringEnumerator::Create(unit, 100);
  EXPECT_EQ(e.total(), 4u);
  std::vector<std::vector<int>> seen;
  while (auto c = e.NextColoring()) seen.push_back(c->color_of_group);
  EXPECT_THAT(seen, ElementsAre(ElementsAre(0, 1), ElementsAre(1, 0)));
}

TEST(ColoringEnumeratorTest, SurjectionCountMatchesInclusionExclusion) {
  Metric m = testing::LineMetric({0, 1, 2, 3, 4});
  for (int groups = 1; groups <= 5; ++groups) {
    for (int k = 1; k <= 3; ++k) {
      FairSupplierInstance unit{m, {}, {0}, k, 0, {}};
      for (int g = 0; g < groups; ++g) {
        unit.facilities.push_back(g);
        unit.groups.push_back({g});
      }
      auto e = *ColoringEnumerator::Create(unit, 1000);
      uint64_t count = 0, last = 0;
      while (auto c = e.Next()) {
        EXPECT_FALSE(c->has_empty_class);
        if (count > 0) {
          EXPECT_GT(*c->coloring.enumeration_index, last);
        }
        last = *c->coloring.enumeration_index;
        ++count;
      }
      EXPECT_EQ(count, testing::RefSurjections(groups, k)) << groups << " " << k;
    }
  }
  // Frozen: three groups onto two colors.
  EXPECT_EQ(testing::RefSurjections(3, 2), 6u);
}

TEST(ColoringEnumeratorTest, IdentityColoringIsIncluded) {
  Metric m = testing::LineMetric({0, 1, 2});
  FairSupplierInstance unit{m, {0, 1, 2}, {0}, 3, 0, {{0}, {1}, {2}}};
  auto e = *ColoringEnumerator::Create(unit, 1000);
  bool found = false;
  while (auto c = e.NextColoring())
    if (c->color_of_group == std::vector<int>{0, 1, 2}) found = true;
  EXPECT_TRUE(found);
}

TEST(ColoringEnumeratorTest, RefusesAboveCap) {
  Metric m = testing::LineMetric({0, 1, 2});
  FairSupplierInstance unit{m, {0, 1, 2}, {0}, 3, 0, {{0}, {1}, {2}}};
  EXPECT_EQ(ColoringEnumerator::Create(unit, 26).status().code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(ColoringTest, CanonicalFormAndTrialCount) {
  EXPECT_TRUE(IsCanonicalColoring(std::vector<int>{0, 0, 1, 2, 1}));
  EXPECT_FALSE(IsCanonicalColoring(std::vector<int>{1, 0}));
  EXPECT_FALSE(IsCanonicalColoring(std::vector<int>{0, 2, 1}));
  EXPECT_EQ(ColoringCount(3, 4), 81u);
  EXPECT_EQ(ColoringCount(2, 70), UINT64_MAX);
  // ceil(e^2 ln 100) = ceil(34.03) = 35.
  EXPECT_EQ(RandomTrialCount(2, 0.01), 35u);
}

}  // namespace
}  // namespace fairkc
