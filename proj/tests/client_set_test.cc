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

#include "fairkc/client_set.h"

#include <random>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace fairkc {
namespace {

using ::testing::ElementsAre;

TEST(ClientSetTest, FilledRespectsUniverse) {
  ClientSet s(70, true);
  EXPECT_EQ(s.Count(), 70u);
  EXPECT_TRUE(s.Contains(69));
  EXPECT_EQ(ClientSet(64, true).Count(), 64u);
  EXPECT_TRUE(ClientSet(0, true).Empty());
}

TEST(ClientSetTest, InsertEraseMembers) {
  ClientSet s(130);
  s.Insert(0);
  s.Insert(64);
  s.Insert(129);
  EXPECT_THAT(s.Members(), ElementsAre(0, 64, 129));
  s.Erase(64);
  EXPECT_THAT(s.Members(), ElementsAre(0, 129));
  EXPECT_FALSE(s.Empty());
}

TEST(ClientSetTest, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    ClientSet a(n), b(n);
    std::set<std::size_t> sa, sb;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) { a.Insert(i); sa.insert(i); }
      if (rng() % 2 == 0) { b.Insert(i); sb.insert(i); }
    }
    std::size_t inter = 0;
    for (auto x : sa) inter += sb.count(x);
    EXPECT_EQ(a.IntersectCount(b), inter);
    EXPECT_EQ(a.Intersect(b).Count(), inter);
    EXPECT_EQ(a.Union(b).Count(), sa.size() + sb.size() - inter);
    ClientSet d = a;
    d.Subtract(b);
    EXPECT_EQ(d.Count(), sa.size() - inter);
    EXPECT_TRUE(d.IsSubsetOf(a));
    EXPECT_EQ(a.Intersect(b).IsSubsetOf(b), true);
    EXPECT_EQ(a.IsSubsetOf(b), inter == sa.size());
  }
}

}  // namespace
}  // namespace fairkc
