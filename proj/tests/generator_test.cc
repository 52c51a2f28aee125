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

#include "fairkc/generator.h"

#include "fairkc/json_io.h"
#include "fairkc/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace fairkc {
namespace {

TEST(GeneratorTest, SameSeedSameBytes) {
  GenSpec spec;
  spec.seed = 42;
  spec.n = 20;
  spec.k = 3;
  spec.z = 2;
  EXPECT_EQ(Dump(InstanceToJson(*Generate(spec))), Dump(InstanceToJson(*Generate(spec))));
  GenSpec other = spec;
  other.seed = 43;
  EXPECT_NE(Dump(InstanceToJson(*Generate(spec))), Dump(InstanceToJson(*Generate(other))));
}

TEST(GeneratorTest, ZeroSpreadHasZeroOptimum) {
  GenSpec spec;
  spec.seed = 3;
  spec.n = 10;
  spec.k = 2;
  spec.z = 0;
  spec.sigma = 0.0;
  spec.groups = 1;
  AnyInstance in = *Generate(spec);
  auto& fair = std::get<FairKCenterInstance>(in);
  EXPECT_EQ(fair.upper_bounds, std::vector<int>{2});
  EXPECT_EQ(BruteForce(in)->radius, 0.0);
}

TEST(GeneratorTest, SeparatedClustersHaveSmallOptimum) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = 11;
    spec.k = 2;
    spec.z = 2;
    spec.sigma = 1.0;
    spec.separation = 50.0;
    spec.groups = 1;
    AnyInstance in = *Generate(spec);
    EXPECT_LE(BruteForce(in)->radius, 2 * spec.sigma);
  }
}

TEST(GeneratorTest, EveryVariantValidates) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    for (auto problem : {GenSpec::Problem::kFairKCenter, GenSpec::Problem::kFairRange,
                         GenSpec::Problem::kFairSupplier, GenSpec::Problem::kColorful}) {
      for (auto scheme : {GenSpec::GroupScheme::kUniform, GenSpec::GroupScheme::kSkewed,
                          GenSpec::GroupScheme::kForbidden}) {
        GenSpec spec;
        spec.problem = problem;
        spec.scheme = scheme;
        spec.seed = seed;
        spec.n = 12;
        spec.k = 1 + seed % 3;
        spec.z = seed % 3;
        spec.groups = 4;
        spec.matrix = seed % 2 == 0;
        auto in = Generate(spec);
        const bool supplier = problem == GenSpec::Problem::kFairSupplier ||
                              problem == GenSpec::Problem::kColorful;
        if (supplier && scheme == GenSpec::GroupScheme::kForbidden) {
          EXPECT_FALSE(in.ok());
          continue;
        }
        ASSERT_TRUE(in.ok()) << in.status();
        EXPECT_TRUE(Validate(*in).ok()) << Validate(*in).ToString();
        if (spec.matrix) EXPECT_TRUE(VerifyMetric(MetricOf(*in)).ok());
      }
    }
  }
}

TEST(GeneratorTest, ForbiddenGroupHasBoundZero) {
  GenSpec spec;
  spec.scheme = GenSpec::GroupScheme::kForbidden;
  spec.groups = 3;
  spec.n = 12;
  spec.k = 2;
  auto in = std::get<FairKCenterInstance>(*Generate(spec));
  EXPECT_EQ(in.upper_bounds[0], 0);
}

TEST(GeneratorTest, ContradictorySpecsAreRejected) {
  GenSpec spec;
  spec.n = 3;
  spec.k = 3;
  spec.z = 1;
  EXPECT_FALSE(Generate(spec).ok());  // n - outliers < k
  spec = GenSpec();
  spec.outliers = 5;
  spec.z = 1;
  EXPECT_FALSE(Generate(spec).ok());
  spec = GenSpec();
  spec.problem = GenSpec::Problem::kFairSupplier;
  spec.groups = 1;
  spec.k = 2;
  EXPECT_FALSE(Generate(spec).ok());
  spec = GenSpec();
  spec.groups = 2;
  spec.max_bound = 0;
  spec.k = 2;
  spec.n = 2;
  spec.z = 0;
  EXPECT_TRUE(Generate(spec).ok());
}

}  // namespace
}  // namespace fairkc
