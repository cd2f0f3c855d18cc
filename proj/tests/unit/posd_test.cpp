// Copyright 2026 The seqdict Authors.
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

#include <gtest/gtest.h>

#include "reference.hpp"
#include "seqdict/posd.hpp"

namespace seqdict {
namespace {

using testing::q;

TEST(PosdTest, RatioConvention) {
  EXPECT_EQ(welfare_ratio(Value(3), Value(2)), q("3/2"));
  EXPECT_EQ(welfare_ratio(Value(0), Value(0)), Value(1));
  EXPECT_FALSE(welfare_ratio(Value(1), Value(0)).has_value());
}

TEST(PosdTest, SatInstance) {
  const PosdReport r = price_of_serial_dictatorship(posd_sat_instance(q("1/10")));
  EXPECT_EQ(r.optimum, q("57/10"));
  EXPECT_EQ(r.best.welfare, q("39/10"));
  EXPECT_EQ(r.ratio, q("19/13"));
}

TEST(PosdTest, SatRatioApproachesThreeHalves) {
  const Value target = q("3/2") - q("1/100");
  const PosdReport r = price_of_serial_dictatorship(posd_sat_instance(q("1/1000")));
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_GT(*r.ratio, target);
  EXPECT_LT(*r.ratio, q("3/2"));
}

TEST(PosdTest, PathsInstance) {
  const PosdReport r = price_of_serial_dictatorship(posd_paths_instance(q("1/10")));
  EXPECT_EQ(r.optimum, 3);
  EXPECT_EQ(r.best.welfare, q("11/5"));
  EXPECT_EQ(r.ratio, q("15/11"));
}

TEST(PosdTest, PathsRatioApproachesThreeHalves) {
  const PosdReport r = price_of_serial_dictatorship(posd_paths_instance(q("1/10000")));
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_GT(*r.ratio, q("3/2") - q("1/1000"));
}

TEST(PosdTest, OsiAndOssWitnessInstance) {
  const OsiInstance empty{std::vector<std::vector<bool>>(3, std::vector<bool>(3, false))};
  const PosdReport r = price_of_serial_dictatorship(empty);
  EXPECT_EQ(r.optimum, 3);
  EXPECT_EQ(r.ratio, Value(1));
  const PosdReport witness = price_of_serial_dictatorship(oss_nonmonotone_instance());
  EXPECT_EQ(witness.optimum, 11);
  EXPECT_EQ(witness.ratio, Value(1));
}

TEST(PosdTest, AtLeastOneOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::vector<StructuredInstance> instances{
        random_matching_instance(n, seed), random_digraph_instance(n, seed),
        random_sat_instance(n, 5, 3, seed), random_osi_instance(n, seed), random_paths_instance(n, seed)};
    for (const auto& inst : instances) {
      const PosdReport r = price_of_serial_dictatorship(inst);
      if (r.best.welfare > 0) {
        ASSERT_TRUE(r.ratio.has_value());
        EXPECT_GE(*r.ratio, 1);
      }
      ValuationOracle o = make_oracle(inst);
      EXPECT_EQ(o.n(), n);
    }
  }
}

TEST(PosdTest, CapsPropagate) {
  EnumerationCaps caps;
  caps.permutation = 3;
  EXPECT_THROW(price_of_serial_dictatorship(random_matching_instance(4, 1), caps), CapExceeded);
}

}  // namespace
}  // namespace seqdict
