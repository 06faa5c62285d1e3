// Copyright 2026 The wreathgrowth Authors.
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

// Checks that take minutes.

#include "gtest/gtest.h"
#include "wreathgrowth/invorbit.h"
#include "wreathgrowth/metrics.h"

namespace wreathgrowth {
namespace {

TEST(SlowTest, UpperGRecursionToRadiusSix) {
  const auto rep = metrics::UpperGRecursionCheck(OmegaSeq::Periodic("012"), 6,
                                                 1, "012", 100'000'000);
  ASSERT_EQ(rep.rows.size(), 7u);
  EXPECT_TRUE(rep.pass) << rep.ToJson().dump();
  EXPECT_EQ(rep.rows[6].lhs, 6250615);
}

TEST(SlowTest, WeightedDeltaAtWitnessDepthThree) {
  const OmegaSeq omega = OmegaSeq::Periodic("012");
  selfsim::GrigGroup g(selfsim::Preset::kFamily, omega);
  const auto weights = metrics::OmegaNorms(omega, 1)[0].Weights();
  const auto w = invorbit::WitnessWord(3);
  invorbit::EnumerationLimits limits;
  limits.max_words = 400'000'000;
  const auto t =
      invorbit::DeltaSigma(g, w.predicted + 1e-9, weights, schreier::Xi(), limits);
  EXPECT_GE(t.delta_max, w.orbit_size);
  EXPECT_GE(t.delta_max, 8);
}

}  // namespace
}  // namespace wreathgrowth
