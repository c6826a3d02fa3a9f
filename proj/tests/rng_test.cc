// Copyright 2026 The PTIM Decoders Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "ptim/rng.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ptim/estimate.h"
#include "ptim/parallel.h"

namespace ptim {
namespace {

TEST(Rng, SplitMixKnownValue) {
    // First output of SplitMix64 seeded with 0.
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7), e(42, 7, StreamTag::kDecoderCoins);
    uint64_t x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    EXPECT_NE(x, d.next());
    EXPECT_NE(x, e.next());
}

TEST(Rng, BernoulliLimits) {
    RngStream rng(1, 0);
    for (int k = 0; k < 1000; ++k) {
        EXPECT_FALSE(rng.bernoulli(0.0));
        EXPECT_TRUE(rng.bernoulli(1.0));
        double u = rng.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, CoinIsFair) {
    RngStream rng(3, 0);
    const int n = 100000;
    int heads = 0;
    for (int k = 0; k < n; ++k) {
        heads += rng.coin();
    }
    EXPECT_LT(std::abs(heads - n / 2.0), 4 * std::sqrt(n / 4.0));
}

TEST(Estimate, MeanAndStandardError) {
    std::vector<double> v = {1, 0, 1, 1};
    Estimate e = estimate_from(v);
    EXPECT_DOUBLE_EQ(e.mean, 0.75);
    EXPECT_NEAR(e.std_error, std::sqrt(0.25 / 4.0), 1e-15);
    EXPECT_EQ(e.count, 4u);
    std::vector<double> one = {0.5};
    EXPECT_EQ(estimate_from(one).std_error, 0.0);
    EXPECT_THROW(estimate_from(std::span<const double>{}), std::invalid_argument);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](size_t i) { hits[i] += 1; });
    for (int h : hits) {
        EXPECT_EQ(h, 1);
    }
}

TEST(ParallelFor, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(100, 3,
                              [](size_t i) {
                                  if (i == 57) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}

}  // namespace
}  // namespace ptim
