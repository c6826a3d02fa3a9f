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
#include "ptim/min_flip.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "ptim/sampler.h"

namespace ptim {
namespace {

TEST(MinFlipTransfer, AgreesWithEnumerationPerClass) {
    RngStream gen(51, 0);
    for (int k = 0; k < 1500; ++k) {
        int length = 1 + 2 * (k % 4);
        int steps = 1 + k % 5;
        if (length * steps > 18) {
            steps = 18 / length;
        }
        SyndromeRecord record = oracle::random_record(length, steps, gen.uniform(), gen.uniform(), gen);
        oracle::ClassFlips expected = oracle::min_flips_enumerated(record);
        ClassMinimum got = min_flips_by_class(record);
        EXPECT_EQ(got.candidate, expected.candidate);
        EXPECT_EQ(got.complement, expected.complement);
    }
}

TEST(MinFlipTransfer, AgreesWithConfigurationDpOnLongerRecords) {
    RngStream gen(52, 0);
    for (int k = 0; k < 300; ++k) {
        int length = 3 + 2 * (k % 3);
        SyndromeRecord record = oracle::random_record(length, 4 + k % 20, gen.uniform(), gen.uniform(), gen);
        oracle::ClassFlips expected = oracle::min_flips_config_dp(record);
        ClassMinimum got = min_flips_by_class(record);
        EXPECT_EQ(got.candidate, expected.candidate);
        EXPECT_EQ(got.complement, expected.complement);
    }
}

TEST(MinFlipTransfer, OddChainsNeverTie) {
    // Total flips and final weight share parity, and the two classes have
    // weights of opposite parity when L is odd.
    for (uint64_t i = 0; i < 300; ++i) {
        SampledInstance s = sample_instance(Params{0.3, 0.3, 11, 11, 53}, i);
        ClassMinimum m = min_flips_by_class(s.trajectory.syndromes);
        EXPECT_NE(m.candidate % 2, m.complement % 2);
    }
}

TEST(MinFlipTransfer, CloseLeavesTheStateUntouched) {
    SampledInstance s = sample_instance(Params{0.3, 0.5, 9, 12, 54}, 3);
    MinFlipTransfer transfer(9);
    for (int t = 1; t <= 12; ++t) {
        Trajectory cut = truncate(s.trajectory, t);
        ClassMinimum incremental = transfer.close(cut.syndromes.final_row());
        ClassMinimum direct = min_flips_by_class(cut.syndromes);
        EXPECT_EQ(incremental.candidate, direct.candidate);
        EXPECT_EQ(incremental.complement, direct.complement);
        transfer.apply_row(s.trajectory.syndromes.row(t - 1));
    }
}

TEST(MinFlipTransfer, RefusesHugeTables) {
    MinFlipTransfer transfer(61);
    std::vector<SyndromeValue> empty(60, kAbsent);
    EXPECT_THROW(transfer.apply_row(empty), CapacityError);
}

}  // namespace
}  // namespace ptim
