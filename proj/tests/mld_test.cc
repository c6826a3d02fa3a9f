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
#include "ptim/mld.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "ptim/matching.h"
#include "ptim/metrics.h"
#include "ptim/min_flip.h"
#include "ptim/sampler.h"

namespace ptim {
namespace {

SyndromeRecord single_row(std::initializer_list<int> values) {
    std::vector<SyndromeValue> v;
    for (int x : values) {
        v.push_back(static_cast<SyndromeValue>(x));
    }
    return SyndromeRecord(SyndromePattern(1, static_cast<int>(v.size()) + 1), v);
}

void expect_relative(const ClassWeight &w, double expected, double tolerance) {
    if (expected == 0.0) {
        EXPECT_TRUE(w.is_zero);
        return;
    }
    ASSERT_FALSE(w.is_zero);
    EXPECT_LE(std::abs(w.value() - expected), tolerance * expected) << w.value() << " vs " << expected;
}

TEST(ClassLogProbability, SingleStepExample) {
    SyndromeRecord record = single_row({-1, 1});
    expect_relative(class_log_probability(record, BitConfig{1, 0, 0}, 0.4), 0.128, 1e-12);
    expect_relative(class_log_probability(record, BitConfig{0, 1, 1}, 0.4), 0.032, 1e-12);
    RngStream rng(1, 0);
    EXPECT_EQ(decode_mld(record, 0.4, rng), (BitConfig{1, 0, 0}));
    EXPECT_THROW(class_log_probability(record, BitConfig{1, 1, 0}, 0.4), std::invalid_argument);
    EXPECT_THROW(class_log_probability(record, BitConfig{1, 0, 0}, 1.2), std::invalid_argument);
}

TEST(ClassLogProbability, MatchesEnumeration) {
    RngStream gen(61, 0);
    int checked = 0;
    for (double p : {0.1, 0.4, 0.7}) {
        for (int k = 0; k < 200; ++k) {
            int length = 1 + 2 * (k % 4);
            int steps = std::max(1, std::min(1 + k % 6, 16 / length));
            SyndromeRecord record = oracle::random_record(length, steps, gen.uniform(), gen.uniform(), gen);
            oracle::ClassSums sums = oracle::class_sums_enumerated(record, p);
            ClassPair pair = class_log_probabilities(record, p);
            expect_relative(pair.candidate, sums.candidate, 1e-9);
            expect_relative(pair.complement, sums.complement, 1e-9);
            auto [c, cbar] = candidate_strings(record.final_row());
            expect_relative(brute_force_class_probability(record, c, p), sums.candidate, 1e-9);
            expect_relative(brute_force_class_probability(record, cbar, p), sums.complement, 1e-9);
            ++checked;
        }
    }
    EXPECT_EQ(checked, 600);
}

TEST(ClassLogProbability, EvenChainTieIsACoinToss) {
    SyndromeRecord record = single_row({-1});
    ClassPair pair = class_log_probabilities(record, 0.3);
    EXPECT_TRUE(weights_tie(pair.candidate, pair.complement));
    int first = 0;
    for (uint64_t seed = 0; seed < 400; ++seed) {
        RngStream rng(seed, 0);
        first += decode_mld(record, 0.3, rng) == (BitConfig{0, 1});
    }
    EXPECT_GT(first, 150);
    EXPECT_LT(first, 250);
}

TEST(ClassLogProbability, QuietRecordDecodesToZeros) {
    SyndromePattern pattern(4, 7);
    for (int r = 0; r < 3; ++r) {
        pattern.set(r, r, true);
    }
    std::vector<SyndromeValue> values(4 * 6, kAbsent);
    for (int r = 0; r < 4; ++r) {
        for (int d = 0; d < 6; ++d) {
            if (pattern(r, d)) {
                values[r * 6 + d] = kPlus;
            }
        }
    }
    SyndromeRecord record(pattern, values);
    for (double p : {0.05, 0.5, 0.95}) {
        RngStream rng(2, 0);
        EXPECT_EQ(decode_mld(record, p, rng), BitConfig(7));
    }
}

TEST(ClassLogProbability, ExactLimits) {
    RngStream gen(62, 0);
    for (int k = 0; k < 100; ++k) {
        SyndromeRecord record = oracle::random_record(5, 3, 0.5, 0.5, gen);
        // p = 0: only flip-free histories count.
        ClassPair zero = class_log_probabilities(record, 0.0);
        oracle::ClassFlips flips = oracle::min_flips_enumerated(record);
        EXPECT_EQ(!zero.candidate.is_zero, flips.candidate == 0);
        EXPECT_EQ(!zero.complement.is_zero, flips.complement == 0);
        // p = 1: every grid has weight 2^-(LT), so weights count histories.
        oracle::ClassSums sums = oracle::class_sums_enumerated(record, 1.0);
        ClassPair one = class_log_probabilities(record, 1.0);
        expect_relative(one.candidate, sums.candidate, 1e-12);
        expect_relative(one.complement, sums.complement, 1e-12);
        EXPECT_FALSE(one.candidate.is_zero);
        EXPECT_FALSE(one.complement.is_zero);
        double count = one.candidate.value() * std::pow(2.0, 15);
        EXPECT_NEAR(count, std::round(count), 1e-6);
    }
}

TEST(ClassLogProbability, SmallPPicksTheFewestFlipClass) {
    for (uint64_t i = 0; i < 200; ++i) {
        SampledInstance s = sample_instance(Params{0.3, 0.4, 9, 9, 63}, i);
        const SyndromeRecord &record = s.trajectory.syndromes;
        ClassMinimum m = min_flips_by_class(record);
        RngStream rng(1, i);
        BitConfig c = decode_mld(record, 1e-9, rng);
        bool candidate_wins = m.candidate < m.complement;
        EXPECT_EQ(c[0] == 0, candidate_wins);
    }
}

TEST(ClassLogProbability, StaysFiniteAtDeskScale) {
    for (double p : {0.01, 0.05, 0.2, 0.5, 0.9}) {
        for (uint64_t i = 0; i < 5; ++i) {
            SampledInstance s = sample_instance(Params{p, 0.3, 15, 15, 64}, i);
            ClassPair pair = class_log_probabilities(s.trajectory.syndromes, p);
            for (const ClassWeight &w : {pair.candidate, pair.complement}) {
                EXPECT_TRUE(w.is_zero || std::isfinite(w.log));
            }
            if (p >= 0.05) {
                EXPECT_FALSE(pair.candidate.is_zero && pair.complement.is_zero);
            }
        }
    }
}

TEST(ClassLogProbability, CapacityLimit) {
    SampledInstance s = sample_instance(Params{0.2, 0.2, 21, 2, 65}, 0);
    EXPECT_THROW(class_log_probabilities(s.trajectory.syndromes, 0.2), CapacityError);
    SampledInstance t = sample_instance(Params{0.2, 0.2, 7, 3, 65}, 0);
    auto [c, cbar] = candidate_strings(t.trajectory.syndromes.final_row());
    EXPECT_THROW(brute_force_class_probability(t.trajectory.syndromes, c, 0.2), CapacityError);
}

TEST(LikelihoodTransfer, IncrementalCutsMatchWholeRecords) {
    SampledInstance s = sample_instance(Params{0.3, 0.5, 9, 10, 66}, 1);
    LikelihoodTransfer transfer(9, 0.3);
    for (int t = 1; t <= 10; ++t) {
        Trajectory cut = truncate(s.trajectory, t);
        ClassPair a = transfer.close(cut.syndromes.final_row());
        ClassPair b = class_log_probabilities(cut.syndromes, 0.3);
        EXPECT_NEAR(a.candidate.log, b.candidate.log, 1e-12);
        EXPECT_NEAR(a.complement.log, b.complement.log, 1e-12);
        transfer.apply_row(s.trajectory.syndromes.row(t - 1));
    }
}

TEST(DecodeMld, DoesNotDependOnQ) {
    // q only shapes which records occur; for a given record the decision is
    // the same whatever q produced it.
    for (uint64_t i = 0; i < 100; ++i) {
        Params a{0.3, 0.1, 9, 9, 67}, b{0.3, 0.7, 9, 9, 67};
        SampledInstance s = sample_instance(a, i);
        EXPECT_EQ(decode_value(Decoder::kMld, a, s, i), decode_value(Decoder::kMld, b, s, i));
    }
}

}  // namespace
}  // namespace ptim
