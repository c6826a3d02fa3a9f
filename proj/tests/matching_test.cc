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
#include "ptim/matching.h"

#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "oracles.h"
#include "ptim/min_flip.h"
#include "ptim/sampler.h"

namespace ptim {
namespace {

SyndromeRecord record_from(const SyndromePattern &pattern, std::initializer_list<int> values) {
    std::vector<SyndromeValue> v;
    for (int x : values) {
        v.push_back(static_cast<SyndromeValue>(x));
    }
    return SyndromeRecord(pattern, v);
}

// Dijkstra on the dual cells (row, column 1..L-1); horizontal steps cost 1,
// vertical steps are free where the edge was left unmeasured. Columns 0 and
// L are the boundaries.
struct DualDistances {
    explicit DualDistances(const SyndromeRecord &record) : record_(record) {
    }

    // Distances from `source` to every cell; index row * (L + 1) + column.
    std::vector<int> from(Defect source) const {
        const int rows = record_.steps();
        const int cols = record_.length() + 1;
        std::vector<int> dist(static_cast<size_t>(rows) * cols, 1 << 20);
        using Item = std::pair<int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        auto push = [&](int r, int c, int d) {
            int k = r * cols + c;
            if (d < dist[k]) {
                dist[k] = d;
                heap.push({d, k});
            }
        };
        push(source.row, source.column, 0);
        while (!heap.empty()) {
            auto [d, k] = heap.top();
            heap.pop();
            if (d > dist[k]) {
                continue;
            }
            int r = k / cols, c = k % cols;
            if (c == 0 || c == cols - 1) {
                continue;  // boundaries are sinks
            }
            push(r, c - 1, d + 1);
            push(r, c + 1, d + 1);
            if (r + 1 < rows && !record_.measured(r, c - 1)) {
                push(r + 1, c, d);
            }
            if (r > 0 && !record_.measured(r - 1, c - 1)) {
                push(r - 1, c, d);
            }
        }
        return dist;
    }

    int boundary(Defect d) const {
        auto dist = from(d);
        const int cols = record_.length() + 1;
        int best = 1 << 20;
        for (int r = 0; r < record_.steps(); ++r) {
            best = std::min({best, dist[r * cols], dist[r * cols + cols - 1]});
        }
        return best;
    }

    const SyndromeRecord &record_;
};

// Optimal total weight of pairing defects with each other or the boundary.
int64_t brute_force_decoding_weight(const SyndromeRecord &record) {
    auto defects = extract_defects(record);
    DualDistances oracle(record);
    const int n = static_cast<int>(defects.size());
    const int cols = record.length() + 1;
    std::vector<std::vector<int64_t>> w(2 * n, std::vector<int64_t>(2 * n, -1));
    for (int a = 0; a < n; ++a) {
        auto dist = oracle.from(defects[a]);
        for (int b = 0; b < n; ++b) {
            if (a != b) {
                w[a][b] = dist[defects[b].row * cols + defects[b].column];
            }
        }
        w[a][n + a] = w[n + a][a] = oracle.boundary(defects[a]);
        for (int b = 0; b < n; ++b) {
            if (a != b) {
                w[n + a][n + b] = 0;
            }
        }
    }
    return oracle::min_perfect_matching_brute_force(w);
}

TEST(ExtractDefects, TrivialRecord) {
    SyndromeRecord record = record_from(SyndromePattern(2, 3), {0, 0, 1, 1});
    EXPECT_TRUE(extract_defects(record).empty());
    DefectGraph graph = build_defect_graph(record);
    EXPECT_EQ(graph.num_nodes(), 0);
    Matching m = match_defects(graph);
    EXPECT_EQ(m.weight, 0);
    EXPECT_TRUE(m.pairs.empty());
    EXPECT_EQ(decode_mwpm(record), BitConfig(3));
}

TEST(ExtractDefects, SingleFlipFullSyndromes) {
    SyndromePattern pattern(2, 3);
    pattern.set(0, 0, true);
    pattern.set(0, 1, true);
    SyndromeRecord record = record_from(pattern, {-1, -1, -1, -1});
    EXPECT_EQ(extract_defects(record), (std::vector<Defect>{{0, 1}, {0, 2}}));
}

TEST(ExtractDefects, ChangeAcrossAnUnmeasuredGap) {
    SyndromePattern pattern(3, 3);
    pattern.set(0, 0, true);
    SyndromeRecord record = record_from(pattern, {-1, 0, 0, 0, 1, 1});
    EXPECT_EQ(extract_defects(record), (std::vector<Defect>{{0, 1}, {2, 1}}));
    DualLattice lattice(record);
    // The unmeasured step-2 edge joins rows 1 and 2; the measured step-1 edge
    // separates row 0 from them, so the pair still costs two flips.
    EXPECT_EQ(lattice.gap_of({1, 1}), lattice.gap_of({2, 1}));
    EXPECT_NE(lattice.gap_of({0, 1}), lattice.gap_of({1, 1}));
    int64_t weight = -1;
    EXPECT_EQ(decode_mwpm(record, &weight), BitConfig(3));
    EXPECT_EQ(weight, 2);
    EXPECT_EQ(oracle::min_flips_enumerated(record).best(), 2);
}

TEST(BuildDefectGraph, SingleFlipWeights) {
    SyndromePattern pattern(2, 3);
    pattern.set(0, 0, true);
    pattern.set(0, 1, true);
    SyndromeRecord record = record_from(pattern, {-1, -1, -1, -1});
    DefectGraph graph = build_defect_graph(record);
    ASSERT_EQ(graph.active.size(), 2u);
    EXPECT_EQ(graph.edge_weight(0, 1), 1);
    EXPECT_EQ(graph.boundary_weight, (std::vector<int>{1, 1}));
    Matching m = match_defects(graph);
    EXPECT_EQ(m.weight, 1);
    ASSERT_EQ(m.pairs.size(), 1u);
    EXPECT_TRUE(m.to_boundary.empty());
    EXPECT_EQ(decode_mwpm(record), (BitConfig{0, 1, 0}));
}

TEST(BuildDefectGraph, BoundaryDistances) {
    SyndromeRecord record = record_from(SyndromePattern(1, 3), {-1, 1});
    DualLattice lattice(record);
    EXPECT_EQ(lattice.boundary_distance({0, 1}), 1);
    EXPECT_FALSE(lattice.nearer_boundary_is_right({0, 1}));
    EXPECT_EQ(lattice.crossings({0, 1}, {0, 2}), (std::vector<int>{1}));
    DualDistances oracle(record);
    auto dist = oracle.from({0, 1});
    EXPECT_EQ(dist[0], 1);  // left boundary
    EXPECT_EQ(dist[3], 2);  // right boundary
}

TEST(DecodeMwpm, SingleFinalDefectGoesLeft) {
    SyndromeRecord record = record_from(SyndromePattern(1, 3), {-1, 1});
    Matching m = match_defects(build_defect_graph(record));
    EXPECT_EQ(m.to_boundary, (std::vector<int>{0}));
    EXPECT_EQ(decode_mwpm(record), (BitConfig{1, 0, 0}));
}

TEST(DecodeMwpm, MatchesExhaustivePairingOnSmallDefectSets) {
    RngStream gen(41, 0);
    int checked = 0;
    while (checked < 1000) {
        int length = 3 + 2 * static_cast<int>(gen.next() % 4);
        int steps = 1 + static_cast<int>(gen.next() % 6);
        SyndromeRecord record = oracle::random_record(length, steps, gen.uniform(), gen.uniform(), gen);
        if (extract_defects(record).size() > 7) {
            continue;
        }
        DefectGraph graph = build_defect_graph(record);
        EXPECT_EQ(match_defects(graph).weight, brute_force_decoding_weight(record));
        ++checked;
    }
}

TEST(DecodeMwpm, WeightIsTheFewestFlipsAndClassIsOptimal) {
    RngStream gen(42, 0);
    for (int k = 0; k < 600; ++k) {
        int length = 1 + 2 * (k % 4);
        int steps = 1 + k % 5;
        SyndromeRecord record = oracle::random_record(length, steps, gen.uniform(), gen.uniform(), gen);
        oracle::ClassFlips best = oracle::min_flips_config_dp(record);
        DefectGraph graph = build_defect_graph(record);
        Matching m = match_defects(graph);
        BitConfig c = correction_from_matching(graph, m);
        EXPECT_EQ(m.weight, best.best());
        EXPECT_TRUE(consistent_with(c, record.final_row()));
        int class_flips = c[0] ? best.complement : best.candidate;
        EXPECT_EQ(class_flips, best.best());
        int64_t weight = -1;
        BitConfig hybrid = decode_mwpm(record, &weight);
        EXPECT_EQ(weight, best.best());
        EXPECT_EQ(hybrid, c);
    }
}

TEST(DecodeMwpm, TransferShortcutReproducesTheMatcher) {
    for (int length : {5, 11, 15, 21}) {
        for (double p : {0.1, 0.3, 0.4}) {
            Params params{p, p, length, length, 43};
            for (uint64_t i = 0; i < 60; ++i) {
                SampledInstance s = sample_instance(params, i);
                const SyndromeRecord &record = s.trajectory.syndromes;
                DefectGraph graph = build_defect_graph(record);
                Matching m = match_defects(graph);
                int64_t weight = -1;
                EXPECT_EQ(decode_mwpm(record, &weight), correction_from_matching(graph, m));
                EXPECT_EQ(weight, m.weight);
            }
        }
    }
}

TEST(DecodeMwpm, EvenChainsFallBackToTheMatcherOnTies) {
    RngStream gen(48, 0);
    int ties = 0;
    for (int k = 0; k < 400; ++k) {
        int length = 2 + 2 * (k % 4);
        SyndromeRecord record = oracle::random_record(length, 1 + k % 6, 0.5, 0.5, gen);
        ClassMinimum m = min_flips_by_class(record);
        ties += m.candidate == m.complement;
        DefectGraph graph = build_defect_graph(record);
        EXPECT_EQ(decode_mwpm(record), correction_from_matching(graph, match_defects(graph)));
    }
    EXPECT_GT(ties, 0);
}

TEST(DecodeMwpm, MatchedPathsRealizeTheirWeights) {
    RngStream gen(44, 0);
    for (int k = 0; k < 300; ++k) {
        int length = 3 + 2 * (k % 6);
        SyndromeRecord record = oracle::random_record(length, 2 + k % 8, 0.4, 0.5, gen);
        DefectGraph graph = build_defect_graph(record);
        Matching m = match_defects(graph);
        DualLattice lattice(record);
        BitConfig parity(length);
        int64_t total = 0;
        for (auto [a, b] : m.pairs) {
            auto sites = lattice.crossings(graph.defects[a], graph.defects[b]);
            total += static_cast<int64_t>(sites.size());
            for (int s : sites) {
                parity.flip(s);
            }
        }
        for (int a : m.to_boundary) {
            Defect d = graph.defects[a];
            total += lattice.boundary_distance(d);
            bool right = lattice.nearer_boundary_is_right(d);
            for (int s = right ? d.column : 0; s < (right ? length : d.column); ++s) {
                parity.flip(s);
            }
        }
        EXPECT_EQ(total, m.weight);
        EXPECT_EQ(parity, correction_from_matching(graph, m));
    }
}

TEST(DecodeMwpm, DistancesDoNotDependOnPositionWithinAGap) {
    RngStream gen(45, 0);
    for (int k = 0; k < 100; ++k) {
        SyndromeRecord record = oracle::random_record(9, 8, 0.3, 0.6, gen);
        DualLattice lattice(record);
        std::map<int, Defect> first_cell;
        std::vector<int> reference, moved;
        for (int r = 0; r < 8; ++r) {
            for (int c = 1; c < 9; ++c) {
                Defect cell{r, c};
                auto [it, fresh] = first_cell.emplace(lattice.gap_of(cell), cell);
                if (fresh) {
                    continue;
                }
                lattice.distances_from(it->second, 100, reference);
                lattice.distances_from(cell, 100, moved);
                EXPECT_EQ(reference, moved);
                EXPECT_EQ(lattice.boundary_distance(it->second), lattice.boundary_distance(cell));
            }
        }
    }
}

TEST(DecodeMwpm, CompleteRowsReduceToPerStepMajority) {
    RngStream gen(46, 0);
    for (int k = 0; k < 500; ++k) {
        int length = 1 + 2 * (k % 10);
        SyndromeRecord record = oracle::random_record(length, 1 + k % 12, gen.uniform(), 0.0, gen);
        EXPECT_EQ(decode_mwpm(record), oracle::per_step_majority(record));
    }
}

TEST(DecodeMwpm, AlwaysMatchesFinalSyndromes) {
    for (uint64_t i = 0; i < 200; ++i) {
        SampledInstance s = sample_instance(Params{0.35, 0.35, 31, 31, 47}, i);
        EXPECT_TRUE(consistent_with(decode_mwpm(s.trajectory.syndromes), s.trajectory.syndromes.final_row()));
    }
}

}  // namespace
}  // namespace ptim
