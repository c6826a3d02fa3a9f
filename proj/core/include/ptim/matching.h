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

#ifndef PTIM_MATCHING_H
#define PTIM_MATCHING_H

#include <cstdint>
#include <utility>
#include <vector>

#include "ptim/blossom.h"
#include "ptim/lattice.h"

// Matching decoder on the dual space-time lattice.
//
// The dual lattice has rows tau in [0, T) and columns c in [1, L-1]; column c
// sits on edge c-1 between sites c-1 and c, and columns 0 and L are the left
// and right boundaries. Row tau collects the flips of step tau+1. Moving from
// column c to c+1 crosses the worldline of site c and costs 1. Moving from row
// tau to tau+1 in column c is free when edge c-1 was not measured in step
// tau+1 and impossible otherwise. Cells joined by free vertical moves form a
// "gap".

namespace ptim {

/// Endpoint of a syndrome change: row tau, dual column in [1, L-1].
struct Defect {
    int row = 0;
    int column = 1;
    bool operator==(const Defect &other) const = default;
    auto operator<=>(const Defect &other) const = default;
};

/// Each sign change between consecutive measured values of an edge (starting
/// from a +1 baseline) emits a defect at the row of the later measurement.
/// Sorted by row, then column.
std::vector<Defect> extract_defects(const SyndromeRecord &record);

/// Shortest-path distances on the dual lattice of one syndrome record.
class DualLattice {
   public:
    explicit DualLattice(const SyndromeRecord &record);

    int steps() const {
        return steps_;
    }
    int length() const {
        return length_;
    }
    int num_gaps() const {
        return static_cast<int>(gap_offsets_.size()) - 1;
    }
    int gap_of(Defect d) const {
        return gap_[cell(d.row, d.column)];
    }
    /// Distance to the nearer boundary, and which one (true for the right).
    int boundary_distance(Defect d) const;
    bool nearer_boundary_is_right(Defect d) const;

    /// Breadth-first distances from the gap of `source` to every gap, cut off
    /// above `max_distance` (those gaps report -1). `out` is resized.
    void distances_from(Defect source, int max_distance, std::vector<int> &out) const;

    /// Sites whose worldlines one shortest path from `from` to `to` crosses,
    /// in path order. Throws std::invalid_argument when `to` is unreachable.
    std::vector<int> crossings(Defect from, Defect to) const;

   private:
    size_t cell(int row, int column) const {
        return static_cast<size_t>(row) * (length_ - 1) + (column - 1);
    }

    int steps_;
    int length_;
    std::vector<uint8_t> passable_;  // per cell: free move to the row above
    std::vector<int> gap_;
    std::vector<int> gap_offsets_;
    std::vector<int> gap_neighbors_;
    mutable std::vector<int> queue_;
};

/// Matching problem for one syndrome record. Node k < n is active defect k
/// and node n + k its private boundary copy, joined by an edge carrying the
/// distance to the nearer boundary. Boundary copies are joined among
/// themselves at weight 0, so the node count is always even.
///
/// Two reductions keep the graph sparse without changing the optimum:
/// defects sharing a gap are paired at weight 0 beforehand, and a
/// defect-defect edge is kept only when it is cheaper than sending both
/// defects to the boundary (boundary copies are then joined only alongside
/// kept edges, which still lets every kept pairing complete).
struct DefectGraph {
    int length = 0;
    std::vector<Defect> defects;
    std::vector<std::pair<int, int>> gap_pairs;  ///< indices into `defects`
    std::vector<int> active;                     ///< indices into `defects`
    std::vector<int> boundary_weight;            ///< per active defect
    std::vector<uint8_t> boundary_right;         ///< per active defect
    std::vector<WeightedEdge> edges;             ///< over the 2n nodes

    int num_nodes() const {
        return 2 * static_cast<int>(active.size());
    }
    /// Weight of the edge between two nodes, or -1 when absent.
    int64_t edge_weight(int a, int b) const;
};

DefectGraph build_defect_graph(const SyndromeRecord &record);

struct Matching {
    std::vector<std::pair<int, int>> pairs;  ///< defect-defect pairs, indices into DefectGraph::defects
    std::vector<int> to_boundary;            ///< defects matched to their nearer boundary
    int64_t weight = 0;
};

/// Exact minimum-weight perfect matching, solved per connected component.
Matching match_defects(const DefectGraph &graph);

/// Site i flips iff the matched paths cross its worldline an odd number of
/// times. That parity depends only on the endpoints: a pair in columns a < b
/// flips sites a..b-1, a left-boundary match in column c flips 0..c-1 and a
/// right-boundary match flips c..L-1.
BitConfig correction_from_matching(const DefectGraph &graph, const Matching &matching);

/// Minimum-weight perfect matching decoder.
BitConfig decode_mwpm(const SyndromeRecord &record);

/// decode_mwpm that also reports the matching weight.
BitConfig decode_mwpm(const SyndromeRecord &record, int64_t *weight);

}  // namespace ptim

#endif  // PTIM_MATCHING_H
