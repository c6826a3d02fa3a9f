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

#ifndef PTIM_BLOSSOM_H
#define PTIM_BLOSSOM_H

#include <cstdint>
#include <span>
#include <vector>

namespace ptim {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    int64_t weight = 0;
};

/// Optimal dual solution left behind by the blossom algorithm, in the units
/// of min_weight_perfect_matching: an edge of original weight w enters the
/// solver with weight 2 * (weight_bound + 1 - w) and vertex duals are doubled.
struct MatchingDuals {
    int64_t weight_bound = 0;
    std::vector<int64_t> dual;  ///< vertices [0, n), then blossoms [n, 2n)
    std::vector<int> parent;    ///< enclosing blossom, or -1
    /// Per vertex: enclosing blossoms from the outermost inwards.
    std::vector<std::vector<int>> nesting;

    /// Reduced cost of a (possibly absent) edge u-v of original weight w.
    /// Non-negative for every edge of the graph; an absent edge with a
    /// negative value could improve the matching.
    int64_t reduced_cost(int u, int v, int64_t w) const;
};

/// Maximum-weight matching of a general graph with Edmonds' blossom
/// algorithm (primal-dual, O(n^3)). With `max_cardinality` the result is a
/// maximum-weight matching among the matchings of maximum size. Returns
/// mate[v] (-1 when unmatched). Weights must be integers; self loops are
/// rejected with std::invalid_argument.
///
/// `greedy_start` seeds the search with tight edges found by lowering vertex
/// duals one vertex at a time; every weight must then be even, and the result
/// is optimal only when the graph has a perfect matching. `duals`, when given,
/// receives the final dual solution.
std::vector<int> max_weight_matching(int num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality,
                                     bool greedy_start = false, MatchingDuals *duals = nullptr);

/// Minimum-weight perfect matching with non-negative weights. Throws
/// std::runtime_error when the graph has no perfect matching. `weight_bound`
/// must be at least the largest weight; -1 uses the largest weight present.
std::vector<int> min_weight_perfect_matching(int num_vertices, std::span<const WeightedEdge> edges,
                                             int64_t weight_bound = -1, MatchingDuals *duals = nullptr);

}  // namespace ptim

#endif  // PTIM_BLOSSOM_H
