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

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ptim/min_flip.h"

namespace ptim {

std::vector<Defect> extract_defects(const SyndromeRecord &record) {
    std::vector<Defect> out;
    std::vector<SyndromeValue> previous(static_cast<size_t>(record.edges()), kPlus);
    for (int r = 0; r < record.steps(); ++r) {
        for (int d = 0; d < record.edges(); ++d) {
            if (record.measured(r, d)) {
                SyndromeValue v = record.result(r, d);
                if (v != previous[d]) {
                    out.push_back({r, d + 1});
                    previous[d] = v;
                }
            }
        }
    }
    return out;
}

DualLattice::DualLattice(const SyndromeRecord &record) : steps_(record.steps()), length_(record.length()) {
    const int columns = length_ - 1;
    const size_t cells = static_cast<size_t>(steps_) * columns;
    passable_.assign(cells, 0);
    gap_.assign(cells, 0);
    for (int r = 0; r + 1 < steps_; ++r) {
        for (int c = 1; c <= columns; ++c) {
            passable_[cell(r, c)] = record.measured(r, c - 1) ? 0 : 1;
        }
    }
    int gaps = 0;
    for (int c = 1; c <= columns; ++c) {
        for (int r = 0; r < steps_; ++r) {
            if (r == 0 || !passable_[cell(r - 1, c)]) {
                ++gaps;
            }
            gap_[cell(r, c)] = gaps - 1;
        }
    }
    std::vector<std::pair<int, int>> links;
    for (int c = 1; c < columns; ++c) {
        int last_a = -1;
        int last_b = -1;
        for (int r = 0; r < steps_; ++r) {
            int a = gap_[cell(r, c)];
            int b = gap_[cell(r, c + 1)];
            if (a != last_a || b != last_b) {
                links.emplace_back(a, b);
                last_a = a;
                last_b = b;
            }
        }
    }
    gap_offsets_.assign(static_cast<size_t>(gaps) + 1, 0);
    for (auto [a, b] : links) {
        ++gap_offsets_[a + 1];
        ++gap_offsets_[b + 1];
    }
    for (int g = 0; g < gaps; ++g) {
        gap_offsets_[g + 1] += gap_offsets_[g];
    }
    gap_neighbors_.resize(2 * links.size());
    std::vector<int> fill(gap_offsets_.begin(), gap_offsets_.end() - 1);
    for (auto [a, b] : links) {
        gap_neighbors_[fill[a]++] = b;
        gap_neighbors_[fill[b]++] = a;
    }
}

int DualLattice::boundary_distance(Defect d) const {
    return std::min(d.column, length_ - d.column);
}

bool DualLattice::nearer_boundary_is_right(Defect d) const {
    return length_ - d.column < d.column;
}

void DualLattice::distances_from(Defect source, int max_distance, std::vector<int> &out) const {
    out.assign(static_cast<size_t>(num_gaps()), -1);
    queue_.clear();
    int start = gap_of(source);
    out[start] = 0;
    queue_.push_back(start);
    for (size_t head = 0; head < queue_.size(); ++head) {
        int g = queue_[head];
        int next = out[g] + 1;
        if (next > max_distance) {
            break;
        }
        for (int k = gap_offsets_[g]; k < gap_offsets_[g + 1]; ++k) {
            int h = gap_neighbors_[k];
            if (out[h] < 0) {
                out[h] = next;
                queue_.push_back(h);
            }
        }
    }
}

std::vector<int> DualLattice::crossings(Defect from, Defect to) const {
    const int columns = length_ - 1;
    const size_t cells = static_cast<size_t>(steps_) * columns;
    constexpr int kUnseen = std::numeric_limits<int>::max();
    std::vector<int> dist(cells, kUnseen);
    std::vector<size_t> parent(cells, cells);
    std::deque<size_t> dq;
    const size_t source = cell(from.row, from.column);
    const size_t target = cell(to.row, to.column);
    dist[source] = 0;
    dq.push_back(source);
    while (!dq.empty()) {
        size_t x = dq.front();
        dq.pop_front();
        int r = static_cast<int>(x / columns);
        int c = static_cast<int>(x % columns) + 1;
        auto relax = [&](int nr, int nc, int cost) {
            size_t y = cell(nr, nc);
            if (dist[x] + cost < dist[y]) {
                dist[y] = dist[x] + cost;
                parent[y] = x;
                if (cost == 0) {
                    dq.push_front(y);
                } else {
                    dq.push_back(y);
                }
            }
        };
        if (r + 1 < steps_ && passable_[cell(r, c)]) {
            relax(r + 1, c, 0);
        }
        if (r > 0 && passable_[cell(r - 1, c)]) {
            relax(r - 1, c, 0);
        }
        if (c > 1) {
            relax(r, c - 1, 1);
        }
        if (c < columns) {
            relax(r, c + 1, 1);
        }
    }
    if (dist[target] == kUnseen) {
        throw std::invalid_argument("defects are not connected on the dual lattice");
    }
    std::vector<int> out;
    for (size_t y = target; y != source; y = parent[y]) {
        size_t x = parent[y];
        int cx = static_cast<int>(x % columns) + 1;
        int cy = static_cast<int>(y % columns) + 1;
        if (cx != cy) {
            out.push_back(std::min(cx, cy));
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

int64_t DefectGraph::edge_weight(int a, int b) const {
    for (const auto &e : edges) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
            return e.weight;
        }
    }
    return -1;
}

DefectGraph build_defect_graph(const SyndromeRecord &record) {
    DefectGraph g;
    g.length = record.length();
    g.defects = extract_defects(record);
    if (g.defects.empty()) {
        return g;
    }
    DualLattice lattice(record);
    const int total = static_cast<int>(g.defects.size());
    std::vector<int> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> gap(total);
    for (int k = 0; k < total; ++k) {
        gap[k] = lattice.gap_of(g.defects[k]);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return gap[a] < gap[b]; });
    for (int k = 0; k < total;) {
        if (k + 1 < total && gap[order[k]] == gap[order[k + 1]]) {
            g.gap_pairs.emplace_back(order[k], order[k + 1]);
            k += 2;
        } else {
            g.active.push_back(order[k]);
            k += 1;
        }
    }
    std::sort(g.active.begin(), g.active.end());
    const int n = static_cast<int>(g.active.size());
    int max_boundary = 0;
    for (int k = 0; k < n; ++k) {
        const Defect &d = g.defects[g.active[k]];
        g.boundary_weight.push_back(lattice.boundary_distance(d));
        g.boundary_right.push_back(lattice.nearer_boundary_is_right(d) ? 1 : 0);
        max_boundary = std::max(max_boundary, g.boundary_weight.back());
    }
    std::vector<int> dist;
    for (int k = 0; k < n; ++k) {
        const int bk = g.boundary_weight[k];
        g.edges.push_back({k, n + k, bk});
        lattice.distances_from(g.defects[g.active[k]], bk + max_boundary - 1, dist);
        for (int j = k + 1; j < n; ++j) {
            int d = dist[gap[g.active[j]]];
            if (d >= 0 && d < bk + g.boundary_weight[j]) {
                g.edges.push_back({k, j, d});
                g.edges.push_back({n + k, n + j, 0});
            }
        }
    }
    return g;
}

namespace {

constexpr int kNearestPartners = 6;

struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        parent[find(a)] = find(b);
    }
    std::vector<int> parent;
};

/// Distances between active defects, possibly computed on demand.
class PairOracle {
   public:
    virtual ~PairOracle() = default;
    /// A value no larger than the distance.
    virtual int lower_bound(int u, int v) = 0;
    /// The distance, or -1 when it is not below the cost of sending both
    /// defects to the boundary (the pair then has no edge).
    virtual int distance(int u, int v) = 0;
};

struct PairEdge {
    int u;
    int v;
    int weight;
};

// Minimum-weight perfect matching of n defects plus their boundary copies.
// The solve starts from `seed` edges and prices every other pair against the
// optimal duals. A pair with negative reduced cost joins the edge set and the
// problem is solved again; once none remains the duals certify optimality on
// the complete graph.
class SparseMatcher {
   public:
    SparseMatcher(const std::vector<int> &boundary, PairOracle &oracle)
        : n_(static_cast<int>(boundary.size())), boundary_(boundary), oracle_(oracle) {
        for (int b : boundary_) {
            bound_ = std::max<int64_t>(bound_, 2 * static_cast<int64_t>(b));
        }
        chosen_.assign(static_cast<size_t>(n_) * n_, 0);
    }

    void add(int u, int v, int weight) {
        if (u > v) {
            std::swap(u, v);
        }
        uint8_t &flag = chosen_[static_cast<size_t>(u) * n_ + v];
        if (!flag) {
            flag = 1;
            edges_.push_back({u, v, weight});
        }
    }

    /// Partner of every defect, -1 for the boundary.
    std::vector<int> solve();

   private:
    void solve_components();
    bool price();
    int64_t node_dual(int k, bool copy) const {
        const int comp = component_[k];
        const int size = static_cast<int>(members_[comp].size());
        return duals_[comp].dual[copy ? size + local_[k] : local_[k]];
    }

    int n_;
    const std::vector<int> &boundary_;
    PairOracle &oracle_;
    int64_t bound_ = 0;
    std::vector<uint8_t> chosen_;
    std::vector<PairEdge> edges_;
    std::vector<int> mate_;
    std::vector<int> component_;
    std::vector<int> local_;
    std::vector<std::vector<int>> members_;
    std::vector<MatchingDuals> duals_;
};

void SparseMatcher::solve_components() {
    DisjointSets sets(n_);
    for (const auto &e : edges_) {
        sets.unite(e.u, e.v);
    }
    component_.assign(n_, -1);
    local_.assign(n_, 0);
    members_.clear();
    std::vector<int> id(n_, -1);
    for (int k = 0; k < n_; ++k) {
        int r = sets.find(k);
        if (id[r] < 0) {
            id[r] = static_cast<int>(members_.size());
            members_.emplace_back();
        }
        component_[k] = id[r];
        local_[k] = static_cast<int>(members_[id[r]].size());
        members_[id[r]].push_back(k);
    }
    std::vector<std::vector<WeightedEdge>> local_edges(members_.size());
    for (int k = 0; k < n_; ++k) {
        const int size = static_cast<int>(members_[component_[k]].size());
        local_edges[component_[k]].push_back({local_[k], size + local_[k], boundary_[k]});
    }
    for (const auto &e : edges_) {
        const int comp = component_[e.u];
        const int size = static_cast<int>(members_[comp].size());
        local_edges[comp].push_back({local_[e.u], local_[e.v], e.weight});
        local_edges[comp].push_back({size + local_[e.u], size + local_[e.v], 0});
    }
    mate_.assign(n_, -1);
    duals_.assign(members_.size(), MatchingDuals{});
    for (size_t comp = 0; comp < members_.size(); ++comp) {
        const auto &list = members_[comp];
        const int size = static_cast<int>(list.size());
        if (size == 1) {
            const int64_t tight = 2 * (bound_ + 1 - boundary_[list[0]]);
            duals_[comp].weight_bound = bound_;
            duals_[comp].dual = {tight, tight};
            duals_[comp].parent = {-1, -1};
            duals_[comp].nesting = {{}, {}};
            continue;
        }
        std::vector<int> mate = min_weight_perfect_matching(2 * size, local_edges[comp], bound_, &duals_[comp]);
        for (int a = 0; a < size; ++a) {
            if (mate[a] >= size) {
                if (mate[a] != size + a) {
                    throw std::logic_error("defect matched to a foreign boundary copy");
                }
            } else {
                mate_[list[a]] = list[mate[a]];
            }
        }
    }
}

bool SparseMatcher::price() {
    std::vector<PairEdge> violated;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (chosen_[static_cast<size_t>(u) * n_ + v]) {
                continue;
            }
            const int limit = boundary_[u] + boundary_[v];
            int d = oracle_.lower_bound(u, v);
            if (d >= limit) {
                continue;
            }
            const bool same = component_[u] == component_[v];
            auto direct_cost = [&](int w) {
                if (same) {
                    return duals_[component_[u]].reduced_cost(local_[u], local_[v], w);
                }
                return node_dual(u, false) + node_dual(v, false) - 4 * (bound_ + 1 - w);
            };
            int64_t copies;
            if (same) {
                const int size = static_cast<int>(members_[component_[u]].size());
                copies = duals_[component_[u]].reduced_cost(size + local_[u], size + local_[v], 0);
            } else {
                copies = node_dual(u, true) + node_dual(v, true) - 4 * (bound_ + 1);
            }
            if (copies >= 0 && direct_cost(d) >= 0) {
                continue;
            }
            d = oracle_.distance(u, v);
            if (d < 0) {
                continue;
            }
            if (copies < 0 || direct_cost(d) < 0) {
                violated.push_back({u, v, d});
            }
        }
    }
    for (const auto &e : violated) {
        add(e.u, e.v, e.weight);
    }
    return !violated.empty();
}

std::vector<int> SparseMatcher::solve() {
    if (n_ == 0) {
        return {};
    }
    do {
        solve_components();
    } while (price());
    return mate_;
}

class GraphOracle : public PairOracle {
   public:
    explicit GraphOracle(const DefectGraph &graph) : n_(static_cast<int>(graph.active.size())) {
        dist_.assign(static_cast<size_t>(n_) * n_, -1);
        for (const auto &e : graph.edges) {
            if (e.u < n_ && e.v < n_) {
                dist_[static_cast<size_t>(e.u) * n_ + e.v] = static_cast<int>(e.weight);
                dist_[static_cast<size_t>(e.v) * n_ + e.u] = static_cast<int>(e.weight);
            }
        }
    }
    int lower_bound(int u, int v) override {
        int d = distance(u, v);
        return d < 0 ? std::numeric_limits<int>::max() : d;
    }
    int distance(int u, int v) override {
        return dist_[static_cast<size_t>(u) * n_ + v];
    }

   private:
    int n_;
    std::vector<int> dist_;
};

Matching finish_matching(const std::vector<Defect> &defects, std::vector<std::pair<int, int>> gap_pairs,
                         const std::vector<int> &active, const std::vector<int> &boundary,
                         const std::vector<int> &mate, PairOracle &oracle) {
    Matching out;
    out.pairs = std::move(gap_pairs);
    (void)defects;
    for (size_t k = 0; k < active.size(); ++k) {
        if (mate[k] < 0) {
            out.to_boundary.push_back(active[k]);
            out.weight += boundary[k];
        } else if (static_cast<int>(k) < mate[k]) {
            out.pairs.emplace_back(active[k], active[mate[k]]);
            out.weight += oracle.distance(static_cast<int>(k), mate[k]);
        }
    }
    return out;
}

}  // namespace

Matching match_defects(const DefectGraph &graph) {
    const int n = static_cast<int>(graph.active.size());
    GraphOracle oracle(graph);
    SparseMatcher matcher(graph.boundary_weight, oracle);
    std::vector<std::vector<std::pair<int64_t, int>>> near(static_cast<size_t>(n));
    for (const auto &e : graph.edges) {
        if (e.u < n && e.v < n) {
            near[e.u].emplace_back(e.weight, e.v);
            near[e.v].emplace_back(e.weight, e.u);
        }
    }
    for (int u = 0; u < n; ++u) {
        auto &list = near[u];
        size_t keep = std::min(list.size(), static_cast<size_t>(kNearestPartners));
        std::partial_sort(list.begin(), list.begin() + keep, list.end());
        for (size_t k = 0; k < keep; ++k) {
            matcher.add(u, list[k].second, static_cast<int>(list[k].first));
        }
    }
    std::vector<int> mate = matcher.solve();
    return finish_matching(graph.defects, graph.gap_pairs, graph.active, graph.boundary_weight, mate, oracle);
}

BitConfig correction_from_matching(const DefectGraph &graph, const Matching &matching) {
    const int length = graph.length;
    std::vector<int> toggles(static_cast<size_t>(length) + 1, 0);
    auto flip_range = [&](int lo, int hi) {  // sites lo..hi-1
        toggles[lo] ^= 1;
        toggles[hi] ^= 1;
    };
    for (auto [a, b] : matching.pairs) {
        int ca = graph.defects[a].column;
        int cb = graph.defects[b].column;
        flip_range(std::min(ca, cb), std::max(ca, cb));
    }
    for (int a : matching.to_boundary) {
        int c = graph.defects[a].column;
        if (length - c < c) {
            flip_range(c, length);
        } else {
            flip_range(0, c);
        }
    }
    BitConfig out(length);
    int parity = 0;
    for (int i = 0; i < length; ++i) {
        parity ^= toggles[i];
        out.set(i, parity != 0);
    }
    return out;
}

BitConfig decode_mwpm(const SyndromeRecord &record, int64_t *weight) {
    // The matching weight equals the fewest flips that explain the record, and
    // the class of the matching is the class attaining it. The segment transfer
    // gets both directly when its table stays small compared with the matcher.
    // A tie between classes (even L only) is left to the matcher so that its
    // particular choice is reproduced.
    constexpr double kWorkPerDefect = 20000.0;
    double defects = static_cast<double>(extract_defects(record).size());
    if (min_flip_work(record) <= kWorkPerDefect * std::max(1.0, defects)) {
        ClassMinimum best = min_flips_by_class(record);
        if (best.candidate != best.complement) {
            auto [cand, comp] = candidate_strings(record.final_row());
            if (weight) {
                *weight = std::min(best.candidate, best.complement);
            }
            return best.candidate < best.complement ? cand : comp;
        }
    }
    DefectGraph graph = build_defect_graph(record);
    Matching matching = match_defects(graph);
    if (weight) {
        *weight = matching.weight;
    }
    return correction_from_matching(graph, matching);
}

BitConfig decode_mwpm(const SyndromeRecord &record) {
    return decode_mwpm(record, nullptr);
}

}  // namespace ptim
