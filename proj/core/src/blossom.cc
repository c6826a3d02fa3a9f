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

#include "ptim/blossom.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

// Primal-dual blossom algorithm after J. Edmonds and Z. Galil, following the
// structure of Joris van Rantwijk's public-domain mwmatching.py. Vertex duals
// are stored doubled so that every quantity stays integral.

namespace ptim {

namespace {

class BlossomSolver {
   public:
    BlossomSolver(int n, std::span<const WeightedEdge> edges, bool max_cardinality)
        : n_(n), edges_(edges.begin(), edges.end()), max_cardinality_(max_cardinality) {
        const int m = static_cast<int>(edges_.size());
        int64_t max_weight = 0;
        endpoint_.resize(2 * static_cast<size_t>(m));
        neighbend_.assign(n_, {});
        for (int k = 0; k < m; ++k) {
            const auto &e = edges_[k];
            if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v) {
                throw std::invalid_argument("matching edge with invalid endpoints");
            }
            max_weight = std::max(max_weight, e.weight);
            endpoint_[2 * k] = e.u;
            endpoint_[2 * k + 1] = e.v;
            neighbend_[e.u].push_back(2 * k + 1);
            neighbend_[e.v].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            inblossom_[v] = v;
        }
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v) {
            blossombase_[v] = v;
        }
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, {});
        has_bestedges_.assign(2 * n_, 0);
        for (int b = 2 * n_ - 1; b >= n_; --b) {
            unusedblossoms_.push_back(b);
        }
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; ++v) {
            dualvar_[v] = max_weight;
        }
        allowedge_.assign(m, 0);
        bestedgeto_.assign(2 * static_cast<size_t>(n_), -1);
    }

    std::vector<int> solve();
    void greedy_start();
    void export_duals(MatchingDuals &out) const {
        out.dual = dualvar_;
        out.parent = blossomparent_;
    }

   private:
    int64_t slack(int k) const {
        const auto &e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    template <typename F>
    void for_leaves(int b, F &&f) const {
        if (b < n_) {
            f(b);
            return;
        }
        for (int t : blossomchilds_[b]) {
            for_leaves(t, f);
        }
    }

    static int wrap(int j, int size) {
        return ((j % size) + size) % size;
    }

    void assign_label(int w, int t, int p);
    int scan_blossom(int v, int w);
    void add_blossom(int base, int k);
    void expand_blossom(int b, bool endstage);
    void augment_blossom(int b, int v);
    void augment_matching(int k);

    int n_;
    std::vector<WeightedEdge> edges_;
    bool max_cardinality_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<uint8_t> has_bestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<int64_t> dualvar_;
    std::vector<uint8_t> allowedge_;
    std::vector<int> queue_;
    std::vector<int> bestedgeto_;
    std::vector<int> touched_;
};

void BlossomSolver::assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
        for_leaves(b, [&](int v) { queue_.push_back(v); });
    } else {
        int base = blossombase_[b];
        assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
}

// Traces back from v and w to find either a new blossom (returns its base) or
// an augmenting path (returns -1).
int BlossomSolver::scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
        int b = inblossom_[v];
        if (label_[b] & 4) {
            base = blossombase_[b];
            break;
        }
        path.push_back(b);
        label_[b] = 5;
        if (labelend_[b] == -1) {
            v = -1;
        } else {
            v = endpoint_[labelend_[b]];
            b = inblossom_[v];
            v = endpoint_[labelend_[b]];
        }
        if (w != -1) {
            std::swap(v, w);
        }
    }
    for (int b : path) {
        label_[b] = 1;
    }
    return base;
}

void BlossomSolver::add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int> &path = blossomchilds_[b];
    std::vector<int> &endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
        blossomparent_[bv] = b;
        path.push_back(bv);
        endps.push_back(labelend_[bv]);
        v = endpoint_[labelend_[bv]];
        bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        blossomparent_[bw] = b;
        path.push_back(bw);
        endps.push_back(labelend_[bw] ^ 1);
        w = endpoint_[labelend_[bw]];
        bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for_leaves(b, [&](int leaf) {
        if (label_[inblossom_[leaf]] == 2) {
            queue_.push_back(leaf);
        }
        inblossom_[leaf] = b;
    });
    std::vector<int> &bestedgeto = bestedgeto_;
    touched_.clear();
    auto consider = [&](int e) {
        int i = edges_[e].u;
        int j = edges_[e].v;
        if (inblossom_[j] == b) {
            std::swap(i, j);
        }
        int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1) {
            if (bestedgeto[bj] == -1) {
                touched_.push_back(bj);
                bestedgeto[bj] = e;
            } else if (slack(e) < slack(bestedgeto[bj])) {
                bestedgeto[bj] = e;
            }
        }
    };
    for (int sub : path) {
        if (!has_bestedges_[sub]) {
            for_leaves(sub, [&](int leaf) {
                for (int p : neighbend_[leaf]) {
                    consider(p / 2);
                }
            });
        } else {
            for (int e : blossombestedges_[sub]) {
                consider(e);
            }
        }
        blossombestedges_[sub].clear();
        has_bestedges_[sub] = 0;
        bestedge_[sub] = -1;
    }
    std::vector<int> &best = blossombestedges_[b];
    best.clear();
    std::sort(touched_.begin(), touched_.end());
    for (int bj : touched_) {
        best.push_back(bestedgeto[bj]);
        bestedgeto[bj] = -1;
    }
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int e : best) {
        if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) {
            bestedge_[b] = e;
        }
    }
}

void BlossomSolver::expand_blossom(int b, bool endstage) {
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
        blossomparent_[s] = -1;
        if (s < n_) {
            inblossom_[s] = s;
        } else if (endstage && dualvar_[s] == 0) {
            expand_blossom(s, endstage);
        } else {
            for_leaves(s, [&](int leaf) { inblossom_[leaf] = s; });
        }
    }
    if (!endstage && label_[b] == 2) {
        const std::vector<int> &endps = blossomendps_[b];
        const int size = static_cast<int>(childs.size());
        int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
        int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
        int jstep;
        int endptrick;
        if (j & 1) {
            j -= size;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        int p = labelend_[b];
        while (j != 0) {
            label_[endpoint_[p ^ 1]] = 0;
            label_[endpoint_[endps[wrap(j - endptrick, size)] ^ endptrick ^ 1]] = 0;
            assign_label(endpoint_[p ^ 1], 2, p);
            allowedge_[endps[wrap(j - endptrick, size)] / 2] = 1;
            j += jstep;
            p = endps[wrap(j - endptrick, size)] ^ endptrick;
            allowedge_[p / 2] = 1;
            j += jstep;
        }
        int bv = childs[wrap(j, size)];
        label_[endpoint_[p ^ 1]] = label_[bv] = 2;
        labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
        bestedge_[bv] = -1;
        j += jstep;
        while (childs[wrap(j, size)] != entrychild) {
            bv = childs[wrap(j, size)];
            if (label_[bv] == 1) {
                j += jstep;
                continue;
            }
            int labelled = -1;
            for_leaves(bv, [&](int leaf) {
                if (labelled == -1 && label_[leaf] != 0) {
                    labelled = leaf;
                }
            });
            if (labelled != -1) {
                label_[labelled] = 0;
                label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                assign_label(labelled, 2, labelend_[labelled]);
            }
            j += jstep;
        }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
}

void BlossomSolver::augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) {
        t = blossomparent_[t];
    }
    if (t >= n_) {
        augment_blossom(t, v);
    }
    std::vector<int> &childs = blossomchilds_[b];
    std::vector<int> &endps = blossomendps_[b];
    const int size = static_cast<int>(childs.size());
    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
        j -= size;
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = childs[wrap(j, size)];
        int p = endps[wrap(j - endptrick, size)] ^ endptrick;
        if (t >= n_) {
            augment_blossom(t, endpoint_[p]);
        }
        j += jstep;
        t = childs[wrap(j, size)];
        if (t >= n_) {
            augment_blossom(t, endpoint_[p ^ 1]);
        }
        mate_[endpoint_[p]] = p ^ 1;
        mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
}

void BlossomSolver::augment_matching(int k) {
    const int v = edges_[k].u;
    const int w = edges_[k].v;
    const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (const auto &start : starts) {
        int s = start[0];
        int p = start[1];
        while (true) {
            int bs = inblossom_[s];
            if (bs >= n_) {
                augment_blossom(bs, s);
            }
            mate_[s] = p;
            if (labelend_[bs] == -1) {
                break;
            }
            int t = endpoint_[labelend_[bs]];
            int bt = inblossom_[t];
            s = endpoint_[labelend_[bt]];
            int j = endpoint_[labelend_[bt] ^ 1];
            if (bt >= n_) {
                augment_blossom(bt, j);
            }
            mate_[j] = labelend_[bt];
            p = labelend_[bt] ^ 1;
        }
    }
}

// Lowers each free vertex dual to the smallest feasible value and matches it
// along an edge that became tight to a still-free neighbour. Requires even
// weights so that all duals keep the same parity.
void BlossomSolver::greedy_start() {
    const int m = static_cast<int>(edges_.size());
    std::fill(dualvar_.begin(), dualvar_.begin() + n_, std::numeric_limits<int64_t>::min());
    for (int k = 0; k < m; ++k) {
        const auto &e = edges_[k];
        if ((e.weight & 1) != 0) {
            throw std::invalid_argument("greedy start needs even weights");
        }
        dualvar_[e.u] = std::max(dualvar_[e.u], e.weight);
        dualvar_[e.v] = std::max(dualvar_[e.v], e.weight);
    }
    for (int v = 0; v < n_; ++v) {
        if (neighbend_[v].empty()) {
            dualvar_[v] = 0;
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (mate_[v] != -1 || neighbend_[v].empty()) {
            continue;
        }
        int64_t lowest = std::numeric_limits<int64_t>::min();
        for (int p : neighbend_[v]) {
            const int k = p / 2;
            lowest = std::max(lowest, 2 * edges_[k].weight - dualvar_[endpoint_[p]]);
        }
        dualvar_[v] = lowest;
        for (int p : neighbend_[v]) {
            const int w = endpoint_[p];
            if (mate_[w] == -1 && slack(p / 2) == 0) {
                mate_[v] = p;
                mate_[w] = p ^ 1;
                break;
            }
        }
    }
}

std::vector<int> BlossomSolver::solve() {
    const int m = static_cast<int>(edges_.size());
    for (int stage = 0; stage < n_; ++stage) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (int b = n_; b < 2 * n_; ++b) {
            blossombestedges_[b].clear();
            has_bestedges_[b] = 0;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), 0);
        queue_.clear();
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                assign_label(v, 1, -1);
            }
        }
        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                int v = queue_.back();
                queue_.pop_back();
                for (int p : neighbend_[v]) {
                    int k = p / 2;
                    int w = endpoint_[p];
                    if (inblossom_[v] == inblossom_[w]) {
                        continue;
                    }
                    int64_t kslack = 0;
                    if (!allowedge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) {
                            allowedge_[k] = 1;
                        }
                    }
                    if (allowedge_[k]) {
                        if (label_[inblossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[inblossom_[w]] == 1) {
                            int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        int b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                            bestedge_[b] = k;
                        }
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                            bestedge_[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }
            int deltatype = -1;
            int64_t delta = 0;
            int deltaedge = -1;
            int deltablossom = -1;
            if (!max_cardinality_) {
                deltatype = 1;
                delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
            }
            for (int v = 0; v < n_; ++v) {
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    int64_t d = slack(bestedge_[v]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[v];
                    }
                }
            }
            for (int b = 0; b < 2 * n_; ++b) {
                if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    int64_t d = slack(bestedge_[b]) / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
            }
            for (int b = n_; b < 2 * n_; ++b) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                    (deltatype == -1 || dualvar_[b] < delta)) {
                    delta = dualvar_[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
            }
            for (int v = 0; v < n_; ++v) {
                int l = label_[inblossom_[v]];
                if (l == 1) {
                    dualvar_[v] -= delta;
                } else if (l == 2) {
                    dualvar_[v] += delta;
                }
            }
            for (int b = n_; b < 2 * n_; ++b) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                    if (label_[b] == 1) {
                        dualvar_[b] += delta;
                    } else if (label_[b] == 2) {
                        dualvar_[b] -= delta;
                    }
                }
            }
            if (deltatype == 1) {
                break;
            } else if (deltatype == 2) {
                allowedge_[deltaedge] = 1;
                int i = edges_[deltaedge].u;
                int j = edges_[deltaedge].v;
                if (label_[inblossom_[i]] == 0) {
                    std::swap(i, j);
                }
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allowedge_[deltaedge] = 1;
                queue_.push_back(edges_[deltaedge].u);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) {
            break;
        }
        for (int b = n_; b < 2 * n_; ++b) {
            if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                expand_blossom(b, true);
            }
        }
    }
    (void)m;
    std::vector<int> out(n_, -1);
    for (int v = 0; v < n_; ++v) {
        if (mate_[v] >= 0) {
            out[v] = endpoint_[mate_[v]];
        }
    }
    return out;
}

}  // namespace

int64_t MatchingDuals::reduced_cost(int u, int v, int64_t w) const {
    int64_t s = dual[u] + dual[v] - 4 * (weight_bound + 1 - w);
    const auto &a = nesting[u];
    const auto &b = nesting[v];
    for (size_t k = 0; k < a.size() && k < b.size() && a[k] == b[k]; ++k) {
        s += 2 * dual[a[k]];
    }
    return s;
}

namespace {

void fill_nesting(MatchingDuals &duals, int num_vertices) {
    duals.nesting.assign(static_cast<size_t>(num_vertices), {});
    for (int v = 0; v < num_vertices; ++v) {
        auto &chain = duals.nesting[v];
        for (int b = duals.parent[v]; b != -1; b = duals.parent[b]) {
            chain.push_back(b);
        }
        std::reverse(chain.begin(), chain.end());
    }
}

}  // namespace

std::vector<int> max_weight_matching(int num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality,
                                     bool greedy_start, MatchingDuals *duals) {
    if (num_vertices < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    if (num_vertices == 0 || edges.empty()) {
        if (duals) {
            duals->dual.assign(2 * static_cast<size_t>(num_vertices), 0);
            duals->parent.assign(2 * static_cast<size_t>(num_vertices), -1);
            fill_nesting(*duals, num_vertices);
        }
        return std::vector<int>(num_vertices, -1);
    }
    BlossomSolver solver(num_vertices, edges, max_cardinality);
    if (greedy_start) {
        if (!max_cardinality) {
            throw std::invalid_argument("greedy start is only valid for maximum-cardinality matching");
        }
        solver.greedy_start();
    }
    std::vector<int> mate = solver.solve();
    if (duals) {
        solver.export_duals(*duals);
        fill_nesting(*duals, num_vertices);
    }
    return mate;
}

std::vector<int> min_weight_perfect_matching(int num_vertices, std::span<const WeightedEdge> edges,
                                             int64_t weight_bound, MatchingDuals *duals) {
    if (num_vertices % 2 != 0) {
        throw std::runtime_error("no perfect matching: odd number of vertices");
    }
    int64_t max_weight = 0;
    for (const auto &e : edges) {
        if (e.weight < 0) {
            throw std::invalid_argument("negative matching weight");
        }
        max_weight = std::max(max_weight, e.weight);
    }
    if (weight_bound < 0) {
        weight_bound = max_weight;
    } else if (weight_bound < max_weight) {
        throw std::invalid_argument("weight bound below the largest weight");
    }
    std::vector<WeightedEdge> flipped(edges.begin(), edges.end());
    for (auto &e : flipped) {
        e.weight = 2 * (weight_bound + 1 - e.weight);
    }
    std::vector<int> mate = max_weight_matching(num_vertices, flipped, true, true, duals);
    if (duals) {
        duals->weight_bound = weight_bound;
    }
    for (int v = 0; v < num_vertices; ++v) {
        if (mate[v] < 0) {
            throw std::runtime_error("no perfect matching exists");
        }
    }
    return mate;
}

}  // namespace ptim
