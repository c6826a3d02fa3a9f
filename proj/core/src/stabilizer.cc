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

#include "ptim/stabilizer.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "ptim/parallel.h"
#include "ptim/sampler.h"

namespace ptim {

namespace {

void check_dimensions(const ErrorPattern &errors, const SyndromePattern &pattern) {
    if (errors.rows() != pattern.steps() || errors.cols() != pattern.edges() + 1) {
        throw std::invalid_argument("error grid and syndrome pattern have different dimensions");
    }
}

struct DisjointSets {
    explicit DisjointSets(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), size_t{0});
    }
    size_t find(size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
        }
    }
    std::vector<size_t> parent;
};

}  // namespace

QuantumRunResult run_quantum(const ErrorPattern &errors, const SyndromePattern &pattern, RngStream &rng) {
    check_dimensions(errors, pattern);
    const int steps = errors.rows();
    const int length = errors.cols();
    const int edges = length - 1;
    QuantumRunResult out;
    out.final_state = Tableau(length);
    Tableau &state = out.final_state;
    std::vector<SyndromeValue> results(static_cast<size_t>(steps) * edges, kAbsent);
    for (int r = 0; r < steps; ++r) {
        for (int i = 0; i < length; ++i) {
            if (errors(r, i)) {
                state.measure(PauliRow{uint64_t{1} << i, 0, false}, rng);
            }
        }
        for (int d = 0; d < edges; ++d) {
            if (pattern(r, d)) {
                uint64_t zz = (uint64_t{1} << d) | (uint64_t{1} << (d + 1));
                int v = state.measure(PauliRow{0, zz, false}, rng);
                results[static_cast<size_t>(r) * edges + d] = v > 0 ? kPlus : kMinus;
            }
        }
    }
    out.syndromes = SyndromeRecord(pattern, std::move(results));
    out.survived = state.peek(PauliRow{0, 1, false}).has_value();
    if (out.survived) {
        out.correct = BitConfig(length);
        for (int i = 0; i < length; ++i) {
            out.correct.set(i, *state.peek(PauliRow{0, uint64_t{1} << i, false}) < 0);
        }
    }
    return out;
}

double evaluate_fqm(const QuantumRunResult &result, const BitConfig &c) {
    if (!consistent_with(c, result.syndromes.final_row())) {
        throw std::invalid_argument("correction string is not one of the two final-syndrome candidates");
    }
    if (!result.survived) {
        return 0.5;
    }
    return c == result.correct ? 1.0 : 0.0;
}

bool cluster_survives(const ErrorPattern &errors, const SyndromePattern &pattern) {
    check_dimensions(errors, pattern);
    const int steps = errors.rows();
    const int length = errors.cols();
    auto vertex = [length](int t, int i) {
        return static_cast<size_t>(t) * length + i;
    };
    DisjointSets sets(static_cast<size_t>(steps + 1) * length);
    for (int i = 0; i + 1 < length; ++i) {
        sets.unite(vertex(0, i), vertex(0, i + 1));
    }
    for (int t = 1; t <= steps; ++t) {
        for (int i = 0; i < length; ++i) {
            if (!errors(t - 1, i)) {
                sets.unite(vertex(t - 1, i), vertex(t, i));
            }
        }
        for (int d = 0; d + 1 < length; ++d) {
            if (pattern(t - 1, d)) {
                sets.unite(vertex(t, d), vertex(t, d + 1));
            }
        }
    }
    const size_t root = sets.find(vertex(0, 0));
    for (int i = 0; i < length; ++i) {
        if (sets.find(vertex(steps, i)) == root) {
            return true;
        }
    }
    return false;
}

Estimate full_knowledge_pd(const Params &params, size_t n, int workers) {
    params.validate();
    if (n < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    std::vector<double> values(n);
    parallel_for(n, workers, [&](size_t k) {
        SampledInstance s = sample_instance(params, k);
        values[k] = cluster_survives(s.errors, s.pattern) ? 1.0 : 0.5;
    });
    return estimate_from(values);
}

}  // namespace ptim
