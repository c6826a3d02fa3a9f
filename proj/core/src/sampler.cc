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

#include "ptim/sampler.h"

#include <stdexcept>

namespace ptim {

ErrorPattern sample_error_pattern(const Params &params, RngStream &rng) {
    params.validate();
    ErrorPattern out(params.steps, params.length);
    for (int r = 0; r < params.steps; ++r) {
        for (int i = 0; i < params.length; ++i) {
            out.set(r, i, rng.bernoulli(params.p));
        }
    }
    return out;
}

FlipPattern sample_flips_direct(const Params &params, RngStream &rng) {
    params.validate();
    FlipPattern out(params.steps, params.length);
    const double half = params.p / 2;
    for (int r = 0; r < params.steps; ++r) {
        for (int i = 0; i < params.length; ++i) {
            out.set(r, i, rng.bernoulli(half));
        }
    }
    return out;
}

FlipPattern sample_flips_two_stage(const ErrorPattern &errors, RngStream &rng) {
    FlipPattern out(errors.rows(), errors.cols());
    for (int r = 0; r < errors.rows(); ++r) {
        for (int i = 0; i < errors.cols(); ++i) {
            if (errors(r, i)) {
                out.set(r, i, rng.coin());
            }
        }
    }
    return out;
}

SyndromePattern sample_syndrome_pattern(const Params &params, RngStream &rng) {
    params.validate();
    SyndromePattern out(params.steps, params.length);
    const double measured = 1.0 - params.q;
    for (int r = 0; r + 1 < params.steps; ++r) {
        for (int d = 0; d < out.edges(); ++d) {
            out.set(r, d, rng.bernoulli(measured));
        }
    }
    return out;
}

Trajectory run_classical(const FlipPattern &flips, const SyndromePattern &pattern) {
    const int steps = flips.rows();
    const int length = flips.cols();
    if (pattern.steps() != steps || pattern.edges() != length - 1) {
        throw std::invalid_argument("flip grid and syndrome pattern have different dimensions");
    }
    Trajectory out;
    out.flips = flips;
    out.configs.reserve(static_cast<size_t>(steps) + 1);
    out.configs.emplace_back(length);
    std::vector<SyndromeValue> results(static_cast<size_t>(steps) * (length - 1), kAbsent);
    for (int r = 0; r < steps; ++r) {
        BitConfig m = out.configs.back();
        for (int i = 0; i < length; ++i) {
            if (flips(r, i)) {
                m.flip(i);
            }
        }
        for (int d = 0; d + 1 < length; ++d) {
            if (pattern(r, d)) {
                results[static_cast<size_t>(r) * (length - 1) + d] = m[d] == m[d + 1] ? kPlus : kMinus;
            }
        }
        out.configs.push_back(std::move(m));
    }
    out.syndromes = SyndromeRecord(pattern, std::move(results));
    return out;
}

Trajectory truncate(const Trajectory &trajectory, int t) {
    if (t < 1 || t > trajectory.steps()) {
        throw std::invalid_argument("truncation step out of range");
    }
    const int length = trajectory.length();
    FlipPattern flips(t, length);
    for (int r = 0; r < t; ++r) {
        for (int i = 0; i < length; ++i) {
            flips.set(r, i, trajectory.flips(r, i));
        }
    }
    SyndromePattern pattern(t, length);
    const SyndromePattern &original = trajectory.syndromes.pattern();
    for (int r = 0; r + 1 < t; ++r) {
        for (int d = 0; d + 1 < length; ++d) {
            pattern.set(r, d, original(r, d));
        }
    }
    return run_classical(flips, pattern);
}

SampledInstance sample_instance(const Params &params, uint64_t index) {
    RngStream rng(params.seed, index, StreamTag::kTrajectory);
    SampledInstance out;
    out.errors = sample_error_pattern(params, rng);
    FlipPattern flips = sample_flips_two_stage(out.errors, rng);
    out.pattern = sample_syndrome_pattern(params, rng);
    out.trajectory = run_classical(flips, out.pattern);
    return out;
}

int evaluate_fbi(const Trajectory &trajectory, const BitConfig &c) {
    if (c.size() != trajectory.length()) {
        throw std::invalid_argument("correction string length differs from the chain length");
    }
    return c == trajectory.final_config() ? 1 : 0;
}

}  // namespace ptim
