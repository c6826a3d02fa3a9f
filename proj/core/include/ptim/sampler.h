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

#ifndef PTIM_SAMPLER_H
#define PTIM_SAMPLER_H

#include <vector>

#include "ptim/lattice.h"
#include "ptim/rng.h"

namespace ptim {

/// A classical realization of the chain: flips, the configuration after every
/// step and the syndrome record produced by measuring those configurations.
struct Trajectory {
    FlipPattern flips;
    std::vector<BitConfig> configs;  ///< m_0 .. m_T; m_0 is all zeros
    SyndromeRecord syndromes;

    int steps() const {
        return flips.rows();
    }
    int length() const {
        return flips.cols();
    }
    const BitConfig &final_config() const {
        return configs.back();
    }
};

/// Each cell set independently with probability p. Draws row by row, sites ascending.
ErrorPattern sample_error_pattern(const Params &params, RngStream &rng);

/// Each cell set independently with probability p/2.
FlipPattern sample_flips_direct(const Params &params, RngStream &rng);

/// Every marked cell of `errors` flips with probability 1/2; unmarked cells
/// never flip and consume no randomness.
FlipPattern sample_flips_two_stage(const ErrorPattern &errors, RngStream &rng);

/// Rows 1..T-1 measured independently with probability 1-q per edge, edges
/// ascending; the final row is always complete and consumes no randomness.
SyndromePattern sample_syndrome_pattern(const Params &params, RngStream &rng);

/// Applies the flips to the all-zero start and measures every stabilizer the
/// pattern selects. Throws std::invalid_argument on mismatched dimensions.
Trajectory run_classical(const FlipPattern &flips, const SyndromePattern &pattern);

/// The trajectory cut after step t (1 <= t <= T) and closed by a complete
/// syndrome round on m_t. Rows before t keep their original pattern.
Trajectory truncate(const Trajectory &trajectory, int t);

/// Everything drawn for one Monte Carlo sample.
struct SampledInstance {
    ErrorPattern errors;
    SyndromePattern pattern;
    Trajectory trajectory;
};

/// Sample `index` of a run: the stream (params.seed, index, kTrajectory) draws
/// the error pattern, then the two-stage flips, then the syndrome pattern.
/// Every decoder in a comparison sees the same instance for the same index.
SampledInstance sample_instance(const Params &params, uint64_t index);

/// 1 iff c equals the final configuration bit for bit.
int evaluate_fbi(const Trajectory &trajectory, const BitConfig &c);

}  // namespace ptim

#endif  // PTIM_SAMPLER_H
