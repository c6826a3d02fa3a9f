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

#ifndef PTIM_MLD_H
#define PTIM_MLD_H

#include <cstdint>
#include <span>
#include <vector>

#include "ptim/errors.h"
#include "ptim/lattice.h"
#include "ptim/rng.h"

namespace ptim {

/// Unnormalized probability of a correction class, kept as a natural log.
struct ClassWeight {
    double log = 0.0;
    bool is_zero = true;

    /// exp(log), or 0 for an exact zero.
    double value() const;
};

/// The two class weights of one record, for candidate_strings(final row).
struct ClassPair {
    ClassWeight candidate;
    ClassWeight complement;
};

/// Forward sum over configuration histories. The state is one weight per
/// configuration (2^L entries); a step applies independent per-site flips with
/// probability p/2 and then zeroes every configuration that contradicts the
/// measured syndromes. Weights are rescaled by their maximum after every step
/// and the scale is carried as a log.
class LikelihoodTransfer {
   public:
    /// Throws CapacityError above max_length() sites.
    LikelihoodTransfer(int length, double p);

    static constexpr int max_length() {
        return 20;
    }

    void apply_row(std::span<const SyndromeValue> row);

    /// The class weights if the next row were `full_row`; the state is left untouched.
    ClassPair close(std::span<const SyndromeValue> full_row) const;

   private:
    void step(std::span<const SyndromeValue> row, std::vector<double> &weights, double &log_scale) const;

    int length_;
    double flip_;
    std::vector<double> weights_;
    double log_scale_ = 0.0;
};

/// Log of the total probability of the flip histories that start from all
/// zeros, reproduce every measured syndrome and end in `c` (one of the two
/// final-syndrome candidates, else std::invalid_argument). The probability of
/// the measurement pattern itself is common to both classes and left out.
/// p in {0, 1} is handled exactly. Throws CapacityError for L > 20.
ClassWeight class_log_probability(const SyndromeRecord &record, const BitConfig &c, double p);

/// Both class weights from a single forward pass.
ClassPair class_log_probabilities(const SyndromeRecord &record, double p);

/// Same quantity by enumerating all 2^(L*T) flip grids. Throws CapacityError
/// when L*T > 20.
ClassWeight brute_force_class_probability(const SyndromeRecord &record, const BitConfig &c, double p);

/// True when the two weights agree to within a relative 1e-12.
bool weights_tie(const ClassWeight &a, const ClassWeight &b);

/// The heavier class; a tie is settled by one coin from `rng` (heads picks
/// the complement).
BitConfig choose_class(const ClassPair &weights, std::span<const SyndromeValue> final_row, RngStream &rng);

/// Maximum-likelihood decoder over the two candidates.
BitConfig decode_mld(const SyndromeRecord &record, double p, RngStream &rng);

}  // namespace ptim

#endif  // PTIM_MLD_H
