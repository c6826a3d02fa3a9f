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

#ifndef PTIM_METRICS_H
#define PTIM_METRICS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptim/estimate.h"
#include "ptim/lattice.h"
#include "ptim/sampler.h"

namespace ptim {

/// Library version, e.g. "0.3.0".
const char *version();

enum class Decoder {
    kFull,  ///< knows the whole trajectory: 1 if the amplitudes survive, else 1/2
    kMvd,
    kMwpm,
    kMld,
};

/// "full", "mvd", "mwpm" or "mld".
std::string_view decoder_name(Decoder decoder);

/// Inverse of decoder_name. Throws std::invalid_argument on unknown names.
Decoder parse_decoder(std::string_view name);

/// Output of a decoder that sees only the record (MVD, MWPM or MLD; the
/// full-knowledge decoder throws std::invalid_argument). MLD uses `p`.
BitConfig run_decoder(Decoder decoder, const SyndromeRecord &record, double p, RngStream &coins);

/// Decoding value of one sampled instance: for the full-knowledge decoder 1
/// when the initial cluster survives and 1/2 otherwise, for the others 1 when
/// the output equals the final configuration and 0 otherwise. Decoder coins
/// come from the stream (params.seed, index, kDecoderCoins).
double decode_value(Decoder decoder, const Params &params, const SampledInstance &instance, uint64_t index);

/// Mean decoding value over sample_instance(params, 0..n-1). The result does
/// not depend on `workers`. MLD throws CapacityError for L > 20.
Estimate estimate_pd(Decoder decoder, const Params &params, size_t n, int workers = 1);

/// estimate_pd for several decoders on the same instances (common random
/// numbers). Entry k belongs to decoders[k].
std::vector<Estimate> estimate_pd_common(std::span<const Decoder> decoders, const Params &params, size_t n,
                                         int workers = 1);

/// Decoding probability measured twice: on the quantum chain (tableau
/// simulation scored by f^qm) and on independent classical trajectories
/// (scored by f^bi). The two should agree for every decoder.
struct CrossCheck {
    Estimate quantum;
    Estimate classical;
    double combined_std_error = 0.0;
    double deviation = 0.0;  ///< |quantum - classical| / combined_std_error, 0 when both errors vanish
    bool pass = false;       ///< deviation <= 4, or exact agreement
};

/// Quantum sample i uses sample_instance(params, i) for the measurement
/// locations and the stream (seed, i, kQuantumOutcomes) for random outcomes.
/// Classical sample i uses sample_instance with the master seed derived from
/// (seed, 0, kClassicalCheck), so the two sides are independent. Requires
/// L <= 64 for the tableau.
CrossCheck crosscheck_pd(Decoder decoder, const Params &params, size_t n, int workers = 1);

struct MtffResult {
    double mean = 0.0;
    double std_error = 0.0;
    size_t count = 0;
    size_t censored = 0;  ///< trajectories still correct at t_max (counted as t_max)
    int t_max = 0;
};

/// Time of the first failure of one open-ended trajectory, or nullopt when it
/// lasts to t_max. At every step t the record is cut after t, closed with a
/// complete syndrome round on m_t and decoded; the first t whose decoding
/// value drops below 1 is returned. params.steps is ignored.
///
/// The trajectory is drawn one step at a time from the stream (seed, index,
/// kTrajectory): per step the error row, one coin per error cell, then the
/// measurement row. Decoder coins for every cut come from a fresh stream
/// (seed, index, kDecoderCoins), so each cut is decoded exactly as a
/// standalone record would be.
std::optional<int> first_failure(Decoder decoder, const Params &params, uint64_t index, int t_max);

/// Mean time to first failure over indices 0..n-1; censored trajectories
/// contribute t_max.
MtffResult mtff(Decoder decoder, const Params &params, size_t n, int t_max, int workers = 1);

/// Closed-form decoding probability of MWPM at q = 0 (every stabilizer
/// measured every step): with P the chance that a single step flips a
/// majority of the L sites, the decoder succeeds iff an even number of steps
/// do so. Requires odd L >= 1, T >= 1 and p in [0, 1].
double analytic_pd_mwpm_q0(double p, int length, int steps);

/// P_D against p for one system size.
struct PdCurve {
    int length = 0;
    std::vector<double> p;
    std::vector<double> pd;
};

struct Crossing {
    bool found = false;
    double value = 0.0;   ///< median over size pairs
    double spread = 0.0;  ///< half the range over size pairs
    std::vector<double> pair_values;
};

/// Where curves of different sizes cross. For every pair of sizes the
/// difference is taken on their common p values, and each sign change is
/// located by linear interpolation (a single exact zero between opposite
/// signs is taken as is); a pair with several crossings contributes their
/// median. Throws std::invalid_argument for fewer than two curves or
/// mismatched curve data.
Crossing threshold_crossing(std::span<const PdCurve> curves);

}  // namespace ptim

#endif  // PTIM_METRICS_H
