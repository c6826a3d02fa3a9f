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

#ifndef PTIM_STABILIZER_H
#define PTIM_STABILIZER_H

#include "ptim/estimate.h"
#include "ptim/lattice.h"
#include "ptim/rng.h"
#include "ptim/tableau.h"

namespace ptim {

/// Outcome of simulating the quantum chain on a tableau.
struct QuantumRunResult {
    SyndromeRecord syndromes;
    Tableau final_state{1};
    /// The logical amplitudes survived: Z on site 0 (and therefore every Z_i)
    /// has a definite value at the end.
    bool survived = false;
    /// The string m with Z_i = (-1)^{m_i} on the final state when `survived`.
    BitConfig correct;
};

/// Starts from |0...0> and, for every step, measures X_i at the cells of
/// `errors` and then Z_d Z_{d+1} at the cells of `pattern`. Random outcomes
/// consume one coin each from `rng` in that order; determined outcomes consume
/// nothing. Supports 1 <= L <= 64. Throws std::invalid_argument on
/// mismatched dimensions.
QuantumRunResult run_quantum(const ErrorPattern &errors, const SyndromePattern &pattern, RngStream &rng);

/// 1 for the correct string and 0 for its complement when the amplitudes
/// survived, 1/2 for either candidate otherwise. Throws std::invalid_argument
/// when c is not consistent with the final syndrome row.
double evaluate_fqm(const QuantumRunResult &result, const BitConfig &c);

/// Bond percolation of the initial cluster on vertices (t, i), t in [0, T].
/// Row 0 is one connected cluster; (t, i)-(t, i+1) is bonded when edge i was
/// measured in step t; (t-1, i)-(t, i) is bonded unless step t measured X_i.
/// True iff the cluster of row 0 reaches row T.
bool cluster_survives(const ErrorPattern &errors, const SyndromePattern &pattern);

/// Monte Carlo decoding probability of a decoder that knows the whole
/// trajectory: 1 when the cluster survives, 1/2 otherwise. Uses the samples
/// of sample_instance(params, 0..n-1).
Estimate full_knowledge_pd(const Params &params, size_t n, int workers = 1);

}  // namespace ptim

#endif  // PTIM_STABILIZER_H
