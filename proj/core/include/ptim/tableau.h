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

#ifndef PTIM_TABLEAU_H
#define PTIM_TABLEAU_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptim/rng.h"

namespace ptim {

/// Hermitian Pauli product (-1)^sign * prod_j P_j on up to 64 qubits, where
/// P_j is X when only x bit j is set, Z when only z bit j is set and Y when both are.
struct PauliRow {
    uint64_t x = 0;
    uint64_t z = 0;
    bool sign = false;

    bool commutes_with(const PauliRow &other) const;
    bool operator==(const PauliRow &other) const = default;
    std::string str(int num_qubits) const;
};

/// Stabilizer tableau with destabilizers, restricted to Pauli measurements.
/// Supports at most 64 qubits.
class Tableau {
   public:
    /// The state |0...0>: stabilizers Z_i, destabilizers X_i.
    explicit Tableau(int num_qubits);

    int num_qubits() const {
        return n_;
    }
    const PauliRow &stabilizer(int k) const {
        return stab_[k];
    }
    const PauliRow &destabilizer(int k) const {
        return destab_[k];
    }

    /// The +1/-1 outcome the state assigns to `op` with certainty, if any.
    std::optional<int> peek(PauliRow op) const;

    /// Projectively measures `op` (its sign is ignored) and returns +1 or -1.
    /// Random outcomes use one fair coin from `rng`; determined outcomes use
    /// none. `was_random` reports which case happened.
    int measure(PauliRow op, RngStream &rng, bool *was_random = nullptr);

    /// Checks the symplectic relations: stabilizers commute pairwise,
    /// destabilizers commute pairwise, and destabilizer j anticommutes with
    /// stabilizer k exactly when j == k.
    bool is_consistent() const;

   private:
    static void rowsum(PauliRow &target, const PauliRow &source);

    int n_;
    std::vector<PauliRow> stab_;
    std::vector<PauliRow> destab_;
};

}  // namespace ptim

#endif  // PTIM_TABLEAU_H
