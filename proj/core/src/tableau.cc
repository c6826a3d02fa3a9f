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

#include "ptim/tableau.h"

#include <bit>
#include <stdexcept>

namespace ptim {

bool PauliRow::commutes_with(const PauliRow &other) const {
    return (std::popcount((x & other.z) ^ (z & other.x)) & 1) == 0;
}

std::string PauliRow::str(int num_qubits) const {
    std::string s(sign ? "-" : "+");
    for (int j = 0; j < num_qubits; ++j) {
        bool bx = (x >> j) & 1;
        bool bz = (z >> j) & 1;
        s.push_back(bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : '_'));
    }
    return s;
}

Tableau::Tableau(int num_qubits) : n_(num_qubits), stab_(num_qubits), destab_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 64) {
        throw std::invalid_argument("tableau supports between 1 and 64 qubits");
    }
    for (int k = 0; k < n_; ++k) {
        stab_[k].z = uint64_t{1} << k;
        destab_[k].x = uint64_t{1} << k;
    }
}

// target := target * source, tracking the sign through the per-qubit phase
// exponents of the Pauli products.
void Tableau::rowsum(PauliRow &target, const PauliRow &source) {
    const uint64_t x1 = source.x, z1 = source.z, x2 = target.x, z2 = target.z;
    const uint64_t y1 = x1 & z1;
    const uint64_t xo = x1 & ~z1;
    const uint64_t zo = z1 & ~x1;
    int pos = std::popcount(y1 & z2 & ~x2) + std::popcount(xo & z2 & x2) + std::popcount(zo & x2 & ~z2);
    int neg = std::popcount(y1 & x2 & ~z2) + std::popcount(xo & z2 & ~x2) + std::popcount(zo & x2 & z2);
    int total = 2 * static_cast<int>(target.sign) + 2 * static_cast<int>(source.sign) + pos - neg;
    total = ((total % 4) + 4) % 4;
    target.sign = total == 2;
    target.x ^= x1;
    target.z ^= z1;
}

std::optional<int> Tableau::peek(PauliRow op) const {
    for (int k = 0; k < n_; ++k) {
        if (!stab_[k].commutes_with(op)) {
            return std::nullopt;
        }
    }
    PauliRow scratch;
    for (int k = 0; k < n_; ++k) {
        if (!destab_[k].commutes_with(op)) {
            rowsum(scratch, stab_[k]);
        }
    }
    return scratch.sign != op.sign ? -1 : +1;
}

int Tableau::measure(PauliRow op, RngStream &rng, bool *was_random) {
    op.sign = false;
    int pivot = -1;
    for (int k = 0; k < n_; ++k) {
        if (!stab_[k].commutes_with(op)) {
            pivot = k;
            break;
        }
    }
    if (pivot < 0) {
        if (was_random) {
            *was_random = false;
        }
        return *peek(op);
    }
    for (int k = 0; k < n_; ++k) {
        if (k != pivot && !stab_[k].commutes_with(op)) {
            rowsum(stab_[k], stab_[pivot]);
        }
        if (!destab_[k].commutes_with(op)) {
            rowsum(destab_[k], stab_[pivot]);
        }
    }
    destab_[pivot] = stab_[pivot];
    stab_[pivot] = op;
    stab_[pivot].sign = rng.coin();
    if (was_random) {
        *was_random = true;
    }
    return stab_[pivot].sign ? -1 : +1;
}

bool Tableau::is_consistent() const {
    for (int j = 0; j < n_; ++j) {
        for (int k = 0; k < n_; ++k) {
            if (!stab_[j].commutes_with(stab_[k]) || !destab_[j].commutes_with(destab_[k])) {
                return false;
            }
            if (destab_[j].commutes_with(stab_[k]) == (j == k)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace ptim
