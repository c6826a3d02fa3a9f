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

#include "ptim/lattice.h"

#include <algorithm>
#include <stdexcept>

namespace ptim {

void Params::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1], got " + std::to_string(p));
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("q must lie in [0, 1], got " + std::to_string(q));
    }
    if (length < 1 || length % 2 == 0) {
        throw std::invalid_argument("L must be a positive odd integer, got " + std::to_string(length));
    }
    if (steps < 1) {
        throw std::invalid_argument("T must be positive, got " + std::to_string(steps));
    }
}

BoolGrid::BoolGrid(int rows, int cols, bool value)
    : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * static_cast<size_t>(cols), value ? 1 : 0) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("grid dimensions must be non-negative");
    }
}

size_t BoolGrid::count() const {
    return static_cast<size_t>(std::count(cells_.begin(), cells_.end(), uint8_t{1}));
}

SyndromePattern::SyndromePattern(int steps, int length) : grid_(steps, length - 1) {
    if (steps < 1 || length < 1) {
        throw std::invalid_argument("syndrome pattern needs T >= 1 and L >= 1");
    }
    for (int d = 0; d < edges(); ++d) {
        grid_.set(steps - 1, d, true);
    }
}

void SyndromePattern::set(int r, int d, bool value) {
    if (r == steps() - 1 && !value) {
        throw std::invalid_argument("the final syndrome row is always fully measured");
    }
    grid_.set(r, d, value);
}

BitConfig::BitConfig(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        bits_.push_back(b ? 1 : 0);
    }
}

BitConfig BitConfig::complement() const {
    BitConfig out = *this;
    for (auto &b : out.bits_) {
        b ^= 1;
    }
    return out;
}

int BitConfig::weight() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), uint8_t{1}));
}

int BitConfig::hamming_distance(const BitConfig &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("hamming distance of strings with different lengths");
    }
    int n = 0;
    for (size_t i = 0; i < bits_.size(); ++i) {
        n += bits_[i] != other.bits_[i];
    }
    return n;
}

uint64_t BitConfig::to_mask() const {
    if (size() > 64) {
        throw std::invalid_argument("bit string longer than 64 sites has no mask form");
    }
    uint64_t mask = 0;
    for (int i = 0; i < size(); ++i) {
        if (bits_[i]) {
            mask |= uint64_t{1} << i;
        }
    }
    return mask;
}

BitConfig BitConfig::from_mask(uint64_t mask, int length) {
    BitConfig out(length);
    for (int i = 0; i < length; ++i) {
        out.bits_[i] = (mask >> i) & 1;
    }
    return out;
}

std::string BitConfig::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

SyndromeRecord::SyndromeRecord(SyndromePattern pattern, std::vector<SyndromeValue> results)
    : pattern_(std::move(pattern)), results_(std::move(results)) {
    const size_t expected = static_cast<size_t>(pattern_.steps()) * pattern_.edges();
    if (results_.size() != expected) {
        throw std::invalid_argument("syndrome results do not match the pattern dimensions");
    }
    for (int r = 0; r < steps(); ++r) {
        for (int d = 0; d < edges(); ++d) {
            SyndromeValue v = result(r, d);
            if (pattern_(r, d)) {
                if (v != kPlus && v != kMinus) {
                    throw std::invalid_argument("measured stabilizer without a +1/-1 result");
                }
            } else if (v != kAbsent) {
                throw std::invalid_argument("result recorded for an unmeasured stabilizer");
            }
        }
    }
}

std::vector<SyndromeValue> syndrome_of_config(const BitConfig &m) {
    if (m.size() < 1) {
        throw std::invalid_argument("empty bit string has no syndrome");
    }
    std::vector<SyndromeValue> out(static_cast<size_t>(m.size() - 1));
    for (int d = 0; d + 1 < m.size(); ++d) {
        out[d] = m[d] == m[d + 1] ? kPlus : kMinus;
    }
    return out;
}

std::pair<BitConfig, BitConfig> candidate_strings(std::span<const SyndromeValue> final_syndrome) {
    BitConfig c(static_cast<int>(final_syndrome.size()) + 1);
    for (size_t d = 0; d < final_syndrome.size(); ++d) {
        if (final_syndrome[d] != kPlus && final_syndrome[d] != kMinus) {
            throw std::invalid_argument("candidate strings need a complete +1/-1 syndrome row");
        }
        c.set(static_cast<int>(d) + 1, c[static_cast<int>(d)] ^ (final_syndrome[d] == kMinus));
    }
    BitConfig cbar = c.complement();
    return {std::move(c), std::move(cbar)};
}

bool consistent_with(const BitConfig &c, std::span<const SyndromeValue> syndrome) {
    if (static_cast<size_t>(c.size()) != syndrome.size() + 1) {
        return false;
    }
    for (size_t d = 0; d < syndrome.size(); ++d) {
        bool differs = c[static_cast<int>(d)] != c[static_cast<int>(d) + 1];
        if (syndrome[d] != (differs ? kMinus : kPlus)) {
            return false;
        }
    }
    return true;
}

}  // namespace ptim
