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

#include "ptim/mvd.h"

#include <stdexcept>

namespace ptim {

std::vector<Segment> segments_at(const SyndromeRecord &record, int t) {
    if (t < 1 || t > record.steps()) {
        throw std::invalid_argument("step out of range");
    }
    std::vector<Segment> out;
    const int length = record.length();
    int first = 0;
    for (int d = 0; d < length - 1; ++d) {
        if (!record.measured(t - 1, d)) {
            out.push_back({t, first, d});
            first = d + 1;
        }
    }
    out.push_back({t, first, length - 1});
    return out;
}

void MajorityVoter::apply_row(std::span<const SyndromeValue> row, RngStream &rng) {
    const int length = current_.size();
    if (static_cast<int>(row.size()) != length - 1) {
        throw std::invalid_argument("syndrome row length does not match the chain");
    }
    option_.resize(static_cast<size_t>(length));
    int first = 0;
    while (first < length) {
        int last = first;
        while (last < length - 1 && row[last] != kAbsent) {
            ++last;
        }
        if (last > first) {
            option_[first] = 0;
            int flips = current_[first] ? 1 : 0;
            for (int i = first; i < last; ++i) {
                option_[i + 1] = option_[i] ^ (row[i] == kMinus ? 1 : 0);
                flips += option_[i + 1] != static_cast<uint8_t>(current_[i + 1]);
            }
            const int size = last - first + 1;
            bool take_complement = 2 * flips > size || (2 * flips == size && rng.coin());
            for (int i = first; i <= last; ++i) {
                current_.set(i, (option_[i] != 0) != take_complement);
            }
        }
        first = last + 1;
    }
}

BitConfig decode_mvd(const SyndromeRecord &record, RngStream &rng) {
    MajorityVoter voter(record.length());
    for (int r = 0; r < record.steps(); ++r) {
        voter.apply_row(record.row(r), rng);
    }
    return voter.current();
}

}  // namespace ptim
