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

#ifndef PTIM_MVD_H
#define PTIM_MVD_H

#include <span>
#include <vector>

#include "ptim/lattice.h"
#include "ptim/rng.h"

namespace ptim {

/// Maximal run of sites [first, last] joined by stabilizers measured in one step.
struct Segment {
    int step = 1;  ///< 1-based time step
    int first = 0;
    int last = 0;

    int size() const {
        return last - first + 1;
    }
    bool operator==(const Segment &other) const = default;
};

/// Partition of the sites into maximal measured runs at step t (1 <= t <= T).
/// Sites without a measured neighbouring edge form singletons.
std::vector<Segment> segments_at(const SyndromeRecord &record, int t);

/// Majority voting with a tentative configuration that is updated one step at a time.
class MajorityVoter {
   public:
    explicit MajorityVoter(int length) : current_(length) {
    }

    /// Applies one syndrome row (kAbsent where nothing was measured). Each
    /// segment takes whichever of its two consistent configurations needs
    /// fewer flips; an exact tie is settled by one coin from `rng`.
    void apply_row(std::span<const SyndromeValue> row, RngStream &rng);

    const BitConfig &current() const {
        return current_;
    }

   private:
    BitConfig current_;
    std::vector<uint8_t> option_;
};

/// Runs MajorityVoter over every row of the record and returns the final
/// tentative configuration.
BitConfig decode_mvd(const SyndromeRecord &record, RngStream &rng);

}  // namespace ptim

#endif  // PTIM_MVD_H
