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

#ifndef PTIM_MIN_FLIP_H
#define PTIM_MIN_FLIP_H

#include <cstdint>
#include <span>
#include <vector>

#include "ptim/errors.h"
#include "ptim/lattice.h"

namespace ptim {

/// Smallest number of flips over all histories consistent with a syndrome
/// record, split by the final configuration: `candidate` ends in the first
/// string of candidate_strings(final row), `complement` in its complement.
struct ClassMinimum {
    int64_t candidate = 0;
    int64_t complement = 0;
};

/// Exact (min, +) transfer over the configurations allowed by each syndrome
/// row. A row fixes every maximal measured run ("segment") up to a complement,
/// so the state is a table over one bit per segment. Moving to the next row
/// sweeps the chain once, swapping old segment bits for new ones, which keeps
/// the work per row near (number of segments) * 2^(number of segments).
class MinFlipTransfer {
   public:
    /// Starts from the all-zero configuration.
    explicit MinFlipTransfer(int length);

    int length() const {
        return length_;
    }

    /// Absorbs one syndrome row (kAbsent where nothing was measured).
    /// Throws CapacityError when the table would exceed 2^max_table_bits().
    void apply_row(std::span<const SyndromeValue> row);

    /// The per-class minima if the next row were `full_row` (every edge
    /// measured). The transfer state is left untouched.
    ClassMinimum close(std::span<const SyndromeValue> full_row) const;

    /// Number of segments of the current row.
    int segments() const {
        return static_cast<int>(segment_end_.size());
    }

    static constexpr int max_table_bits() {
        return 26;
    }

   private:
    void transfer(std::span<const SyndromeValue> row, std::vector<int> &segment_end, std::vector<uint8_t> &base,
                  std::vector<int32_t> &table) const;

    int length_;
    std::vector<int> segment_end_;  // last site of each segment, ascending
    std::vector<uint8_t> base_;     // configuration when every segment bit is 0
    std::vector<int32_t> table_;
    mutable std::vector<int32_t> scratch_;
    mutable std::vector<int> prefix_;
};

/// Runs the transfer over a whole record.
ClassMinimum min_flips_by_class(const SyndromeRecord &record);

/// Rough operation count of min_flips_by_class on this record, used to pick
/// between the transfer and the matching graph.
double min_flip_work(const SyndromeRecord &record);

}  // namespace ptim

#endif  // PTIM_MIN_FLIP_H
