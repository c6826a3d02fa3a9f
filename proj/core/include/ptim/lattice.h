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

#ifndef PTIM_LATTICE_H
#define PTIM_LATTICE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Space-time lattice of the projective transverse field Ising chain.
//
// Indexing conventions used throughout the library:
//   * sites are 0-based, i in [0, L);
//   * edge d in [0, L-1) joins sites d and d+1 and carries stabilizer Z_d Z_{d+1};
//   * time step t in [1, T] is stored in grid row t-1;
//   * the configuration before step 1 is the all-zero string.
// Within a step errors (bit flips) act first, then stabilizers are measured.

namespace ptim {

/// Model parameters plus the reproducibility seed.
struct Params {
    double p = 0.0;  ///< error-measurement probability per site and step
    double q = 0.0;  ///< probability that a stabilizer is NOT measured
    int length = 1;  ///< L, odd
    int steps = 1;   ///< T
    uint64_t seed = 0;

    /// Throws std::invalid_argument unless 0<=p,q<=1, L odd >= 1 and T >= 1.
    void validate() const;
};

/// Dense row-major boolean grid.
class BoolGrid {
   public:
    BoolGrid() = default;
    BoolGrid(int rows, int cols, bool value = false);

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    bool operator()(int r, int c) const {
        return cells_[index(r, c)] != 0;
    }
    void set(int r, int c, bool value) {
        cells_[index(r, c)] = value ? 1 : 0;
    }
    std::span<const uint8_t> row(int r) const {
        return {cells_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }
    std::span<uint8_t> row(int r) {
        return {cells_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }
    size_t count() const;
    bool operator==(const BoolGrid &other) const = default;

   private:
    size_t index(int r, int c) const {
        return static_cast<size_t>(r) * cols_ + c;
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> cells_;
};

/// Strongly typed T x L grids. The tag only separates the types.
template <typename Tag>
class SpaceTimeGrid : public BoolGrid {
   public:
    using BoolGrid::BoolGrid;
    bool operator==(const SpaceTimeGrid &other) const = default;
};

/// Cell (t-1, i) set iff the environment measures sigma^x on site i in step t.
using ErrorPattern = SpaceTimeGrid<struct ErrorPatternTag>;
/// Cell (t-1, i) set iff bit i flips in step t.
using FlipPattern = SpaceTimeGrid<struct FlipPatternTag>;

/// T x (L-1) grid of measured stabilizers. The last row is always fully set:
/// the final round measures every stabilizer.
class SyndromePattern {
   public:
    SyndromePattern() = default;
    /// All interior rows empty, last row full.
    SyndromePattern(int steps, int length);

    int steps() const {
        return grid_.rows();
    }
    int edges() const {
        return grid_.cols();
    }
    bool operator()(int r, int d) const {
        return grid_(r, d);
    }
    /// Throws std::invalid_argument when clearing a cell of the final row.
    void set(int r, int d, bool value);
    std::span<const uint8_t> row(int r) const {
        return grid_.row(r);
    }
    size_t count() const {
        return grid_.count();
    }
    bool operator==(const SyndromePattern &other) const = default;

   private:
    BoolGrid grid_;
};

/// A length-L classical bit string (configuration, candidate or correction).
class BitConfig {
   public:
    BitConfig() = default;
    explicit BitConfig(int length) : bits_(static_cast<size_t>(length), 0) {
    }
    BitConfig(std::initializer_list<int> bits);
    explicit BitConfig(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    }

    int size() const {
        return static_cast<int>(bits_.size());
    }
    bool operator[](int i) const {
        return bits_[i] != 0;
    }
    void set(int i, bool value) {
        bits_[i] = value ? 1 : 0;
    }
    void flip(int i) {
        bits_[i] ^= 1;
    }
    BitConfig complement() const;
    int weight() const;
    int hamming_distance(const BitConfig &other) const;
    std::span<const uint8_t> bits() const {
        return bits_;
    }
    /// Bit i of the result is site i. Requires size() <= 64.
    uint64_t to_mask() const;
    static BitConfig from_mask(uint64_t mask, int length);
    std::string str() const;

    bool operator==(const BitConfig &other) const = default;

   private:
    std::vector<uint8_t> bits_;
};

/// Measured stabilizer values; +1 / -1, or 0 where nothing was measured.
using SyndromeValue = int8_t;
inline constexpr SyndromeValue kAbsent = 0;
inline constexpr SyndromeValue kPlus = 1;
inline constexpr SyndromeValue kMinus = -1;

/// Where and when stabilizers were measured, and what they returned. This is
/// all a decoder gets to see.
class SyndromeRecord {
   public:
    SyndromeRecord() = default;
    /// `results` is row-major T x (L-1). Throws std::invalid_argument unless a
    /// value is present exactly where `pattern` is set and is +1 or -1.
    SyndromeRecord(SyndromePattern pattern, std::vector<SyndromeValue> results);

    int steps() const {
        return pattern_.steps();
    }
    int length() const {
        return pattern_.edges() + 1;
    }
    int edges() const {
        return pattern_.edges();
    }
    const SyndromePattern &pattern() const {
        return pattern_;
    }
    bool measured(int r, int d) const {
        return pattern_(r, d);
    }
    SyndromeValue result(int r, int d) const {
        return results_[static_cast<size_t>(r) * edges() + d];
    }
    std::span<const SyndromeValue> row(int r) const {
        return {results_.data() + static_cast<size_t>(r) * edges(), static_cast<size_t>(edges())};
    }
    std::span<const SyndromeValue> final_row() const {
        return row(steps() - 1);
    }
    bool operator==(const SyndromeRecord &other) const = default;

   private:
    SyndromePattern pattern_;
    std::vector<SyndromeValue> results_;
};

/// Entry d is +1 when sites d and d+1 agree, -1 otherwise. A single site has
/// no edges; an empty string throws std::invalid_argument.
std::vector<SyndromeValue> syndrome_of_config(const BitConfig &m);

/// The two strings consistent with a complete syndrome row. `first` has bit 0
/// cleared; `second` is its complement.
std::pair<BitConfig, BitConfig> candidate_strings(std::span<const SyndromeValue> final_syndrome);

/// True when `c` reproduces every value of `syndrome`.
bool consistent_with(const BitConfig &c, std::span<const SyndromeValue> syndrome);

}  // namespace ptim

#endif  // PTIM_LATTICE_H
