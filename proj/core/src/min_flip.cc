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

#include "ptim/min_flip.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ptim {

namespace {

constexpr int32_t kInfinity = 1 << 29;

}  // namespace

MinFlipTransfer::MinFlipTransfer(int length) : length_(length) {
    if (length < 1) {
        throw std::invalid_argument("chain length must be positive");
    }
    segment_end_ = {length - 1};
    base_.assign(static_cast<size_t>(length), 0);
    table_ = {0, kInfinity};
}

void MinFlipTransfer::transfer(std::span<const SyndromeValue> row, std::vector<int> &segment_end,
                               std::vector<uint8_t> &base, std::vector<int32_t> &table) const {
    if (static_cast<int>(row.size()) != length_ - 1) {
        throw std::invalid_argument("syndrome row length does not match the chain");
    }
    std::vector<int> new_end;
    std::vector<uint8_t> new_base(static_cast<size_t>(length_), 0);
    for (int d = 0; d < length_ - 1; ++d) {
        if (row[d] == kAbsent) {
            new_end.push_back(d);
        } else {
            new_base[d + 1] = new_base[d] ^ (row[d] == kMinus ? 1 : 0);
        }
    }
    new_end.push_back(length_ - 1);

    prefix_.assign(static_cast<size_t>(length_) + 1, 0);
    for (int i = 0; i < length_; ++i) {
        prefix_[i + 1] = prefix_[i] + (base[i] != new_base[i] ? 1 : 0);
    }

    std::vector<int32_t> &v = table;
    std::vector<int32_t> &w = scratch_;
    int dim = static_cast<int>(segment_end.size());
    size_t a = 0;
    size_t b = 0;
    int pos = 0;
    auto introduce = [&]() {
        if (dim + 1 > max_table_bits()) {
            throw CapacityError("segment transfer table exceeds 2^" + std::to_string(max_table_bits()) + " entries");
        }
        const size_t half = size_t{1} << dim;
        v.resize(2 * half);
        std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half), v.begin() + static_cast<std::ptrdiff_t>(half));
        ++dim;
    };
    introduce();
    while (pos < length_) {
        const int end = std::min(segment_end[a], new_end[b]);
        const int32_t len = end - pos + 1;
        // Flips in the block when both segment bits agree, and when they differ.
        const int32_t agree = prefix_[end + 1] - prefix_[pos];
        const int32_t disagree = len - agree;
        const size_t size = size_t{1} << dim;
        const size_t half = size >> 1;
        // Bit 0 is the current old segment, the top bit the current new one.
        for (size_t x = 0; x < half; x += 2) {
            v[x] += agree;
            v[x + 1] += disagree;
        }
        for (size_t x = half; x < size; x += 2) {
            v[x] += disagree;
            v[x + 1] += agree;
        }
        const bool old_done = end == segment_end[a];
        const bool new_done = end == new_end[b];
        if (old_done) {
            const size_t out = size >> 1;
            w.resize(out);
            for (size_t y = 0; y < out; ++y) {
                w[y] = std::min(std::min(v[2 * y], v[2 * y + 1]), kInfinity);
            }
            v.swap(w);
            --dim;
            ++a;
        }
        pos = end + 1;
        if (new_done) {
            ++b;
            if (pos < length_) {
                introduce();
            }
        }
    }
    segment_end.swap(new_end);
    base.swap(new_base);
}

void MinFlipTransfer::apply_row(std::span<const SyndromeValue> row) {
    transfer(row, segment_end_, base_, table_);
}

ClassMinimum MinFlipTransfer::close(std::span<const SyndromeValue> full_row) const {
    for (auto value : full_row) {
        if (value == kAbsent) {
            throw std::invalid_argument("closing row must be fully measured");
        }
    }
    std::vector<int> segment_end = segment_end_;
    std::vector<uint8_t> base = base_;
    std::vector<int32_t> table = table_;
    transfer(full_row, segment_end, base, table);
    return {table[0], table[1]};
}

ClassMinimum min_flips_by_class(const SyndromeRecord &record) {
    MinFlipTransfer transfer(record.length());
    for (int r = 0; r + 1 < record.steps(); ++r) {
        transfer.apply_row(record.row(r));
    }
    return transfer.close(record.final_row());
}

double min_flip_work(const SyndromeRecord &record) {
    double work = 0;
    int previous = 1;
    for (int r = 0; r < record.steps(); ++r) {
        int segments = 1;
        for (int d = 0; d < record.edges(); ++d) {
            segments += record.measured(r, d) ? 0 : 1;
        }
        work += static_cast<double>(segments + previous) * std::ldexp(1.0, (segments + previous) / 2 + 1);
        previous = segments;
    }
    return work;
}

}  // namespace ptim
