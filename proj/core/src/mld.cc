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

#include "ptim/mld.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ptim {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    }
}

ClassWeight weight_from(double w, double log_scale) {
    if (w <= 0.0) {
        return ClassWeight{};
    }
    return ClassWeight{std::log(w) + log_scale, false};
}

// Bits d of the measured edges and of the edges that read -1.
std::pair<uint64_t, uint64_t> row_masks(std::span<const SyndromeValue> row) {
    uint64_t measured = 0;
    uint64_t negative = 0;
    for (size_t d = 0; d < row.size(); ++d) {
        if (row[d] != kAbsent) {
            measured |= uint64_t{1} << d;
            if (row[d] == kMinus) {
                negative |= uint64_t{1} << d;
            }
        }
    }
    return {measured, negative};
}

}  // namespace

double ClassWeight::value() const {
    return is_zero ? 0.0 : std::exp(log);
}

LikelihoodTransfer::LikelihoodTransfer(int length, double p) : length_(length), flip_(p / 2) {
    check_probability(p);
    if (length < 1) {
        throw std::invalid_argument("chain needs at least one site");
    }
    if (length > max_length()) {
        throw CapacityError(
            "likelihood transfer holds 2^L weights; L = " + std::to_string(length) + " exceeds the limit of " +
            std::to_string(max_length()));
    }
    weights_.assign(size_t{1} << length, 0.0);
    weights_[0] = 1.0;
}

void LikelihoodTransfer::step(std::span<const SyndromeValue> row, std::vector<double> &weights, double &log_scale) const {
    if (static_cast<int>(row.size()) != length_ - 1) {
        throw std::invalid_argument("syndrome row has the wrong number of edges");
    }
    const size_t n = weights.size();
    const double stay = 1.0 - flip_;
    const double move = flip_;
    if (move > 0.0) {
        for (size_t half = 1; half < n; half <<= 1) {
            for (size_t base = 0; base < n; base += 2 * half) {
                double *lo = weights.data() + base;
                double *hi = lo + half;
                for (size_t j = 0; j < half; ++j) {
                    double a = lo[j];
                    double b = hi[j];
                    lo[j] = stay * a + move * b;
                    hi[j] = move * a + stay * b;
                }
            }
        }
    }
    auto [measured, negative] = row_masks(row);
    double peak = 0.0;
    for (size_t x = 0; x < n; ++x) {
        uint64_t walls = (x ^ (x >> 1)) & measured;
        if (walls != negative) {
            weights[x] = 0.0;
        } else {
            peak = std::max(peak, weights[x]);
        }
    }
    if (peak > 0.0) {
        double inv = 1.0 / peak;
        for (double &w : weights) {
            w *= inv;
        }
        log_scale += std::log(peak);
    }
}

void LikelihoodTransfer::apply_row(std::span<const SyndromeValue> row) {
    step(row, weights_, log_scale_);
}

ClassPair LikelihoodTransfer::close(std::span<const SyndromeValue> full_row) const {
    auto [cand, comp] = candidate_strings(full_row);
    std::vector<double> weights = weights_;
    double log_scale = log_scale_;
    step(full_row, weights, log_scale);
    return {weight_from(weights[cand.to_mask()], log_scale), weight_from(weights[comp.to_mask()], log_scale)};
}

ClassPair class_log_probabilities(const SyndromeRecord &record, double p) {
    LikelihoodTransfer transfer(record.length(), p);
    for (int r = 0; r + 1 < record.steps(); ++r) {
        transfer.apply_row(record.row(r));
    }
    return transfer.close(record.final_row());
}

ClassWeight class_log_probability(const SyndromeRecord &record, const BitConfig &c, double p) {
    if (c.size() != record.length() || !consistent_with(c, record.final_row())) {
        throw std::invalid_argument("class representative does not match the final syndromes");
    }
    ClassPair both = class_log_probabilities(record, p);
    auto [cand, comp] = candidate_strings(record.final_row());
    return c == cand ? both.candidate : both.complement;
}

ClassWeight brute_force_class_probability(const SyndromeRecord &record, const BitConfig &c, double p) {
    check_probability(p);
    const int length = record.length();
    const int steps = record.steps();
    const int cells = length * steps;
    if (cells > 20) {
        throw CapacityError("brute-force enumeration limited to L*T <= 20");
    }
    if (c.size() != length || !consistent_with(c, record.final_row())) {
        throw std::invalid_argument("class representative does not match the final syndromes");
    }
    std::vector<std::pair<uint64_t, uint64_t>> masks;
    for (int r = 0; r < steps; ++r) {
        masks.push_back(row_masks(record.row(r)));
    }
    const uint64_t target = c.to_mask();
    const uint64_t site_mask = (uint64_t{1} << length) - 1;
    const double r_flip = p / 2;
    double total = 0.0;
    for (uint64_t grid = 0; grid < (uint64_t{1} << cells); ++grid) {
        uint64_t config = 0;
        bool ok = true;
        for (int r = 0; r < steps && ok; ++r) {
            config ^= (grid >> (r * length)) & site_mask;
            uint64_t walls = (config ^ (config >> 1)) & masks[r].first;
            ok = walls == masks[r].second;
        }
        if (!ok || config != target) {
            continue;
        }
        int k = std::popcount(grid);
        total += std::pow(r_flip, k) * std::pow(1.0 - r_flip, cells - k);
    }
    return weight_from(total, 0.0);
}

bool weights_tie(const ClassWeight &a, const ClassWeight &b) {
    if (a.is_zero || b.is_zero) {
        return a.is_zero == b.is_zero;
    }
    return std::abs(a.log - b.log) <= 1e-12;
}

BitConfig choose_class(const ClassPair &weights, std::span<const SyndromeValue> final_row, RngStream &rng) {
    auto [cand, comp] = candidate_strings(final_row);
    if (weights_tie(weights.candidate, weights.complement)) {
        return rng.coin() ? comp : cand;
    }
    bool cand_wins = weights.complement.is_zero || (!weights.candidate.is_zero && weights.candidate.log > weights.complement.log);
    return cand_wins ? cand : comp;
}

BitConfig decode_mld(const SyndromeRecord &record, double p, RngStream &rng) {
    return choose_class(class_log_probabilities(record, p), record.final_row(), rng);
}

}  // namespace ptim
