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

#include "oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ptim::oracle {

namespace {

// Syndrome check of a configuration (as a site bitmask) against one row.
bool row_matches(uint64_t config, int length, std::span<const SyndromeValue> row) {
    for (int d = 0; d + 1 < length; ++d) {
        if (row[d] == kAbsent) {
            continue;
        }
        bool differ = ((config >> d) & 1) != ((config >> (d + 1)) & 1);
        if (differ != (row[d] == kMinus)) {
            return false;
        }
    }
    return true;
}

bool is_candidate_class(uint64_t config) {
    return (config & 1) == 0;
}

}  // namespace

SyndromeRecord random_record(int length, int steps, double p, double q, RngStream &rng) {
    SyndromePattern pattern(steps, length);
    std::vector<SyndromeValue> results(static_cast<size_t>(steps) * (length - 1), kAbsent);
    std::vector<int> config(static_cast<size_t>(length), 0);
    for (int r = 0; r < steps; ++r) {
        for (int i = 0; i < length; ++i) {
            if (rng.bernoulli(p / 2)) {
                config[i] ^= 1;
            }
        }
        for (int d = 0; d + 1 < length; ++d) {
            bool measured = r + 1 == steps || rng.bernoulli(1 - q);
            if (measured) {
                if (r + 1 < steps) {
                    pattern.set(r, d, true);
                }
                results[static_cast<size_t>(r) * (length - 1) + d] = config[d] == config[d + 1] ? kPlus : kMinus;
            }
        }
    }
    return SyndromeRecord(pattern, results);
}

int ClassFlips::best() const {
    if (candidate < 0) {
        return complement;
    }
    if (complement < 0) {
        return candidate;
    }
    return std::min(candidate, complement);
}

ClassFlips min_flips_enumerated(const SyndromeRecord &record) {
    const int length = record.length();
    const int steps = record.steps();
    const int cells = length * steps;
    if (cells > 22) {
        throw std::invalid_argument("enumeration oracle limited to L*T <= 22");
    }
    const uint64_t site_mask = (uint64_t{1} << length) - 1;
    ClassFlips out;
    for (uint64_t grid = 0; grid < (uint64_t{1} << cells); ++grid) {
        uint64_t config = 0;
        bool ok = true;
        for (int r = 0; r < steps && ok; ++r) {
            config ^= (grid >> (r * length)) & site_mask;
            ok = row_matches(config, length, record.row(r));
        }
        if (!ok) {
            continue;
        }
        int flips = std::popcount(grid);
        int &slot = is_candidate_class(config) ? out.candidate : out.complement;
        if (slot < 0 || flips < slot) {
            slot = flips;
        }
    }
    return out;
}

ClassFlips min_flips_config_dp(const SyndromeRecord &record) {
    const int length = record.length();
    if (length > 9) {
        throw std::invalid_argument("configuration oracle limited to L <= 9");
    }
    const uint64_t states = uint64_t{1} << length;
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> cost(states, kInf);
    cost[0] = 0;
    for (int r = 0; r < record.steps(); ++r) {
        std::vector<int> next(states, kInf);
        for (uint64_t to = 0; to < states; ++to) {
            if (!row_matches(to, length, record.row(r))) {
                continue;
            }
            for (uint64_t from = 0; from < states; ++from) {
                if (cost[from] < kInf) {
                    next[to] = std::min(next[to], cost[from] + std::popcount(from ^ to));
                }
            }
        }
        cost = std::move(next);
    }
    ClassFlips out;
    for (uint64_t m = 0; m < states; ++m) {
        if (cost[m] >= kInf) {
            continue;
        }
        int &slot = is_candidate_class(m) ? out.candidate : out.complement;
        if (slot < 0 || cost[m] < slot) {
            slot = cost[m];
        }
    }
    return out;
}

ClassSums class_sums_enumerated(const SyndromeRecord &record, double p) {
    const int length = record.length();
    const int steps = record.steps();
    const int cells = length * steps;
    if (cells > 20) {
        throw std::invalid_argument("enumeration oracle limited to L*T <= 20");
    }
    const uint64_t site_mask = (uint64_t{1} << length) - 1;
    const double r_flip = p / 2;
    ClassSums out;
    for (uint64_t grid = 0; grid < (uint64_t{1} << cells); ++grid) {
        uint64_t config = 0;
        bool ok = true;
        for (int r = 0; r < steps && ok; ++r) {
            config ^= (grid >> (r * length)) & site_mask;
            ok = row_matches(config, length, record.row(r));
        }
        if (!ok) {
            continue;
        }
        double w = 1.0;
        for (int k = 0; k < cells; ++k) {
            w *= ((grid >> k) & 1) ? r_flip : 1.0 - r_flip;
        }
        (is_candidate_class(config) ? out.candidate : out.complement) += w;
    }
    return out;
}

namespace {

int64_t best_pairing(const std::vector<std::vector<int64_t>> &weight, uint32_t unmatched) {
    if (unmatched == 0) {
        return 0;
    }
    int u = std::countr_zero(unmatched);
    uint32_t rest = unmatched & ~(uint32_t{1} << u);
    int64_t best = -1;
    for (uint32_t others = rest; others; others &= others - 1) {
        int v = std::countr_zero(others);
        if (weight[u][v] < 0) {
            continue;
        }
        int64_t sub = best_pairing(weight, rest & ~(uint32_t{1} << v));
        if (sub >= 0 && (best < 0 || weight[u][v] + sub < best)) {
            best = weight[u][v] + sub;
        }
    }
    return best;
}

}  // namespace

int64_t min_perfect_matching_brute_force(const std::vector<std::vector<int64_t>> &weight) {
    const int n = static_cast<int>(weight.size());
    if (n > 14) {
        throw std::invalid_argument("pairing oracle limited to 14 vertices");
    }
    if (n % 2) {
        return -1;
    }
    return best_pairing(weight, (uint32_t{1} << n) - 1);
}

BitConfig per_step_majority(const SyndromeRecord &record) {
    const int length = record.length();
    BitConfig current(length);
    for (int r = 0; r < record.steps(); ++r) {
        for (int d = 0; d + 1 < length; ++d) {
            if (!record.measured(r, d)) {
                throw std::invalid_argument("per-step majority needs complete rows");
            }
        }
        // Build the candidate with bit 0 equal to the current bit 0, then
        // compare it and its complement against the current configuration.
        BitConfig option(length);
        option.set(0, current[0]);
        for (int d = 0; d + 1 < length; ++d) {
            option.set(d + 1, record.result(r, d) == kMinus ? !option[d] : option[d]);
        }
        int flips = option.hamming_distance(current);
        current = 2 * flips < length ? option : option.complement();
    }
    return current;
}

}  // namespace ptim::oracle
