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

#include "ptim/metrics.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ptim/matching.h"
#include "ptim/min_flip.h"
#include "ptim/mld.h"
#include "ptim/mvd.h"
#include "ptim/parallel.h"
#include "ptim/stabilizer.h"

#ifndef PTIM_VERSION
#define PTIM_VERSION "unknown"
#endif

namespace ptim {

const char *version() {
    return PTIM_VERSION;
}

std::string_view decoder_name(Decoder decoder) {
    switch (decoder) {
        case Decoder::kFull:
            return "full";
        case Decoder::kMvd:
            return "mvd";
        case Decoder::kMwpm:
            return "mwpm";
        case Decoder::kMld:
            return "mld";
    }
    throw std::invalid_argument("unknown decoder");
}

Decoder parse_decoder(std::string_view name) {
    for (Decoder d : {Decoder::kFull, Decoder::kMvd, Decoder::kMwpm, Decoder::kMld}) {
        if (decoder_name(d) == name) {
            return d;
        }
    }
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "' (expected full, mvd, mwpm or mld)");
}

BitConfig run_decoder(Decoder decoder, const SyndromeRecord &record, double p, RngStream &coins) {
    switch (decoder) {
        case Decoder::kMvd:
            return decode_mvd(record, coins);
        case Decoder::kMwpm:
            return decode_mwpm(record);
        case Decoder::kMld:
            return decode_mld(record, p, coins);
        case Decoder::kFull:
            break;
    }
    throw std::invalid_argument("the full-knowledge decoder needs the trajectory, not just the record");
}

double decode_value(Decoder decoder, const Params &params, const SampledInstance &instance, uint64_t index) {
    if (decoder == Decoder::kFull) {
        return cluster_survives(instance.errors, instance.pattern) ? 1.0 : 0.5;
    }
    RngStream coins(params.seed, index, StreamTag::kDecoderCoins);
    return evaluate_fbi(instance.trajectory, run_decoder(decoder, instance.trajectory.syndromes, params.p, coins));
}

namespace {

void check_mld_capacity(Decoder decoder, const Params &params) {
    if (decoder == Decoder::kMld && params.length > LikelihoodTransfer::max_length()) {
        throw CapacityError("maximum-likelihood decoding is limited to L <= " +
                            std::to_string(LikelihoodTransfer::max_length()));
    }
}

}  // namespace

std::vector<Estimate> estimate_pd_common(std::span<const Decoder> decoders, const Params &params, size_t n,
                                         int workers) {
    params.validate();
    if (n < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    if (decoders.empty()) {
        return {};
    }
    for (Decoder d : decoders) {
        check_mld_capacity(d, params);
    }
    std::vector<std::vector<double>> values(decoders.size(), std::vector<double>(n));
    parallel_for(n, workers, [&](size_t i) {
        SampledInstance instance = sample_instance(params, i);
        for (size_t k = 0; k < decoders.size(); ++k) {
            values[k][i] = decode_value(decoders[k], params, instance, i);
        }
    });
    std::vector<Estimate> out;
    for (const auto &v : values) {
        out.push_back(estimate_from(v));
    }
    return out;
}

Estimate estimate_pd(Decoder decoder, const Params &params, size_t n, int workers) {
    Decoder one[] = {decoder};
    return estimate_pd_common(one, params, n, workers)[0];
}

CrossCheck crosscheck_pd(Decoder decoder, const Params &params, size_t n, int workers) {
    params.validate();
    if (n < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    check_mld_capacity(decoder, params);
    Params classical_params = params;
    classical_params.seed =
        RngStream::derive_seed(params.seed, 0, static_cast<uint64_t>(StreamTag::kClassicalCheck));
    std::vector<double> quantum(n);
    std::vector<double> classical(n);
    parallel_for(n, workers, [&](size_t i) {
        SampledInstance instance = sample_instance(params, i);
        RngStream outcomes(params.seed, i, StreamTag::kQuantumOutcomes);
        QuantumRunResult run = run_quantum(instance.errors, instance.pattern, outcomes);
        if (decoder == Decoder::kFull) {
            quantum[i] = run.survived ? 1.0 : 0.5;
        } else {
            RngStream coins(params.seed, i, StreamTag::kDecoderCoins);
            quantum[i] = evaluate_fqm(run, run_decoder(decoder, run.syndromes, params.p, coins));
        }
        classical[i] = decode_value(decoder, classical_params, sample_instance(classical_params, i), i);
    });
    CrossCheck out;
    out.quantum = estimate_from(quantum);
    out.classical = estimate_from(classical);
    out.combined_std_error = std::hypot(out.quantum.std_error, out.classical.std_error);
    double gap = std::abs(out.quantum.mean - out.classical.mean);
    if (out.combined_std_error > 0.0) {
        out.deviation = gap / out.combined_std_error;
        out.pass = out.deviation <= 4.0;
    } else {
        out.pass = gap == 0.0;
    }
    return out;
}

namespace {

// Draws an open-ended trajectory one step at a time.
class StepSampler {
   public:
    StepSampler(const Params &params, uint64_t index)
        : p_(params.p),
          measured_(1.0 - params.q),
          rng_(params.seed, index, StreamTag::kTrajectory),
          config_(params.length),
          errors_(static_cast<size_t>(params.length)),
          row_(static_cast<size_t>(params.length - 1)) {
    }

    // Advances by one step; afterwards config(), errors(), row() and full_row() describe it.
    void advance() {
        const int length = config_.size();
        for (int i = 0; i < length; ++i) {
            errors_[i] = rng_.bernoulli(p_) ? 1 : 0;
        }
        for (int i = 0; i < length; ++i) {
            if (errors_[i] && rng_.coin()) {
                config_.flip(i);
            }
        }
        full_row_ = syndrome_of_config(config_);
        for (size_t d = 0; d < row_.size(); ++d) {
            row_[d] = rng_.bernoulli(measured_) ? full_row_[d] : kAbsent;
        }
    }

    const BitConfig &config() const {
        return config_;
    }
    const std::vector<uint8_t> &errors() const {
        return errors_;
    }
    std::span<const SyndromeValue> row() const {
        return row_;
    }
    std::span<const SyndromeValue> full_row() const {
        return full_row_;
    }

   private:
    double p_;
    double measured_;
    RngStream rng_;
    BitConfig config_;
    std::vector<uint8_t> errors_;
    std::vector<SyndromeValue> row_;
    std::vector<SyndromeValue> full_row_;
};

// Tracks which sites of the newest time slice belong to the cluster grown from
// the initial row. Only the newest slice is stored; its labels identify
// clusters through the whole history.
class ClusterFront {
   public:
    explicit ClusterFront(int length) : label_(static_cast<size_t>(length), 0), rooted_(1, 1) {
    }

    // Whether the initial cluster reaches the next slice if that slice is
    // fully bonded, given its error row.
    bool reaches_next(const std::vector<uint8_t> &errors) const {
        for (size_t i = 0; i < label_.size(); ++i) {
            if (!errors[i] && rooted_[label_[i]]) {
                return true;
            }
        }
        return false;
    }

    void advance(const std::vector<uint8_t> &errors, std::span<const SyndromeValue> row) {
        const int length = static_cast<int>(label_.size());
        const int old_labels = static_cast<int>(rooted_.size());
        parent_.resize(static_cast<size_t>(old_labels + length));
        std::iota(parent_.begin(), parent_.end(), 0);
        node_.resize(label_.size());
        for (int i = 0; i < length; ++i) {
            node_[i] = errors[i] ? old_labels + i : label_[i];
        }
        for (int d = 0; d + 1 < length; ++d) {
            if (row[d] != kAbsent) {
                int a = find(node_[d]);
                int b = find(node_[d + 1]);
                if (a != b) {
                    parent_[std::max(a, b)] = std::min(a, b);
                }
            }
        }
        std::vector<uint8_t> rooted_root(parent_.size(), 0);
        for (int l = 0; l < old_labels; ++l) {
            if (rooted_[l]) {
                rooted_root[find(l)] = 1;
            }
        }
        std::vector<int> relabel(parent_.size(), -1);
        std::vector<uint8_t> rooted;
        for (int i = 0; i < length; ++i) {
            int r = find(node_[i]);
            if (relabel[r] < 0) {
                relabel[r] = static_cast<int>(rooted.size());
                rooted.push_back(rooted_root[r]);
            }
            label_[i] = relabel[r];
        }
        rooted_ = std::move(rooted);
    }

   private:
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    std::vector<int> label_;
    std::vector<uint8_t> rooted_;
    std::vector<int> parent_;
    std::vector<int> node_;
};

// Rows seen so far, kept for decoding a cut from scratch.
class RowLog {
   public:
    explicit RowLog(int length) : length_(length) {
    }

    void push(std::span<const SyndromeValue> row) {
        values_.insert(values_.end(), row.begin(), row.end());
        ++rows_;
    }

    // Record of the stored rows followed by `full_row`.
    SyndromeRecord closed_with(std::span<const SyndromeValue> full_row) const {
        SyndromePattern pattern(rows_ + 1, length_);
        std::vector<SyndromeValue> results(values_);
        for (int r = 0; r < rows_; ++r) {
            for (int d = 0; d + 1 < length_; ++d) {
                if (values_[static_cast<size_t>(r) * (length_ - 1) + d] != kAbsent) {
                    pattern.set(r, d, true);
                }
            }
        }
        results.insert(results.end(), full_row.begin(), full_row.end());
        return SyndromeRecord(std::move(pattern), std::move(results));
    }

   private:
    int length_;
    int rows_ = 0;
    std::vector<SyndromeValue> values_;
};

}  // namespace

std::optional<int> first_failure(Decoder decoder, const Params &params, uint64_t index, int t_max) {
    params.validate();
    if (t_max < 1) {
        throw std::invalid_argument("t_max must be positive");
    }
    const int length = params.length;
    StepSampler sampler(params, index);
    const RngStream fresh_coins(params.seed, index, StreamTag::kDecoderCoins);

    ClusterFront front(length);
    MajorityVoter voter(length);
    RngStream voter_coins = fresh_coins;
    std::unique_ptr<MinFlipTransfer> engine;
    std::unique_ptr<RowLog> log;
    std::unique_ptr<LikelihoodTransfer> likelihood;
    switch (decoder) {
        case Decoder::kMwpm:
            engine = std::make_unique<MinFlipTransfer>(length);
            log = std::make_unique<RowLog>(length);
            break;
        case Decoder::kMld:
            likelihood = std::make_unique<LikelihoodTransfer>(length, params.p);
            break;
        default:
            break;
    }

    for (int t = 1; t <= t_max; ++t) {
        sampler.advance();
        const BitConfig &m = sampler.config();
        bool correct = true;
        switch (decoder) {
            case Decoder::kFull:
                correct = front.reaches_next(sampler.errors());
                front.advance(sampler.errors(), sampler.row());
                break;
            case Decoder::kMvd: {
                MajorityVoter cut = voter;
                RngStream cut_coins = voter_coins;
                cut.apply_row(sampler.full_row(), cut_coins);
                correct = cut.current() == m;
                voter.apply_row(sampler.row(), voter_coins);
                break;
            }
            case Decoder::kMwpm: {
                std::optional<ClassMinimum> best;
                if (engine) {
                    best = engine->close(sampler.full_row());
                }
                if (best && best->candidate != best->complement) {
                    bool m_is_candidate = !m[0];
                    correct = m_is_candidate == (best->candidate < best->complement);
                } else {
                    correct = decode_mwpm(log->closed_with(sampler.full_row())) == m;
                }
                log->push(sampler.row());
                if (engine) {
                    try {
                        engine->apply_row(sampler.row());
                    } catch (const CapacityError &) {
                        engine.reset();
                    }
                }
                break;
            }
            case Decoder::kMld: {
                RngStream cut_coins = fresh_coins;
                correct = choose_class(likelihood->close(sampler.full_row()), sampler.full_row(), cut_coins) == m;
                likelihood->apply_row(sampler.row());
                break;
            }
        }
        if (!correct) {
            return t;
        }
    }
    return std::nullopt;
}

MtffResult mtff(Decoder decoder, const Params &params, size_t n, int t_max, int workers) {
    params.validate();
    if (n < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    if (t_max < 1) {
        throw std::invalid_argument("t_max must be positive");
    }
    std::vector<double> values(n);
    std::vector<uint8_t> censored(n, 0);
    parallel_for(n, workers, [&](size_t i) {
        std::optional<int> t = first_failure(decoder, params, i, t_max);
        values[i] = t ? *t : t_max;
        censored[i] = t ? 0 : 1;
    });
    Estimate e = estimate_from(values);
    MtffResult out;
    out.mean = e.mean;
    out.std_error = e.std_error;
    out.count = e.count;
    out.censored = static_cast<size_t>(std::count(censored.begin(), censored.end(), 1));
    out.t_max = t_max;
    return out;
}

double analytic_pd_mwpm_q0(double p, int length, int steps) {
    if (length < 1 || length % 2 == 0) {
        throw std::invalid_argument("closed form needs an odd L >= 1");
    }
    if (steps < 1) {
        throw std::invalid_argument("closed form needs T >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    const double r = p / 2;
    double majority = 0.0;
    for (int b = (length + 1) / 2; b <= length; ++b) {
        if (length <= 60) {
            double choose = 1.0;
            for (int k = 1; k <= b; ++k) {
                choose = choose * (length - b + k) / k;
            }
            majority += choose * std::pow(r, b) * std::pow(1.0 - r, length - b);
        } else if (r > 0.0) {
            double log_term = std::lgamma(length + 1.0) - std::lgamma(b + 1.0) - std::lgamma(length - b + 1.0) +
                              b * std::log(r) + (length - b) * std::log1p(-r);
            majority += std::exp(log_term);
        }
    }
    // Sum over even failure counts of the binomial distribution.
    return 0.5 * (1.0 + std::pow(1.0 - 2.0 * majority, steps));
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<std::pair<double, double>> sorted_points(const PdCurve &curve) {
    if (curve.p.size() != curve.pd.size()) {
        throw std::invalid_argument("curve for L = " + std::to_string(curve.length) +
                                    " has different numbers of p and P_D values");
    }
    std::vector<std::pair<double, double>> out;
    for (size_t k = 0; k < curve.p.size(); ++k) {
        out.emplace_back(curve.p[k], curve.pd[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> pair_crossings(const PdCurve &a, const PdCurve &b) {
    auto pa = sorted_points(a);
    auto pb = sorted_points(b);
    std::vector<double> p;
    std::vector<double> diff;
    size_t j = 0;
    for (const auto &[x, ya] : pa) {
        while (j < pb.size() && pb[j].first < x - 1e-12) {
            ++j;
        }
        if (j < pb.size() && std::abs(pb[j].first - x) <= 1e-12) {
            p.push_back(x);
            diff.push_back(pb[j].second - ya);
        }
    }
    std::vector<double> out;
    int last = -1;  // previous point with a nonzero difference
    for (int k = 0; k < static_cast<int>(diff.size()); ++k) {
        if (diff[k] == 0.0) {
            continue;
        }
        if (last >= 0 && (diff[last] > 0) != (diff[k] > 0)) {
            if (k == last + 1) {
                out.push_back(p[last] + (p[k] - p[last]) * diff[last] / (diff[last] - diff[k]));
            } else {
                out.push_back(0.5 * (p[last + 1] + p[k - 1]));
            }
        }
        last = k;
    }
    return out;
}

}  // namespace

Crossing threshold_crossing(std::span<const PdCurve> curves) {
    if (curves.size() < 2) {
        throw std::invalid_argument("locating a crossing needs at least two system sizes");
    }
    Crossing out;
    for (size_t a = 0; a < curves.size(); ++a) {
        for (size_t b = a + 1; b < curves.size(); ++b) {
            std::vector<double> xs = pair_crossings(curves[a], curves[b]);
            if (!xs.empty()) {
                out.pair_values.push_back(median(xs));
            }
        }
    }
    if (out.pair_values.empty()) {
        return out;
    }
    out.found = true;
    out.value = median(out.pair_values);
    auto [lo, hi] = std::minmax_element(out.pair_values.begin(), out.pair_values.end());
    out.spread = 0.5 * (*hi - *lo);
    return out;
}

}  // namespace ptim
