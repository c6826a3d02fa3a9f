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

#ifndef PTIM_RNG_H
#define PTIM_RNG_H

#include <cstdint>
#include <random>

namespace ptim {

/// Purpose tags separate the independent streams that belong to one
/// trajectory index.
enum class StreamTag : uint64_t {
    kTrajectory = 1,       ///< error pattern, flips, syndrome pattern
    kDecoderCoins = 2,     ///< tie-breaking coins of randomized decoders
    kQuantumOutcomes = 3,  ///< outcome coins of indeterminate projective measurements
    kClassicalCheck = 4,   ///< classical side of the quantum/classical cross-check
};

/// Deterministic pseudo-random stream identified by (master seed, index, tag).
///
/// The engine seed is
///     splitmix64(splitmix64(splitmix64(master) ^ index) ^ tag)
/// and the engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Uniform doubles use the top 53 bits of each draw, so streams are
/// portable across standard libraries and independent of thread scheduling.
class RngStream {
   public:
    RngStream(uint64_t master_seed, uint64_t index, StreamTag tag = StreamTag::kTrajectory);

    static uint64_t derive_seed(uint64_t master_seed, uint64_t index, uint64_t tag);

    uint64_t next() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    /// True with probability p; p <= 0 never fires and p >= 1 always fires.
    bool bernoulli(double p) {
        return uniform() < p;
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);

}  // namespace ptim

#endif  // PTIM_RNG_H
