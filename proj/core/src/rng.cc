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

#include "ptim/rng.h"

namespace ptim {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t RngStream::derive_seed(uint64_t master_seed, uint64_t index, uint64_t tag) {
    return splitmix64(splitmix64(splitmix64(master_seed) ^ index) ^ tag);
}

RngStream::RngStream(uint64_t master_seed, uint64_t index, StreamTag tag)
    : engine_(derive_seed(master_seed, index, static_cast<uint64_t>(tag))) {
}

}  // namespace ptim
