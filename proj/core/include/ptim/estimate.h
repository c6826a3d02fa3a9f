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

#ifndef PTIM_ESTIMATE_H
#define PTIM_ESTIMATE_H

#include <cstddef>
#include <span>

namespace ptim {

/// Sample mean with its standard error (sample standard deviation / sqrt(count)).
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    size_t count = 0;
};

/// Two-pass mean and standard error, summed in index order so the result is
/// bitwise reproducible. A single value has zero standard error. Throws
/// std::invalid_argument on an empty input.
Estimate estimate_from(std::span<const double> values);

}  // namespace ptim

#endif  // PTIM_ESTIMATE_H
