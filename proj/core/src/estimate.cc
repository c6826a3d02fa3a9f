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

#include "ptim/estimate.h"

#include <cmath>
#include <stdexcept>

namespace ptim {

Estimate estimate_from(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("an estimate needs at least one sample");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double n = static_cast<double>(values.size());
    Estimate out;
    out.count = values.size();
    out.mean = sum / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - out.mean) * (v - out.mean);
        }
        out.std_error = std::sqrt(ss / (n - 1)) / std::sqrt(n);
    }
    return out;
}

}  // namespace ptim
