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

#ifndef PTIM_ERRORS_H
#define PTIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace ptim {

/// A problem is too large for an exact backend with exponential cost.
class CapacityError : public std::length_error {
   public:
    explicit CapacityError(const std::string &what) : std::length_error(what) {
    }
};

}  // namespace ptim

#endif  // PTIM_ERRORS_H
