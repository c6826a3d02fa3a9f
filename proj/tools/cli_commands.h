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

#ifndef PTIM_TOOLS_CLI_COMMANDS_H
#define PTIM_TOOLS_CLI_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ptim/metrics.h"

namespace ptim::cli {

/// Evenly spaced values from start to stop inclusive, rounded to 12 decimals.
std::vector<double> linear_grid(double start, double stop, int count);

struct SweepSpec {
    std::vector<double> p_grid;
    std::vector<double> q_grid;
    bool diagonal = false;           ///< q = p; q_grid is ignored
    std::vector<int> lengths;
    std::optional<int> steps;        ///< fixed T; nullopt means T = L
    size_t samples = 1000;
    Decoder decoder = Decoder::kMwpm;
    uint64_t seed = 1;
    int workers = 1;
    int t_max = 10000;
    bool monte_carlo = false;        ///< analytic: add Monte Carlo columns
    bool quiet = false;              ///< suppress progress lines

    /// Throws std::invalid_argument on empty grids, bad sizes or counts.
    void validate() const;

    /// (p, q) pairs in output order.
    std::vector<std::pair<double, double>> points() const;
    int steps_for(int length) const;
};

enum class Format { kCsv, kJsonl };

/// Parses "csv" or "jsonl".
Format parse_format(const std::string &name);

/// Rows with a fixed column order. CSV leaves null fields empty.
class Table {
   public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
    }

    /// Appends a row; every column must be present.
    void add(const nlohmann::ordered_json &row);

    /// Writes the whole table (CSV with a header row, or one JSON object per line).
    void write(std::ostream &out, Format format) const;

    const std::vector<nlohmann::ordered_json> &rows() const {
        return rows_;
    }

   private:
    std::vector<std::string> columns_;
    std::vector<nlohmann::ordered_json> rows_;
};

/// P_D for every (L, p, q). A point the decoder cannot handle (MLD beyond its
/// size limit) gets status "capacity_exceeded" and empty estimates.
Table cmd_sweep(const SweepSpec &spec, std::ostream &log);

/// Mean time to first failure for every (L, p, q).
Table cmd_mtff(const SweepSpec &spec, std::ostream &log);

/// Quantum against classical decoding probability for every (L, p, q).
/// Sizes are capped at L, T <= 9.
Table cmd_crosscheck(const SweepSpec &spec, std::ostream &log);

/// Closed-form q = 0 MWPM curve for every (L, p), with Monte Carlo columns
/// when spec.monte_carlo is set. Requires an explicit T or T = L.
Table cmd_analytic(const SweepSpec &spec, std::ostream &log);

/// Entry point shared by the executable and the tests. Writes data to `out`,
/// progress and error lines to `err`, and returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ptim::cli

#endif  // PTIM_TOOLS_CLI_COMMANDS_H
