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

#include "cli_commands.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ptim/errors.h"

namespace ptim::cli {

using nlohmann::ordered_json;

std::vector<double> linear_grid(double start, double stop, int count) {
    if (count < 1) {
        throw std::invalid_argument("grid needs at least one point");
    }
    std::vector<double> out;
    for (int k = 0; k < count; ++k) {
        double x = count == 1 ? start : start + (stop - start) * k / (count - 1);
        out.push_back(std::round(x * 1e12) / 1e12);
    }
    return out;
}

namespace {

void check_probabilities(const std::vector<double> &grid, const char *name) {
    for (double x : grid) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw std::invalid_argument(std::string(name) + " values must lie in [0, 1]");
        }
    }
}

}  // namespace

void SweepSpec::validate() const {
    if (p_grid.empty()) {
        throw std::invalid_argument("no p values; pass --p or --p-grid");
    }
    check_probabilities(p_grid, "p");
    check_probabilities(q_grid, "q");
    if (lengths.empty()) {
        throw std::invalid_argument("no chain lengths; pass --L");
    }
    for (int length : lengths) {
        if (length < 1 || length % 2 == 0) {
            throw std::invalid_argument("L must be a positive odd integer, got " + std::to_string(length));
        }
    }
    if (steps && *steps < 1) {
        throw std::invalid_argument("T must be positive");
    }
    if (samples < 1) {
        throw std::invalid_argument("samples must be positive");
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be positive");
    }
    if (t_max < 1) {
        throw std::invalid_argument("t-max must be positive");
    }
}

std::vector<std::pair<double, double>> SweepSpec::points() const {
    if (!diagonal && q_grid.empty()) {
        throw std::invalid_argument("no q values; pass --q, --q-grid or --diagonal");
    }
    std::vector<std::pair<double, double>> out;
    for (double p : p_grid) {
        if (diagonal) {
            out.emplace_back(p, p);
        } else {
            for (double q : q_grid) {
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

int SweepSpec::steps_for(int length) const {
    return steps ? *steps : length;
}

Format parse_format(const std::string &name) {
    if (name == "csv") {
        return Format::kCsv;
    }
    if (name == "jsonl") {
        return Format::kJsonl;
    }
    throw std::invalid_argument("unknown format '" + name + "' (expected csv or jsonl)");
}

void Table::add(const ordered_json &row) {
    for (const auto &c : columns_) {
        if (!row.contains(c)) {
            throw std::logic_error("row is missing column " + c);
        }
    }
    rows_.push_back(row);
}

void Table::write(std::ostream &out, Format format) const {
    if (format == Format::kJsonl) {
        for (const auto &row : rows_) {
            out << row.dump() << '\n';
        }
        return;
    }
    for (size_t k = 0; k < columns_.size(); ++k) {
        out << (k ? "," : "") << columns_[k];
    }
    out << '\n';
    for (const auto &row : rows_) {
        for (size_t k = 0; k < columns_.size(); ++k) {
            const ordered_json &v = row[columns_[k]];
            out << (k ? "," : "");
            if (v.is_string()) {
                out << v.get<std::string>();
            } else if (!v.is_null()) {
                out << v.dump();
            }
        }
        out << '\n';
    }
}

namespace {

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void progress(const SweepSpec &spec, std::ostream &log, const std::string &line, const Stopwatch &watch) {
    if (!spec.quiet) {
        log << line << " (" << std::fixed;
        log.precision(2);
        log << watch.seconds() << " s)" << std::endl;
        log.unsetf(std::ios::floatfield);
    }
}

std::string point_label(const char *command, int length, int steps, double p, double q) {
    std::ostringstream s;
    s << command << " L=" << length << " T=" << steps << " p=" << p << " q=" << q;
    return s.str();
}

}  // namespace

Table cmd_sweep(const SweepSpec &spec, std::ostream &log) {
    spec.validate();
    Table table({"decoder", "L", "T", "p", "q", "samples", "seed", "mean", "std_error", "status", "version"});
    for (int length : spec.lengths) {
        const int steps = spec.steps_for(length);
        for (auto [p, q] : spec.points()) {
            Stopwatch watch;
            ordered_json row;
            row["decoder"] = decoder_name(spec.decoder);
            row["L"] = length;
            row["T"] = steps;
            row["p"] = p;
            row["q"] = q;
            row["samples"] = spec.samples;
            row["seed"] = spec.seed;
            std::string label = point_label("sweep", length, steps, p, q);
            try {
                Estimate e = estimate_pd(spec.decoder, Params{p, q, length, steps, spec.seed}, spec.samples,
                                         spec.workers);
                row["mean"] = e.mean;
                row["std_error"] = e.std_error;
                row["status"] = "ok";
                label += " mean=" + ordered_json(e.mean).dump();
            } catch (const CapacityError &ex) {
                row["mean"] = nullptr;
                row["std_error"] = nullptr;
                row["status"] = "capacity_exceeded";
                label += std::string(" skipped: ") + ex.what();
            }
            row["version"] = version();
            table.add(row);
            progress(spec, log, label, watch);
        }
    }
    return table;
}

Table cmd_mtff(const SweepSpec &spec, std::ostream &log) {
    spec.validate();
    Table table({"decoder", "L", "p", "q", "samples", "seed", "t_max", "mtff", "std_error", "censored", "status",
                 "version"});
    for (int length : spec.lengths) {
        for (auto [p, q] : spec.points()) {
            Stopwatch watch;
            ordered_json row;
            row["decoder"] = decoder_name(spec.decoder);
            row["L"] = length;
            row["p"] = p;
            row["q"] = q;
            row["samples"] = spec.samples;
            row["seed"] = spec.seed;
            row["t_max"] = spec.t_max;
            std::string label = point_label("mtff", length, spec.t_max, p, q);
            try {
                MtffResult r = mtff(spec.decoder, Params{p, q, length, 1, spec.seed}, spec.samples, spec.t_max,
                                    spec.workers);
                row["mtff"] = r.mean;
                row["std_error"] = r.std_error;
                row["censored"] = r.censored;
                row["status"] = "ok";
                label += " mtff=" + ordered_json(r.mean).dump();
            } catch (const CapacityError &ex) {
                row["mtff"] = nullptr;
                row["std_error"] = nullptr;
                row["censored"] = nullptr;
                row["status"] = "capacity_exceeded";
                label += std::string(" skipped: ") + ex.what();
            }
            row["version"] = version();
            table.add(row);
            progress(spec, log, label, watch);
        }
    }
    return table;
}

Table cmd_crosscheck(const SweepSpec &spec, std::ostream &log) {
    spec.validate();
    for (int length : spec.lengths) {
        if (length > 9 || spec.steps_for(length) > 9) {
            throw std::invalid_argument("crosscheck is limited to L, T <= 9");
        }
    }
    Table table({"decoder", "L", "T", "p", "q", "samples", "seed", "quantum_mean", "quantum_std_error",
                 "classical_mean", "classical_std_error", "combined_std_error", "deviation", "pass", "status",
                 "version"});
    for (int length : spec.lengths) {
        const int steps = spec.steps_for(length);
        for (auto [p, q] : spec.points()) {
            Stopwatch watch;
            CrossCheck c = crosscheck_pd(spec.decoder, Params{p, q, length, steps, spec.seed}, spec.samples,
                                         spec.workers);
            ordered_json row;
            row["decoder"] = decoder_name(spec.decoder);
            row["L"] = length;
            row["T"] = steps;
            row["p"] = p;
            row["q"] = q;
            row["samples"] = spec.samples;
            row["seed"] = spec.seed;
            row["quantum_mean"] = c.quantum.mean;
            row["quantum_std_error"] = c.quantum.std_error;
            row["classical_mean"] = c.classical.mean;
            row["classical_std_error"] = c.classical.std_error;
            row["combined_std_error"] = c.combined_std_error;
            row["deviation"] = c.deviation;
            row["pass"] = c.pass;
            row["status"] = "ok";
            row["version"] = version();
            table.add(row);
            progress(spec, log,
                     point_label("crosscheck", length, steps, p, q) + (c.pass ? " pass" : " FAIL") +
                         " deviation=" + ordered_json(c.deviation).dump(),
                     watch);
        }
    }
    return table;
}

Table cmd_analytic(const SweepSpec &spec, std::ostream &log) {
    spec.validate();
    Table table({"L", "T", "p", "analytic", "mc_mean", "mc_std_error", "samples", "seed", "status", "version"});
    for (int length : spec.lengths) {
        const int steps = spec.steps_for(length);
        for (double p : spec.p_grid) {
            Stopwatch watch;
            ordered_json row;
            row["L"] = length;
            row["T"] = steps;
            row["p"] = p;
            row["analytic"] = analytic_pd_mwpm_q0(p, length, steps);
            if (spec.monte_carlo) {
                Estimate e = estimate_pd(Decoder::kMwpm, Params{p, 0.0, length, steps, spec.seed}, spec.samples,
                                         spec.workers);
                row["mc_mean"] = e.mean;
                row["mc_std_error"] = e.std_error;
                row["samples"] = spec.samples;
            } else {
                row["mc_mean"] = nullptr;
                row["mc_std_error"] = nullptr;
                row["samples"] = 0;
            }
            row["seed"] = spec.seed;
            row["status"] = "ok";
            row["version"] = version();
            table.add(row);
            progress(spec, log, point_label("analytic", length, steps, p, 0.0), watch);
        }
    }
    return table;
}

namespace {

struct Options {
    std::vector<double> p;
    std::vector<double> p_grid;
    std::vector<double> q;
    std::vector<double> q_grid;
    bool diagonal = false;
    std::vector<int> lengths;
    std::string steps = "L";
    size_t samples = 1000;
    uint64_t seed = 1;
    std::string decoder = "mwpm";
    int workers = 1;
    int t_max = 10000;
    std::string out;
    std::string format = "csv";
    bool monte_carlo = false;
    bool quiet = false;
};

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--p", o.p, "Error-measurement probability (repeatable)");
    cmd->add_option("--p-grid", o.p_grid, "p grid as START STOP COUNT")->expected(3);
    cmd->add_option("--q", o.q, "Probability that a stabilizer is skipped (repeatable)");
    cmd->add_option("--q-grid", o.q_grid, "q grid as START STOP COUNT")->expected(3);
    cmd->add_flag("--diagonal", o.diagonal, "Use q = p");
    cmd->add_option("--L", o.lengths, "Chain length, odd (repeatable)")->required();
    cmd->add_option("--T", o.steps, "Number of steps, or L for T = L")->capture_default_str();
    cmd->add_option("--samples", o.samples, "Trajectories per point")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    cmd->add_option("--decoder", o.decoder, "full, mvd, mwpm or mld")->capture_default_str();
    cmd->add_option("--workers", o.workers, "Worker threads")->capture_default_str();
    cmd->add_option("--out", o.out, "Output file (default: standard output)");
    cmd->add_option("--format", o.format, "csv or jsonl")->capture_default_str();
    cmd->add_flag("--quiet", o.quiet, "No progress lines");
}

std::vector<double> grid_from(const std::vector<double> &values, const std::vector<double> &grid, const char *name) {
    std::vector<double> out = values;
    if (!grid.empty()) {
        if (grid[2] < 1 || grid[2] != std::floor(grid[2])) {
            throw std::invalid_argument(std::string("--") + name + "-grid COUNT must be a positive integer");
        }
        std::vector<double> g = linear_grid(grid[0], grid[1], static_cast<int>(grid[2]));
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

SweepSpec spec_from(const Options &o) {
    SweepSpec spec;
    spec.p_grid = grid_from(o.p, o.p_grid, "p");
    spec.q_grid = grid_from(o.q, o.q_grid, "q");
    spec.diagonal = o.diagonal;
    spec.lengths = o.lengths;
    if (o.steps != "L") {
        size_t used = 0;
        int t = 0;
        try {
            t = std::stoi(o.steps, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != o.steps.size()) {
            throw std::invalid_argument("--T must be an integer or L, got '" + o.steps + "'");
        }
        spec.steps = t;
    }
    spec.samples = o.samples;
    spec.decoder = parse_decoder(o.decoder);
    spec.seed = o.seed;
    spec.workers = o.workers;
    spec.t_max = o.t_max;
    spec.monte_carlo = o.monte_carlo;
    spec.quiet = o.quiet;
    spec.validate();
    return spec;
}

void error_line(std::ostream &err, const std::string &command, const std::string &kind, const std::string &message) {
    ordered_json line;
    line["status"] = "error";
    line["command"] = command;
    line["kind"] = kind;
    line["message"] = message;
    err << line.dump() << std::endl;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Monte Carlo simulation and decoding of the projective transverse field Ising chain", "ptim"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);
    Options o;
    CLI::App *sweep = app.add_subcommand("sweep", "Decoding probability over a parameter grid");
    CLI::App *mtff_cmd = app.add_subcommand("mtff", "Mean time to first failure over a parameter grid");
    CLI::App *crosscheck = app.add_subcommand("crosscheck", "Quantum against classical decoding probability");
    CLI::App *analytic = app.add_subcommand("analytic", "Closed-form MWPM decoding probability at q = 0");
    for (CLI::App *cmd : {sweep, mtff_cmd, crosscheck, analytic}) {
        add_common(cmd, o);
    }
    mtff_cmd->add_option("--t-max", o.t_max, "Censoring time")->capture_default_str();
    analytic->add_flag("--mc", o.monte_carlo, "Add Monte Carlo columns (MWPM, q = 0)");

    std::string command = "ptim";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        error_line(err, command, "usage", e.what());
        return e.get_exit_code() ? e.get_exit_code() : 2;
    }

    try {
        CLI::App *chosen = app.get_subcommands().front();
        command = chosen->get_name();
        SweepSpec spec = spec_from(o);
        Format format = parse_format(o.format);
        Table table = chosen == sweep        ? cmd_sweep(spec, err)
                      : chosen == mtff_cmd   ? cmd_mtff(spec, err)
                      : chosen == crosscheck ? cmd_crosscheck(spec, err)
                                             : cmd_analytic(spec, err);
        if (o.out.empty()) {
            table.write(out, format);
            out.flush();
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) {
                throw std::runtime_error("cannot open output file " + o.out);
            }
            table.write(file, format);
            file.close();
            if (!file) {
                throw std::runtime_error("failed writing output file " + o.out);
            }
        }
    } catch (const std::invalid_argument &e) {
        error_line(err, command, "invalid_argument", e.what());
        return 2;
    } catch (const std::exception &e) {
        error_line(err, command, "runtime", e.what());
        return 1;
    }
    return 0;
}

}  // namespace ptim::cli
