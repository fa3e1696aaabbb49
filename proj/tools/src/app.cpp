// Copyright 2026 The dqpt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqpt/cli/app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dqpt/cli/commands.hpp"
#include "dqpt/qcore/error.hpp"

namespace dqpt::cli {

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> mode;
    std::optional<int> steps;
    std::optional<double> dt;
    std::optional<std::int64_t> shots;
    std::optional<std::string> target;
    std::optional<std::string> preset;
    std::optional<unsigned> workers;
    bool moments = false;
};

RunConfig resolve(const Overrides &o) {
    RunConfig c;
    if (!o.config.empty()) {
        std::string text;
        try {
            text = read_file(o.config);
        } catch (const DataError &e) {
            throw UsageError(e.what());
        }
        c = RunConfig::from_toml(text);
    }
    if (o.seed) {
        c.seed = *o.seed;
    }
    if (o.out) {
        c.out = *o.out;
    }
    if (o.mode) {
        c.mode = evolve_mode_from_string(*o.mode);
    }
    if (o.steps) {
        c.steps = *o.steps;
    }
    if (o.dt) {
        c.dt = *o.dt;
    }
    if (o.shots) {
        c.shots = *o.shots;
    }
    if (o.target) {
        c.target = *o.target;
    }
    if (o.preset) {
        try {
            c.preset = noise::preset_from_string(*o.preset);
        } catch (const InvalidParams &e) {
            throw UsageError(e.what());
        }
    }
    if (o.workers) {
        c.workers = *o.workers;
    }
    if (o.moments) {
        c.moments = true;
    }
    c.validate();
    return c;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noisy circuit simulation of quenched two-site Z2 lattice gauge dynamics",
                 "dqptsim"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, "Flat TOML run configuration");
    app.add_option("--seed", o.seed, "Base random seed");
    app.add_option("--out", o.out, "Output directory");
    app.add_option("--mode", o.mode,
                   "analytic, trotter-noiseless, trotter-noisy or trotter-sampled");
    app.add_option("--steps", o.steps, "Number of Trotter steps");
    app.add_option("--dt", o.dt, "Trotter step size");
    app.add_option("--shots", o.shots, "Shots per tomography setting");
    app.add_option("--target", o.target, "Target trajectory JSON (fit)");
    app.add_option("--preset", o.preset, "abc_shared, split_xyz or split_xz");
    app.add_option("--workers", o.workers, "Worker threads (0 = all cores)");
    app.add_flag("--moments", o.moments, "Report circuit depth (export)");

    using Command = CommandOutput (*)(const RunConfig &);
    const std::vector<std::tuple<std::string, std::string, Command>> commands = {
        {"spectrum", "Eigenvalues and eigenstates of the two-site Hamiltonian", &cmd_spectrum},
        {"evolve", "Loschmidt echo and eigenstate overlaps after the mass quench", &cmd_evolve},
        {"fit", "Grid fit of noise probabilities to a target trajectory", &cmd_fit},
        {"winding", "Winding numbers of the Loschmidt phase over a (J, t) window", &cmd_winding},
        {"export", "OpenQASM 2.0 export of the preparation and Trotter circuits", &cmd_export},
        {"tomo", "Pauli tomography of the simulated trajectory", &cmd_tomo},
    };
    for (const auto &[name, help, fn] : commands) {
        app.add_subcommand(name, help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    Command fn = nullptr;
    for (const auto &[name, help, f] : commands) {
        if (app.got_subcommand(name)) {
            fn = f;
        }
    }

    try {
        const RunConfig config = resolve(o);
        CommandOutput result = fn(config);
        result.files.emplace_back("run.toml", config.to_toml());
        write_files(config.out, result.files);
        out << result.message;
        return kExitOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParams &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidProbability &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    }
}

} // namespace dqpt::cli
