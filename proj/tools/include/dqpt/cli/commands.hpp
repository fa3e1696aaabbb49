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

#pragma once

#include <string>
#include <vector>

#include "dqpt/cli/config.hpp"
#include "dqpt/cli/output.hpp"

namespace dqpt::cli {

/// Files to write into the output directory plus a report for stdout.
/// Commands never touch the file system for output themselves.
struct CommandOutput {
    std::vector<OutputFile> files;
    std::string message;
};

/// spectrum.json: eigenvalues, eigenstates with parity, a_g, b_g, p_g.
[[nodiscard]] CommandOutput cmd_spectrum(const RunConfig &c);
/// series.csv (+ series.svg); noisy modes also write trajectory.json in the
/// target format.
[[nodiscard]] CommandOutput cmd_evolve(const RunConfig &c);
/// surface.csv, fit.json, fit_report.json (+ surface.svg) from the target
/// file named in the config.
[[nodiscard]] CommandOutput cmd_fit(const RunConfig &c);
/// winding.json (+ phase.svg) over the (J, t) window.
[[nodiscard]] CommandOutput cmd_winding(const RunConfig &c);
/// ground_prep.qasm, trotter_step.qasm, evolution.qasm; each is re-imported
/// and compared against the built circuit.
[[nodiscard]] CommandOutput cmd_export(const RunConfig &c);
/// counts.json for the last recorded state, target.json with the tomography
/// reconstruction of every recorded state and tomo.json with their errors.
[[nodiscard]] CommandOutput cmd_tomo(const RunConfig &c);

} // namespace dqpt::cli
