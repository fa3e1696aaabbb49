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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dqpt/fit/sweep.hpp"
#include "dqpt/noise/noise_model.hpp"
#include "dqpt/schwinger/model.hpp"

namespace dqpt::cli {

/// Bad flags, unknown keys or out-of-range settings. Maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class EvolveMode { Analytic, TrotterNoiseless, TrotterNoisy, TrotterSampled };

[[nodiscard]] std::string_view to_string(EvolveMode m) noexcept;
/// Throws UsageError for an unknown mode.
[[nodiscard]] EvolveMode evolve_mode_from_string(std::string_view s);

struct RunConfig {
    double m = 1.0;
    double J = 1.0;
    double dt = 0.1;
    int steps = 40;
    EvolveMode mode = EvolveMode::Analytic;

    noise::NoisePreset preset = noise::NoisePreset::SplitXz;
    double p1 = 0.01;
    double p2 = 0.016;
    double py = 0.0;
    /// Empty means "single-qubit p_x of the active preset".
    std::optional<double> readout_flip;
    bool reset_flips = true;
    double noise_scale = 1.0;
    int realizations = 20;

    std::int64_t shots = 8192;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::string out = "out";
    bool plots = true;

    std::string target;
    fit::SweepMethod fit_method = fit::SweepMethod::Exact;
    int k = 3;
    double grid_start1 = 0.0;
    double grid_start2 = 0.0;
    double grid_step = 1e-3;
    int grid_count = 21;

    double J_min = 0.9;
    double J_max = 1.1;
    int J_count = 21;
    double t_min = 1.0;
    double t_max = 1.25;
    double t_step = 0.01;

    bool moments = false;

    [[nodiscard]] schwinger::ModelParams params() const;
    /// The configured preset at (p1, p2), with readout flip, reset flips and
    /// noise_scale applied.
    [[nodiscard]] noise::NoiseModelSpec noise_model() const;
    /// Throws UsageError describing the first invalid field.
    void validate() const;

    /// Flat TOML with every key in a fixed order.
    [[nodiscard]] std::string to_toml() const;
    /// Starts from `base` and overrides every key present in `text`.
    /// Throws UsageError on syntax errors, unknown keys and type mismatches.
    [[nodiscard]] static RunConfig from_toml(std::string_view text, const RunConfig &base);
    [[nodiscard]] static RunConfig from_toml(std::string_view text);

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

} // namespace dqpt::cli
