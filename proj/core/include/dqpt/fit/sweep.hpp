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
#include <string>
#include <utility>
#include <vector>

#include "dqpt/noise/density_sim.hpp"
#include "dqpt/schwinger/model.hpp"

namespace dqpt::fit {

struct Axis {
    std::string name;
    double start = 0.0;
    double step = 1e-3;
    int count = 21;

    [[nodiscard]] double value(int i) const noexcept { return start + step * i; }
};

/// Two-axis probability grid for one noise preset. Axis 1 is px (abc_shared)
/// or p1 (split presets); axis 2 is pz or p2. `fixed` is py for abc_shared.
struct GridSpec {
    noise::NoisePreset preset = noise::NoisePreset::SplitXz;
    Axis axis1;
    Axis axis2;
    double fixed = 0.0;

    /// Grid with the preset's axis names.
    [[nodiscard]] static GridSpec make(noise::NoisePreset preset, double start1, double start2,
                                       double step, int count, double fixed = 0.0);
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(axis1.count) * static_cast<std::size_t>(axis2.count);
    }
    [[nodiscard]] noise::NoiseModelSpec model_at(int i, int j) const;
    /// Throws InvalidParams for empty axes or non-positive steps and
    /// InvalidProbability if any grid point is not a valid model.
    void validate() const;
};

enum class SweepMethod { Exact, Sampled };
enum class ObjectiveKind { SingleState, TimeAveraged };

/// The circuit program simulated at every grid point: ground preparation
/// followed by k - 1 Trotter steps from |0...0>.
struct SweepProgram {
    schwinger::ModelParams params;
    double dt = 0.1;
    std::size_t k = 3;
    SweepMethod method = SweepMethod::Exact;
    int realizations = 20;
    /// Reused at every grid point (common random numbers).
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

struct Provenance {
    std::string target_id;
    noise::NoisePreset preset = noise::NoisePreset::SplitXz;
    SweepMethod method = SweepMethod::Exact;
    int realizations = 0;
    std::uint64_t seed = 0;
    std::size_t k = 0;
};

struct DistanceSurface {
    GridSpec grid;
    std::vector<double> values; // row-major, axis1 outer
    ObjectiveKind kind = ObjectiveKind::TimeAveraged;
    Provenance provenance;

    [[nodiscard]] double value(int i, int j) const {
        return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.axis2.count) +
                      static_cast<std::size_t>(j)];
    }
};

/// Simulates one grid point (exposed for synthetic targets).
[[nodiscard]] noise::Trajectory simulate_program(const SweepProgram &program,
                                                 const noise::NoiseModelSpec &nm);

/// Evaluates averaged_trace_distance(target, simulate(grid point), k) on
/// every point. Grid points run in parallel; the result does not depend on
/// the worker count.
[[nodiscard]] DistanceSurface grid_sweep(const GridSpec &grid, const noise::Trajectory &target,
                                         const SweepProgram &program,
                                         std::string target_id = "target");

struct FitResult {
    std::string axis1_name;
    std::string axis2_name;
    double p1 = 0.0;
    double p2 = 0.0;
    int i = 0;
    int j = 0;
    double min = 0.0;
    double cell1 = 0.0;
    double cell2 = 0.0;
    /// Another cell holds exactly the same minimum value.
    bool tie = false;
    /// All cells within kValleyTolerance of the minimum, row-major order.
    std::vector<std::pair<int, int>> valley;
};

inline constexpr double kValleyTolerance = 1e-3;

/// Global minimum; ties resolve to the smallest axis-1 then axis-2 value.
/// Throws InvalidParams for an empty surface.
[[nodiscard]] FitResult locate_minimum(const DistanceSurface &s);

/// Bilinear interpolation inside the grid. Throws InvalidParams outside it.
[[nodiscard]] double interpolate(const DistanceSurface &s, double x1, double x2);

} // namespace dqpt::fit
