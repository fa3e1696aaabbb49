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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dqpt/schwinger/loschmidt.hpp"

namespace dqpt::schwinger {

/// Phase (and echo) of the Loschmidt amplitude sampled on a rectangular
/// (J, t) grid at fixed mass. Sample (i, j) sits at (J_values[i], t_values[j]).
struct PhaseField {
    double m = 1.0;
    std::vector<double> J_values;
    std::vector<double> t_values;
    std::vector<double> phase; // row-major over (i, j)
    std::vector<double> echo;

    [[nodiscard]] std::size_t nJ() const noexcept { return J_values.size(); }
    [[nodiscard]] std::size_t nt() const noexcept { return t_values.size(); }
    [[nodiscard]] double phase_at(std::size_t i, std::size_t j) const { return phase[i * nt() + j]; }
    [[nodiscard]] double echo_at(std::size_t i, std::size_t j) const { return echo[i * nt() + j]; }
};

/// Samples the analytic amplitude on the tensor grid J_values x t_values.
[[nodiscard]] PhaseField analytic_phase_field(double m, std::span<const double> J_values,
                                              std::span<const double> t_values);

/// Evenly spaced values lo..hi inclusive (count >= 2).
[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t count);

using GridPoint = std::pair<std::size_t, std::size_t>; // (J index, t index)

/// Closed lattice path in the (J, t) plane: first point equals last, every
/// step moves to a 4-neighbour.
class WindingLoop {
  public:
    /// Throws InvalidParams if the path is not closed or not nearest-neighbour.
    explicit WindingLoop(std::vector<GridPoint> points);

    /// Counterclockwise boundary of the rectangle [i0, i1] x [j0, j1] with J
    /// along the horizontal axis.
    [[nodiscard]] static WindingLoop rectangle(std::size_t i0, std::size_t j0, std::size_t i1,
                                               std::size_t j1);
    /// Counterclockwise boundary of the elementary cell with lower-left corner (i, j).
    [[nodiscard]] static WindingLoop plaquette(std::size_t i, std::size_t j) {
        return rectangle(i, j, i + 1, j + 1);
    }

    [[nodiscard]] const std::vector<GridPoint> &points() const noexcept { return points_; }

  private:
    std::vector<GridPoint> points_;
};

/// (1/2pi) times the sum of phase differences along the loop, each wrapped
/// into (-pi, pi]. Counterclockwise loops count positive. Throws
/// UndefinedPhase if the loop visits a sample with echo < kPhaseEpsilon and
/// InvalidParams if the loop leaves the grid.
[[nodiscard]] int winding_number(const PhaseField &field, const WindingLoop &loop);

struct PlaquetteWinding {
    std::size_t i = 0;
    std::size_t j = 0;
    std::optional<int> nu; // empty when the phase is undefined on a corner
};

/// Winding of every elementary cell, row-major over (i, j).
[[nodiscard]] std::vector<PlaquetteWinding> plaquette_windings(const PhaseField &field);

} // namespace dqpt::schwinger
