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

#include <vector>

#include "dqpt/circuits/circuit.hpp"
#include "dqpt/noise/noise_model.hpp"
#include "dqpt/qcore/state.hpp"

namespace dqpt::noise {

/// Density matrices recorded at circuit boundaries. Entry i sits at
/// t = boundary_index * dt.
struct Trajectory {
    std::vector<double> times;
    std::vector<qcore::DensityMatrix> states;
    double dt = 0.0;
    double m = 0.0;
    double J = 0.0;

    [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
    /// Throws InvalidState if times are not strictly increasing or sizes differ.
    void validate() const;
};

/// Exact channel evolution: after every gate the matching flip channel acts
/// on the gate's qubits (two-qubit gates get the 16-operator product
/// channel). State is recorded at every `record_every`-th boundary of the
/// circuit; a circuit without boundaries records its final state at t = 0.
/// Throws InvalidProbability for an invalid noise model and DimensionMismatch for a
/// register mismatch.
[[nodiscard]] Trajectory run_density_matrix(const circuits::Circuit &c, const NoiseModelSpec &nm,
                                            const qcore::DensityMatrix &input,
                                            int record_every = 1);

namespace detail {

/// Indices into the boundary list that are recorded, and the matching times.
struct RecordPlan {
    std::vector<std::size_t> op_positions;
    std::vector<double> times;
};
[[nodiscard]] RecordPlan record_plan(const circuits::Circuit &c, int record_every);

} // namespace detail

} // namespace dqpt::noise
