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

#include "dqpt/circuits/circuit.hpp"
#include "dqpt/schwinger/model.hpp"

namespace dqpt::circuits {

/// Y-rotation angle on q1 that prepares sqrt2 (a_g|0> + b_g|1>).
[[nodiscard]] double ground_prep_angle(const schwinger::ModelParams &p);

/// Ground state of H(m, J) from |0000>: H q0, Ry q1, X q2, then CNOTs
/// (0,2), (1,3), (0,3), (3,2). Uses the pre-quench sign of `p`.
[[nodiscard]] Circuit build_ground_prep(const schwinger::ModelParams &p);

/// exp(-i dt J/4 X_a (X_b X_c + Y_b Y_c)) as K^dagger A K. `a` is the link
/// qubit, (b, c) the matter pair.
[[nodiscard]] Circuit build_hopping_block(double J, double dt, int a, int b, int c,
                                          int n_qubits = 4);

/// One first-order step: hopping on (q0, q1, q2), hopping on (q1, q2, q3)
/// rooted at link q3, then the mass rotations on q1 and q2 for the signed
/// mass of `p`. Barriers separate the blocks for figure-faithful scheduling.
/// Throws InvalidParams if dt <= 0.
[[nodiscard]] Circuit build_trotter_step(const schwinger::ModelParams &p, double dt);

/// Ground-state preparation for `p` followed by `steps` Trotter steps of the
/// quenched Hamiltonian. Boundaries are recorded after the preparation and
/// after every step.
[[nodiscard]] Circuit build_evolution(const schwinger::ModelParams &p, double dt, int steps);

} // namespace dqpt::circuits
