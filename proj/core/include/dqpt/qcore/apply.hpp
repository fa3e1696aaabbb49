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

#include <span>

#include "dqpt/qcore/channel.hpp"
#include "dqpt/qcore/gate.hpp"
#include "dqpt/qcore/state.hpp"

namespace dqpt::qcore {

/// U acting on `targets` of a pure state. Targets are listed in the order of
/// the gate's tensor factors (for CNOT: control, target).
[[nodiscard]] StateVector apply_gate(const StateVector &state, const Gate &gate,
                                     std::span<const int> targets);
/// rho -> U rho U^dagger on `targets`.
[[nodiscard]] DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate,
                                       std::span<const int> targets);

/// rho -> sum_k K rho K^dagger with every K embedded on `targets`.
/// Throws InvalidChannel if the channel is not trace preserving.
[[nodiscard]] DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch,
                                          std::span<const int> targets);

/// Validates a target list against a register size and operator arity.
void check_targets(std::span<const int> targets, int n_qubits, int arity);

namespace kernel {

/// In-place left multiplication of every column of `m` by the 2^k x 2^k
/// operator `op` embedded on `targets`. `m` has 2^n rows.
void apply_left(CMatrix &m, const CMatrix &op, std::span<const int> targets, int n_qubits);
/// In-place pure-state version of apply_left.
void apply_left(CVector &v, const CMatrix &op, std::span<const int> targets, int n_qubits);
/// m -> op m op^dagger on `targets`.
void conjugate(CMatrix &m, const CMatrix &op, std::span<const int> targets, int n_qubits);

} // namespace kernel

} // namespace dqpt::qcore
