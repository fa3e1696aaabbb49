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

#include "dqpt/qcore/state.hpp"

namespace dqpt::qcore {

/// Half the trace norm of a - b, from the eigenvalues of the Hermitian
/// difference. Throws DimensionMismatch on size mismatch.
[[nodiscard]] double trace_distance(const DensityMatrix &a, const DensityMatrix &b);
[[nodiscard]] double trace_distance(const CMatrix &a, const CMatrix &b);

/// <psi|rho|psi>, clamped into [0, 1].
[[nodiscard]] double fidelity(const StateVector &psi, const DensityMatrix &rho);

/// |<a|b>|^2
[[nodiscard]] double overlap_probability(const StateVector &a, const StateVector &b);

/// Eigenvalues of a Hermitian matrix in ascending order.
[[nodiscard]] RVector hermitian_eigenvalues(const CMatrix &m);

/// Nearest unit-trace PSD matrix in the eigenvalue-clipping sense: negative
/// eigenvalues set to zero, the remainder renormalized to trace one.
[[nodiscard]] CMatrix project_to_density(const CMatrix &m);

} // namespace dqpt::qcore
