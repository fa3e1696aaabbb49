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
#include <vector>

#include "dqpt/schwinger/model.hpp"

namespace dqpt::schwinger {

/// Echo values below this floor are reported as a clamped divergence.
inline constexpr double kEchoFloor = 1e-15;
/// Below this echo the phase of the amplitude is treated as undefined.
inline constexpr double kPhaseEpsilon = 1e-8;
/// Default number of degrees of freedom in the rate function (matter sites).
inline constexpr int kDefaultDof = 2;

struct RateResult {
    std::vector<double> rate;
    std::vector<bool> clamped;
};

/// lambda = -ln(L) / n_dof; echo values under kEchoFloor are replaced by the
/// floor and flagged.
[[nodiscard]] RateResult rate_function(std::span<const double> echo, int n_dof = kDefaultDof);

/// Survival amplitude, echo, phase and rate over a time grid.
struct LoschmidtSeries {
    std::vector<double> times;
    std::vector<Complex> amplitude;
    std::vector<double> echo;
    std::vector<double> phase;
    std::vector<double> rate;
    std::vector<bool> clamped;
    int n_dof = kDefaultDof;

    [[nodiscard]] std::size_t size() const noexcept { return times.size(); }

    /// Derives echo, phase (in (-pi, pi]) and rate from amplitudes.
    [[nodiscard]] static LoschmidtSeries from_amplitudes(std::vector<double> times,
                                                         std::vector<Complex> amplitude,
                                                         int n_dof = kDefaultDof);
    /// For mixed-state runs where only the echo is available; amplitude and
    /// phase are left NaN.
    [[nodiscard]] static LoschmidtSeries from_echo(std::vector<double> times,
                                                   std::vector<double> echo,
                                                   int n_dof = kDefaultDof);
};

/// Phase wrapped into (-pi, pi].
[[nodiscard]] double wrap_phase(double angle) noexcept;

/// Closed-form amplitude <psi_g| exp(-i H(-m,J) t) |psi_g> for the ground
/// state of H(m, J): (m/E)^2 e^{-iEt} + (J/E)^2 e^{+iEt}, E = sqrt(m^2+J^2).
[[nodiscard]] Complex analytic_amplitude(const ModelParams &p, double t);

/// Throws InvalidParams for negative times.
[[nodiscard]] LoschmidtSeries analytic_loschmidt(const ModelParams &p,
                                                 std::span<const double> times,
                                                 int n_dof = kDefaultDof);

/// Reference amplitude from the eigendecomposition of the 4x4 quenched
/// Hamiltonian, independent of the closed form.
[[nodiscard]] Complex exact_amplitude(const ModelParams &p, double t);

/// Times of the j-th echo zero, (2j+1) pi / (2 sqrt(m^2+J^2)). Only exact
/// when J = m; otherwise throws NoExactDqpt.
[[nodiscard]] double dqpt_time(const ModelParams &p, int j);

/// Evenly spaced grid t0, t0+dt, ..., inclusive of the last point <= t1.
[[nodiscard]] std::vector<double> time_grid(double t0, double t1, double dt);

} // namespace dqpt::schwinger
