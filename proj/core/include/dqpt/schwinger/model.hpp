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

#include <array>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "dqpt/qcore/state.hpp"

namespace dqpt::schwinger {

using Matrix2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

/// Parameters of the two-site Z2 lattice model. Energies are in units of the
/// mass when `m = 1`. The electric-field energy is constant for Z2 links and
/// enters as the additive constant `electric_offset` (0 throughout).
struct ModelParams {
    double m = 1.0;
    double J = 1.0;
    int n_sites = 2;
    int gauge_n = 2;
    /// +1 for H(m, J), -1 for the quenched H(-m, J).
    int quench_sign = +1;

    static constexpr double electric_offset = 0.0;

    /// Throws InvalidParams. J = 0 (no hopping) is accepted.
    void validate() const;
    [[nodiscard]] double signed_mass() const noexcept { return quench_sign * m; }
    [[nodiscard]] double gap_energy() const noexcept;
    [[nodiscard]] ModelParams quenched() const noexcept {
        ModelParams q = *this;
        q.quench_sign = -1;
        return q;
    }
    [[nodiscard]] ModelParams pre_quench() const noexcept {
        ModelParams q = *this;
        q.quench_sign = +1;
        return q;
    }
};

/// The four gauge-invariant basis states of the two-site lattice, in the
/// order used by every 4x4 matrix in this module.
enum class PhysState : std::uint8_t { VacMinus = 0, VacPlus = 1, MesonL = 2, MesonR = 3 };

inline constexpr std::array<PhysState, 4> kPhysStates = {
    PhysState::VacMinus, PhysState::VacPlus, PhysState::MesonL, PhysState::MesonR};

/// Qubit layout: q0 and q3 are the Z2 links, q1 and q2 the matter sites.
[[nodiscard]] std::size_t encoding(PhysState s) noexcept;
[[nodiscard]] std::string_view name(PhysState s) noexcept;
/// Link electric field in units of sqrt(pi)/2: +1 for |0>, -1 for |1>.
[[nodiscard]] int link_field_sign(int bit) noexcept;

/// Embeds 4 amplitudes over the physical basis into the 16-dim register.
[[nodiscard]] qcore::StateVector embed(const Vector4 &amplitudes);
[[nodiscard]] qcore::StateVector embed(const Eigen::Vector4cd &amplitudes);

enum class Parity : std::uint8_t { Even, Odd };

struct EigenState {
    std::string_view label;
    double energy = 0.0;
    Vector4 amplitudes;
    Parity parity = Parity::Even;
};

/// Closed-form diagonalization in the parity sectors. Even states are
/// a (|vac+> + |vac->) + b (|L> + |R>).
struct Spectrum {
    EigenState e;    // odd, (|vac+> - |vac->)/sqrt2, energy -m
    EigenState ebar; // odd, (|L> - |R>)/sqrt2, energy +m
    EigenState g;    // even ground, energy -sqrt(m^2+J^2)
    EigenState gbar; // even, energy +sqrt(m^2+J^2)

    double a_g = 0.0;
    double b_g = 0.0;
    double a_gbar = 0.0;
    double b_gbar = 0.0;

    /// b_g / a_g; equals (m - sqrt(m^2+J^2))/J for J > 0.
    [[nodiscard]] double p_g() const { return b_g / a_g; }
    /// Ascending eigenvalues.
    [[nodiscard]] std::array<double, 4> eigenvalues() const;
    /// Columns (e, ebar, g, gbar) over the physical basis.
    [[nodiscard]] Matrix4 eigenvector_matrix() const;
    [[nodiscard]] std::array<const EigenState *, 4> states() const { return {&e, &ebar, &g, &gbar}; }
};

/// Physical-subspace Hamiltonian over (vac-, vac+, L, R), mass sign applied.
[[nodiscard]] Matrix4 build_physical_hamiltonian(const ModelParams &p);

/// Full 16x16 spin Hamiltonian of the qubit register:
/// J/4 (X_0 + X_3)(X_1 X_2 + Y_1 Y_2) - (s m / 2)(Z_1 - Z_2).
[[nodiscard]] CMatrix build_spin_hamiltonian(const ModelParams &p);

[[nodiscard]] Spectrum diagonalize(const ModelParams &p);

struct QuenchBlocks {
    Matrix2 odd;  // basis (psi_e, psi_ebar)
    Matrix2 even; // basis (psi_g, psi_gbar)
};

/// H(-m, J) expressed in the eigenbasis of H(m, J), closed form.
[[nodiscard]] QuenchBlocks quenched_block_hamiltonian(const ModelParams &p);

/// U^T H(-m, J) U with U the eigenvector matrix of H(m, J), computed
/// numerically. Block diagonal in (e, ebar | g, gbar).
[[nodiscard]] Matrix4 quenched_in_eigenbasis(const ModelParams &p);

struct GaussResult {
    bool physical = false;
    /// Z_n charge residual per site, reduced into [0, gauge_n).
    std::array<int, 2> residual{};
    /// Integer residual before reduction.
    std::array<int, 2> raw{};
};

/// Gauss-law check for a 4-qubit computational basis label (index 0..15).
[[nodiscard]] GaussResult gauss_check(std::size_t basis_index, int gauge_n = 2);
[[nodiscard]] GaussResult gauss_check(std::string_view label, int gauge_n = 2);

/// Total population of the four physical basis states.
[[nodiscard]] double physical_population(const qcore::StateVector &psi);
[[nodiscard]] double physical_population(const qcore::DensityMatrix &rho);

} // namespace dqpt::schwinger
