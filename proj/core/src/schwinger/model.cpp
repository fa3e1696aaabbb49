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

#include "dqpt/schwinger/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/pauli.hpp"

namespace dqpt::schwinger {

void ModelParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw InvalidParams("mass must be positive and finite, got " + std::to_string(m));
    }
    if (!(J >= 0.0) || !std::isfinite(J)) {
        throw InvalidParams("coupling J must be non-negative and finite, got " +
                            std::to_string(J));
    }
    if (n_sites != 2) {
        throw InvalidParams("only N = 2 matter sites are supported");
    }
    if (gauge_n != 2) {
        throw InvalidParams("only the Z_2 gauge group is supported");
    }
    if (quench_sign != 1 && quench_sign != -1) {
        throw InvalidParams("quench_sign must be +1 or -1");
    }
}

double ModelParams::gap_energy() const noexcept { return std::hypot(m, J); }

std::size_t encoding(PhysState s) noexcept {
    switch (s) {
    case PhysState::VacMinus:
        return 0b1011;
    case PhysState::VacPlus:
        return 0b0010;
    case PhysState::MesonL:
        return 0b0101;
    case PhysState::MesonR:
        return 0b1100;
    }
    return 0;
}

std::string_view name(PhysState s) noexcept {
    switch (s) {
    case PhysState::VacMinus:
        return "vac-";
    case PhysState::VacPlus:
        return "vac+";
    case PhysState::MesonL:
        return "meson_L";
    case PhysState::MesonR:
        return "meson_R";
    }
    return "?";
}

int link_field_sign(int bit) noexcept { return bit == 0 ? +1 : -1; }

qcore::StateVector embed(const Eigen::Vector4cd &amplitudes) {
    CVector v = CVector::Zero(16);
    for (std::size_t i = 0; i < kPhysStates.size(); ++i) {
        v(static_cast<Eigen::Index>(encoding(kPhysStates[i]))) =
            amplitudes(static_cast<Eigen::Index>(i));
    }
    return qcore::StateVector(std::move(v));
}

qcore::StateVector embed(const Vector4 &amplitudes) {
    return embed(Eigen::Vector4cd(amplitudes.cast<Complex>()));
}

Matrix4 build_physical_hamiltonian(const ModelParams &p) {
    p.validate();
    const double ms = p.signed_mass();
    const double h = p.J / 2.0;
    Matrix4 H;
    // clang-format off
    H << -ms, 0.0,   h,   h,
         0.0, -ms,   h,   h,
           h,   h,  ms, 0.0,
           h,   h, 0.0,  ms;
    // clang-format on
    return H;
}

CMatrix build_spin_hamiltonian(const ModelParams &p) {
    p.validate();
    using qcore::PauliString;
    const double ms = p.signed_mass();
    CMatrix H = (p.J / 4.0) * (PauliString::parse("XXXI").matrix() +
                               PauliString::parse("XYYI").matrix() +
                               PauliString::parse("IXXX").matrix() +
                               PauliString::parse("IYYX").matrix());
    H -= (ms / 2.0) * (PauliString::parse("IZII").matrix() - PauliString::parse("IIZI").matrix());
    return H;
}

namespace {

// Unit eigenvector of [[-ms, J], [J, ms]] for eigenvalue `lambda`, using the
// better-conditioned of the two row equations; first component >= 0.
Eigen::Vector2d even_sector_vector(double ms, double J, double lambda) {
    const Eigen::Vector2d from_row1(J, lambda + ms);
    const Eigen::Vector2d from_row2(lambda - ms, J);
    Eigen::Vector2d v = from_row1.norm() >= from_row2.norm() ? from_row1 : from_row2;
    v.normalize();
    if (v(0) < 0.0 || (v(0) == 0.0 && v(1) < 0.0)) {
        v = -v;
    }
    return v;
}

} // namespace

std::array<double, 4> Spectrum::eigenvalues() const {
    std::array<double, 4> ev = {e.energy, ebar.energy, g.energy, gbar.energy};
    std::sort(ev.begin(), ev.end());
    return ev;
}

Matrix4 Spectrum::eigenvector_matrix() const {
    Matrix4 U;
    U.col(0) = e.amplitudes;
    U.col(1) = ebar.amplitudes;
    U.col(2) = g.amplitudes;
    U.col(3) = gbar.amplitudes;
    return U;
}

Spectrum diagonalize(const ModelParams &p) {
    p.validate();
    const double ms = p.signed_mass();
    const double E = p.gap_energy();
    const double r = 1.0 / std::sqrt(2.0);

    Spectrum s;
    s.e = {"e", -ms, Vector4(-r, r, 0.0, 0.0), Parity::Odd};
    s.ebar = {"ebar", ms, Vector4(0.0, 0.0, r, -r), Parity::Odd};

    // The symmetric combinations (|vac-> + |vac+>)/sqrt2 and (|L> + |R>)/sqrt2
    // span the even sector, where H = [[-ms, J], [J, ms]].
    const Eigen::Vector2d vg = even_sector_vector(ms, p.J, -E);
    const Eigen::Vector2d vgb = even_sector_vector(ms, p.J, E);
    s.a_g = vg(0) * r;
    s.b_g = vg(1) * r;
    s.a_gbar = vgb(0) * r;
    s.b_gbar = vgb(1) * r;
    s.g = {"g", -E, Vector4(s.a_g, s.a_g, s.b_g, s.b_g), Parity::Even};
    s.gbar = {"gbar", E, Vector4(s.a_gbar, s.a_gbar, s.b_gbar, s.b_gbar), Parity::Even};
    return s;
}

QuenchBlocks quenched_block_hamiltonian(const ModelParams &p) {
    p.validate();
    const double m = p.m;
    const double J = p.J;
    const double E = p.gap_energy();
    QuenchBlocks b;
    b.odd << m, 0.0, 0.0, -m;
    b.even << -(J * J - m * m) / E, 2.0 * J * m / E, 2.0 * J * m / E, (J * J - m * m) / E;
    return b;
}

Matrix4 quenched_in_eigenbasis(const ModelParams &p) {
    const Matrix4 U = diagonalize(p.pre_quench()).eigenvector_matrix();
    const Matrix4 Hq = build_physical_hamiltonian(p.quenched());
    return U.transpose() * Hq * U;
}

GaussResult gauss_check(std::size_t basis_index, int gauge_n) {
    if (gauge_n != 2) {
        throw InvalidParams("Gauss law check implemented for Z_2 links only");
    }
    if (basis_index >= 16) {
        throw InvalidParams("basis index must address 4 qubits");
    }
    auto bit = [&](int q) { return static_cast<int>((basis_index >> bit_of(q, 4)) & 1U); };
    // sqrt(n/2pi) * E_link = f / 2 with f = +-1 for n = 2.
    const int f_left = link_field_sign(bit(0));  // E_{0,1}
    const int f_right = link_field_sign(bit(3)); // E_{1,2} = E_{-1,0}
    const int occ0 = bit(1);
    const int occ1 = bit(2);

    GaussResult r;
    // G_x = (E_{x,x+1} - E_{x-1,x}) - n_x - ((-1)^x - 1)/2
    r.raw[0] = (f_left - f_right) / 2 - occ0;
    r.raw[1] = (f_right - f_left) / 2 - occ1 + 1;
    for (std::size_t x = 0; x < 2; ++x) {
        r.residual[x] = ((r.raw[x] % gauge_n) + gauge_n) % gauge_n;
    }
    r.physical = r.residual[0] == 0 && r.residual[1] == 0;
    return r;
}

GaussResult gauss_check(std::string_view label, int gauge_n) {
    if (label.size() != 4) {
        throw InvalidParams("Gauss law check expects a 4-qubit label");
    }
    std::size_t index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw InvalidParams("basis label must contain only 0/1");
        }
        index = (index << 1U) | static_cast<std::size_t>(c == '1');
    }
    return gauss_check(index, gauge_n);
}

double physical_population(const qcore::StateVector &psi) {
    double total = 0.0;
    for (auto s : kPhysStates) {
        total += psi.probability(encoding(s));
    }
    return total;
}

double physical_population(const qcore::DensityMatrix &rho) {
    double total = 0.0;
    for (auto s : kPhysStates) {
        total += rho.population(encoding(s));
    }
    return total;
}

} // namespace dqpt::schwinger
