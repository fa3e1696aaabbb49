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

#include "dqpt/qcore/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "dqpt/qcore/error.hpp"

namespace dqpt::qcore {

int qubits_for_dim(std::size_t dim) noexcept {
    for (int n = 0; n <= kMaxQubits; ++n) {
        if (dim_of(n) == dim) {
            return n;
        }
    }
    return -1;
}

std::string basis_label(std::size_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> bit_of(q, n_qubits)) & 1U) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// StateVector
// ---------------------------------------------------------------------------

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
    const int n = qubits_for_dim(static_cast<std::size_t>(amps_.size()));
    if (n < 1) {
        throw InvalidState("state vector length must be 2^n with 1 <= n <= 8, got " +
                           std::to_string(amps_.size()));
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > 1e-10) {
        throw InvalidState("state vector is not normalized (|psi|^2 = " +
                           std::to_string(amps_.squaredNorm()) + ")");
    }
    n_qubits_ = n;
}

StateVector::StateVector(CVector amplitudes, int n_qubits, Unchecked)
    : amps_(std::move(amplitudes)), n_qubits_(n_qubits) {}

StateVector unchecked_state(CVector amplitudes, int n_qubits) {
    return StateVector(std::move(amplitudes), n_qubits, StateVector::Unchecked{});
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidState("unsupported qubit count " + std::to_string(n_qubits));
    }
    if (index >= dim_of(n_qubits)) {
        throw InvalidState("basis index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v), n_qubits, Unchecked{});
}

StateVector StateVector::from_label(std::string_view bits) {
    const int n = static_cast<int>(bits.size());
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidState("basis label must contain only 0/1: " + std::string(bits));
        }
        index = (index << 1U) | static_cast<std::size_t>(c == '1');
    }
    return basis(n, index);
}

StateVector StateVector::normalized(CVector amplitudes) {
    const double nrm = amplitudes.norm();
    if (nrm == 0.0 || !std::isfinite(nrm)) {
        throw InvalidState("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= nrm;
    return StateVector(std::move(amplitudes));
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw DimensionMismatch("inner product of states with different dimensions");
    }
    return amps_.dot(other.amps_); // conjugates *this
}

// ---------------------------------------------------------------------------
// DensityMatrix
// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(CMatrix entries) : rho_(std::move(entries)) {
    if (rho_.rows() != rho_.cols()) {
        throw InvalidState("density matrix must be square");
    }
    const int n = qubits_for_dim(static_cast<std::size_t>(rho_.rows()));
    if (n < 1) {
        throw InvalidState("density matrix dimension must be 2^n with 1 <= n <= 8");
    }
    n_qubits_ = n;
    const DensityReport r = report();
    if (!r.valid()) {
        throw InvalidState("not a density matrix: hermiticity error " +
                           std::to_string(r.hermiticity_error) + ", trace error " +
                           std::to_string(r.trace_error) + ", min eigenvalue " +
                           std::to_string(r.min_eigenvalue));
    }
}

DensityMatrix::DensityMatrix(CMatrix entries, int n_qubits, Unchecked)
    : rho_(std::move(entries)), n_qubits_(n_qubits) {}

DensityMatrix unchecked_density(CMatrix entries, int n_qubits) {
    return DensityMatrix(std::move(entries), n_qubits, DensityMatrix::Unchecked{});
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.n_qubits(),
                         Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidState("unsupported qubit count " + std::to_string(n_qubits));
    }
    const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
    return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d), n_qubits,
                         Unchecked{});
}

DensityMatrix DensityMatrix::basis(int n_qubits, std::size_t index) {
    return from_pure(StateVector::basis(n_qubits, index));
}

DensityReport DensityMatrix::report() const {
    DensityReport r;
    r.hermiticity_error = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    r.trace_error = std::abs(rho_.trace() - Complex{1.0, 0.0});
    const CMatrix herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    return r;
}

} // namespace dqpt::qcore
