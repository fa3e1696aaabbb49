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

#include <string>
#include <string_view>

#include "dqpt/qcore/types.hpp"

namespace dqpt::qcore {

/// Dense pure state of an n-qubit register.
class StateVector {
  public:
    /// Validates length 2^n and unit norm (within 1e-10).
    explicit StateVector(CVector amplitudes);

    /// Computational basis state |index>.
    [[nodiscard]] static StateVector basis(int n_qubits, std::size_t index);
    /// Basis state from a ket label such as "1011" (q0 first).
    [[nodiscard]] static StateVector from_label(std::string_view bits);
    /// Normalizes `amplitudes` before construction.
    [[nodiscard]] static StateVector normalized(CVector amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amps_.size());
    }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

    [[nodiscard]] double norm() const { return amps_.norm(); }
    [[nodiscard]] Complex inner(const StateVector &other) const;
    [[nodiscard]] double probability(std::size_t index) const {
        return std::norm((*this)[index]);
    }

  private:
    struct Unchecked {};
    StateVector(CVector amplitudes, int n_qubits, Unchecked);

    CVector amps_;
    int n_qubits_ = 0;

    friend StateVector unchecked_state(CVector amplitudes, int n_qubits);
};

/// Builds a state without re-validating the norm. Used by kernels that are
/// norm-preserving by construction.
[[nodiscard]] StateVector unchecked_state(CVector amplitudes, int n_qubits);

struct DensityReport {
    double hermiticity_error = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    [[nodiscard]] bool valid(double tol = 1e-10, double psd_slack = 1e-9) const {
        return hermiticity_error <= tol && trace_error <= tol &&
               min_eigenvalue >= -psd_slack;
    }
};

/// Dense mixed state. Construction from an arbitrary matrix validates
/// Hermiticity, unit trace and positivity (eigenvalues >= -1e-9).
class DensityMatrix {
  public:
    explicit DensityMatrix(CMatrix entries);

    [[nodiscard]] static DensityMatrix from_pure(const StateVector &psi);
    [[nodiscard]] static DensityMatrix maximally_mixed(int n_qubits);
    [[nodiscard]] static DensityMatrix basis(int n_qubits, std::size_t index);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(rho_.rows());
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return rho_; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return rho_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    [[nodiscard]] Complex trace() const { return rho_.trace(); }
    [[nodiscard]] double population(std::size_t index) const {
        return (*this)(index, index).real();
    }
    [[nodiscard]] DensityReport report() const;

  private:
    struct Unchecked {};
    DensityMatrix(CMatrix entries, int n_qubits, Unchecked);

    CMatrix rho_;
    int n_qubits_ = 0;

    friend DensityMatrix unchecked_density(CMatrix entries, int n_qubits);
};

[[nodiscard]] DensityMatrix unchecked_density(CMatrix entries, int n_qubits);

/// Number of qubits for a dimension, or -1 if `dim` is not a power of two
/// within the supported range.
[[nodiscard]] int qubits_for_dim(std::size_t dim) noexcept;

/// Ket label of `index` on `n_qubits` qubits, q0 leftmost.
[[nodiscard]] std::string basis_label(std::size_t index, int n_qubits);

} // namespace dqpt::qcore
