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

#include "dqpt/qcore/metrics.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "dqpt/qcore/error.hpp"

namespace dqpt::qcore {

RVector hermitian_eigenvalues(const CMatrix &m) {
    const CMatrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double trace_distance(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("trace distance between matrices of different size");
    }
    return 0.5 * hermitian_eigenvalues(a - b).cwiseAbs().sum();
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    return trace_distance(a.matrix(), b.matrix());
}

double fidelity(const StateVector &psi, const DensityMatrix &rho) {
    if (psi.dim() != rho.dim()) {
        throw DimensionMismatch("fidelity between state and density matrix of different size");
    }
    const Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
    return std::clamp(f.real(), 0.0, 1.0);
}

double overlap_probability(const StateVector &a, const StateVector &b) {
    return std::norm(a.inner(b));
}

CMatrix project_to_density(const CMatrix &m) {
    const CMatrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    RVector w = es.eigenvalues().cwiseMax(0.0);
    const double total = w.sum();
    if (total <= 0.0) {
        throw InvalidState("cannot project a matrix without positive spectrum");
    }
    w /= total;
    return es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace dqpt::qcore
