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

#include "dqpt/qcore/gate.hpp"

#include <cmath>
#include <utility>

#include "dqpt/qcore/error.hpp"

namespace dqpt::qcore {

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Gate::Gate(GateKind kind, std::string name, CMatrix matrix, std::optional<double> angle)
    : kind_(kind), name_(std::move(name)), arity_(matrix.rows() == 4 ? 2 : 1),
      matrix_(std::move(matrix)), angle_(angle) {}

Gate Gate::identity() { return {GateKind::I, "id", CMatrix::Identity(2, 2), std::nullopt}; }
Gate Gate::x() { return {GateKind::X, "x", pauli_x(), std::nullopt}; }
Gate Gate::y() { return {GateKind::Y, "y", pauli_y(), std::nullopt}; }
Gate Gate::z() { return {GateKind::Z, "z", pauli_z(), std::nullopt}; }

Gate Gate::h() {
    CMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return {GateKind::H, "h", std::move(m), std::nullopt};
}

Gate Gate::ry(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    CMatrix m(2, 2);
    m << c, -s, s, c;
    return {GateKind::Ry, "ry", std::move(m), angle};
}

Gate Gate::rz(double angle) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::exp(-kI * (angle / 2.0));
    m(1, 1) = std::exp(kI * (angle / 2.0));
    return {GateKind::Rz, "rz", std::move(m), angle};
}

Gate Gate::cnot() {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return {GateKind::CNOT, "cx", std::move(m), std::nullopt};
}

Gate Gate::custom(std::string name, CMatrix matrix) {
    if (matrix.rows() != matrix.cols() || (matrix.rows() != 2 && matrix.rows() != 4)) {
        throw InvalidTarget("custom gate must be 2x2 or 4x4");
    }
    Gate g{GateKind::Custom, std::move(name), std::move(matrix), std::nullopt};
    if (g.unitarity_error() > 1e-10) {
        throw InvalidTarget("custom gate '" + g.name_ + "' is not unitary");
    }
    return g;
}

Gate Gate::adjoint() const {
    switch (kind_) {
    case GateKind::Ry:
        return ry(-*angle_);
    case GateKind::Rz:
        return rz(-*angle_);
    case GateKind::Custom:
        return {GateKind::Custom, name_ + "_dg", matrix_.adjoint(), std::nullopt};
    default:
        return *this; // remaining built-ins are involutions
    }
}

double Gate::unitarity_error() const {
    const auto d = matrix_.rows();
    return (matrix_.adjoint() * matrix_ - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

} // namespace dqpt::qcore
