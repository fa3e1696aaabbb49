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

#include <optional>
#include <string>

#include "dqpt/qcore/types.hpp"

namespace dqpt::qcore {

enum class GateKind { I, X, Y, Z, H, Ry, Rz, CNOT, Custom };

/// A unitary gate on one or two qubits. Built-in gates are created through
/// the factories below; `custom` accepts any unitary of matching size.
class Gate {
  public:
    [[nodiscard]] static Gate identity();
    [[nodiscard]] static Gate x();
    [[nodiscard]] static Gate y();
    [[nodiscard]] static Gate z();
    [[nodiscard]] static Gate h();
    /// exp(-i Y angle / 2)
    [[nodiscard]] static Gate ry(double angle);
    /// exp(-i Z angle / 2)
    [[nodiscard]] static Gate rz(double angle);
    /// Control is the first target, target the second.
    [[nodiscard]] static Gate cnot();
    /// Throws InvalidTarget unless `matrix` is 2x2 or 4x4 and unitary within 1e-10.
    [[nodiscard]] static Gate custom(std::string name, CMatrix matrix);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] int arity() const noexcept { return arity_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::optional<double> angle() const noexcept { return angle_; }

    [[nodiscard]] Gate adjoint() const;
    /// max |U^dagger U - 1|
    [[nodiscard]] double unitarity_error() const;

  private:
    Gate(GateKind kind, std::string name, CMatrix matrix, std::optional<double> angle);

    GateKind kind_;
    std::string name_;
    int arity_;
    CMatrix matrix_;
    std::optional<double> angle_;
};

[[nodiscard]] CMatrix pauli_x();
[[nodiscard]] CMatrix pauli_y();
[[nodiscard]] CMatrix pauli_z();

} // namespace dqpt::qcore
