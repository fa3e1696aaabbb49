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

#include <complex>
#include <cstddef>
#include <numbers>

#include <Eigen/Dense>

namespace dqpt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Largest register the dense backends accept.
inline constexpr int kMaxQubits = 8;

[[nodiscard]] constexpr std::size_t dim_of(int n_qubits) noexcept {
    return std::size_t{1} << n_qubits;
}

/// Bit position of qubit `q` inside a basis-state index. Qubit 0 is the
/// leftmost ket label and therefore the most significant bit.
[[nodiscard]] constexpr int bit_of(int q, int n_qubits) noexcept {
    return n_qubits - 1 - q;
}

} // namespace dqpt
