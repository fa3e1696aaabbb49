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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dqpt/qcore/state.hpp"

namespace dqpt::qcore {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

[[nodiscard]] char to_char(PauliLetter l) noexcept;
[[nodiscard]] PauliLetter pauli_from_char(char c);

/// Tensor product of single-qubit Paulis, q0 first.
class PauliString {
  public:
    explicit PauliString(std::vector<PauliLetter> letters);
    /// Parses "IXYZ"-style labels; throws ParseError on other characters.
    [[nodiscard]] static PauliString parse(std::string_view label);

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] PauliLetter operator[](std::size_t q) const { return letters_[q]; }
    [[nodiscard]] const std::vector<PauliLetter> &letters() const noexcept { return letters_; }
    [[nodiscard]] std::string label() const;
    [[nodiscard]] bool is_identity() const noexcept;

    /// Dense 2^n x 2^n operator.
    [[nodiscard]] CMatrix matrix() const;

    /// P|k> = phase * |image>.
    struct BasisImage {
        std::size_t index;
        Complex phase;
    };
    [[nodiscard]] BasisImage act_on_basis(std::size_t k) const noexcept;

    auto operator<=>(const PauliString &) const = default;

  private:
    std::vector<PauliLetter> letters_;
    std::size_t flip_mask_ = 0;
    std::size_t phase_mask_ = 0;
    int y_count_ = 0;
};

/// Tr(P rho), real part; throws DimensionMismatch on length mismatch.
[[nodiscard]] double pauli_expectation(const DensityMatrix &rho, const PauliString &p);
[[nodiscard]] double pauli_expectation(const CMatrix &rho, const PauliString &p);

/// All 4^n strings in lexicographic order over {I, X, Y, Z}.
[[nodiscard]] std::vector<PauliString> all_pauli_strings(int n_qubits);

} // namespace dqpt::qcore
