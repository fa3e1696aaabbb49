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

#include "dqpt/qcore/pauli.hpp"

#include <bit>

#include "dqpt/qcore/error.hpp"

namespace dqpt::qcore {

char to_char(PauliLetter l) noexcept {
    switch (l) {
    case PauliLetter::X:
        return 'X';
    case PauliLetter::Y:
        return 'Y';
    case PauliLetter::Z:
        return 'Z';
    default:
        return 'I';
    }
}

PauliLetter pauli_from_char(char c) {
    switch (c) {
    case 'I':
        return PauliLetter::I;
    case 'X':
        return PauliLetter::X;
    case 'Y':
        return PauliLetter::Y;
    case 'Z':
        return PauliLetter::Z;
    default:
        throw ParseError(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString::PauliString(std::vector<PauliLetter> letters) : letters_(std::move(letters)) {
    const int n = static_cast<int>(letters_.size());
    if (n > 16) {
        throw InvalidTarget("Pauli strings longer than 16 letters are not supported");
    }
    for (int q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << bit_of(q, n);
        switch (letters_[static_cast<std::size_t>(q)]) {
        case PauliLetter::X:
            flip_mask_ |= bit;
            break;
        case PauliLetter::Y:
            flip_mask_ |= bit;
            phase_mask_ |= bit;
            ++y_count_;
            break;
        case PauliLetter::Z:
            phase_mask_ |= bit;
            break;
        case PauliLetter::I:
            break;
        }
    }
}

PauliString PauliString::parse(std::string_view label) {
    std::vector<PauliLetter> letters;
    letters.reserve(label.size());
    for (char c : label) {
        letters.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(letters));
}

std::string PauliString::label() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) {
        s.push_back(to_char(l));
    }
    return s;
}

bool PauliString::is_identity() const noexcept { return flip_mask_ == 0 && phase_mask_ == 0; }

// Y|b> = i (-1)^b |1-b>, Z|b> = (-1)^b |b>, X|b> = |1-b>.
PauliString::BasisImage PauliString::act_on_basis(std::size_t k) const noexcept {
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex phase = kIPow[y_count_ % 4];
    if (std::popcount(k & phase_mask_) % 2 == 1) {
        phase = -phase;
    }
    return {k ^ flip_mask_, phase};
}

CMatrix PauliString::matrix() const {
    const auto d = static_cast<Eigen::Index>(dim_of(static_cast<int>(letters_.size())));
    CMatrix m = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const auto img = act_on_basis(static_cast<std::size_t>(k));
        m(static_cast<Eigen::Index>(img.index), k) = img.phase;
    }
    return m;
}

double pauli_expectation(const CMatrix &rho, const PauliString &p) {
    const int n = static_cast<int>(p.size());
    if (static_cast<std::size_t>(rho.rows()) != dim_of(n)) {
        throw DimensionMismatch("Pauli string length does not match the state");
    }
    // Tr(P rho) = sum_k <img(k)| P |k> rho(k, img(k))
    Complex acc{0.0, 0.0};
    for (Eigen::Index k = 0; k < rho.rows(); ++k) {
        const auto img = p.act_on_basis(static_cast<std::size_t>(k));
        acc += img.phase * rho(k, static_cast<Eigen::Index>(img.index));
    }
    return acc.real();
}

double pauli_expectation(const DensityMatrix &rho, const PauliString &p) {
    return pauli_expectation(rho.matrix(), p);
}

std::vector<PauliString> all_pauli_strings(int n_qubits) {
    std::vector<PauliString> out;
    const std::size_t total = std::size_t{1} << (2 * n_qubits);
    out.reserve(total);
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n_qubits));
    for (std::size_t code = 0; code < total; ++code) {
        for (int q = 0; q < n_qubits; ++q) {
            const auto shift = 2 * (n_qubits - 1 - q);
            letters[static_cast<std::size_t>(q)] = static_cast<PauliLetter>((code >> shift) & 3U);
        }
        out.emplace_back(letters);
    }
    return out;
}

} // namespace dqpt::qcore
