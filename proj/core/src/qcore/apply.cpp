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

#include "dqpt/qcore/apply.hpp"

#include <array>
#include <string>

#include "dqpt/qcore/error.hpp"

namespace dqpt::qcore {

void check_targets(std::span<const int> targets, int n_qubits, int arity) {
    if (static_cast<int>(targets.size()) != arity) {
        throw InvalidTarget("expected " + std::to_string(arity) + " target(s), got " +
                            std::to_string(targets.size()));
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits) {
            throw InvalidTarget("target qubit " + std::to_string(targets[i]) +
                                " outside register of " + std::to_string(n_qubits));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw InvalidTarget("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

namespace kernel {
namespace {

constexpr int kMaxArity = 3;

struct Embedding {
    std::size_t target_mask = 0;
    std::array<std::size_t, std::size_t{1} << kMaxArity> offsets{};
    std::size_t local_dim = 1;
};

// offsets[j] is the global index offset of local basis state j, where the
// first target is the most significant local bit.
Embedding embed(std::span<const int> targets, int n_qubits) {
    const auto k = static_cast<int>(targets.size());
    if (k < 1 || k > kMaxArity) {
        throw InvalidTarget("operators must act on 1.." + std::to_string(kMaxArity) +
                            " qubits");
    }
    Embedding e;
    e.local_dim = std::size_t{1} << k;
    for (int i = 0; i < k; ++i) {
        e.target_mask |= std::size_t{1} << bit_of(targets[static_cast<std::size_t>(i)], n_qubits);
    }
    for (std::size_t j = 0; j < e.local_dim; ++j) {
        std::size_t off = 0;
        for (int i = 0; i < k; ++i) {
            if ((j >> (k - 1 - i)) & 1U) {
                off |= std::size_t{1} << bit_of(targets[static_cast<std::size_t>(i)], n_qubits);
            }
        }
        e.offsets[j] = off;
    }
    return e;
}

template <typename Mat>
void apply_left_impl(Mat &m, const CMatrix &op, std::span<const int> targets, int n_qubits) {
    const Embedding e = embed(targets, n_qubits);
    if (static_cast<std::size_t>(op.rows()) != e.local_dim ||
        static_cast<std::size_t>(op.cols()) != e.local_dim) {
        throw DimensionMismatch("operator size does not match target count");
    }
    if (static_cast<std::size_t>(m.rows()) != dim_of(n_qubits)) {
        throw DimensionMismatch("operand does not match register size");
    }
    const std::size_t dim = dim_of(n_qubits);
    std::array<Complex, std::size_t{1} << kMaxArity> in{};
    std::array<Eigen::Index, std::size_t{1} << kMaxArity> rows{};
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & e.target_mask) {
            continue;
        }
        for (std::size_t j = 0; j < e.local_dim; ++j) {
            rows[j] = static_cast<Eigen::Index>(base | e.offsets[j]);
        }
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            for (std::size_t j = 0; j < e.local_dim; ++j) {
                in[j] = m(rows[j], c);
            }
            for (std::size_t r = 0; r < e.local_dim; ++r) {
                Complex acc{0.0, 0.0};
                for (std::size_t j = 0; j < e.local_dim; ++j) {
                    acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) * in[j];
                }
                m(rows[r], c) = acc;
            }
        }
    }
}

} // namespace

void apply_left(CMatrix &m, const CMatrix &op, std::span<const int> targets, int n_qubits) {
    apply_left_impl(m, op, targets, n_qubits);
}

void apply_left(CVector &v, const CMatrix &op, std::span<const int> targets, int n_qubits) {
    apply_left_impl(v, op, targets, n_qubits);
}

void conjugate(CMatrix &m, const CMatrix &op, std::span<const int> targets, int n_qubits) {
    // (U (U m)^dagger)^dagger = U m U^dagger
    apply_left_impl(m, op, targets, n_qubits);
    m.adjointInPlace();
    apply_left_impl(m, op, targets, n_qubits);
    m.adjointInPlace();
}

} // namespace kernel

StateVector apply_gate(const StateVector &state, const Gate &gate, std::span<const int> targets) {
    check_targets(targets, state.n_qubits(), gate.arity());
    CVector v = state.amplitudes();
    kernel::apply_left(v, gate.matrix(), targets, state.n_qubits());
    return unchecked_state(std::move(v), state.n_qubits());
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate,
                         std::span<const int> targets) {
    check_targets(targets, rho.n_qubits(), gate.arity());
    CMatrix m = rho.matrix();
    kernel::conjugate(m, gate.matrix(), targets, rho.n_qubits());
    return unchecked_density(std::move(m), rho.n_qubits());
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch,
                            std::span<const int> targets) {
    if (!ch.is_trace_preserving()) {
        throw InvalidChannel("channel is not trace preserving (error " +
                             std::to_string(ch.trace_preservation_error()) + ")");
    }
    check_targets(targets, rho.n_qubits(), ch.arity());
    const auto d = static_cast<Eigen::Index>(rho.dim());
    CMatrix out = CMatrix::Zero(d, d);
    for (const CMatrix &k : ch.operators()) {
        if (k.cwiseAbs().maxCoeff() == 0.0) {
            continue;
        }
        CMatrix term = rho.matrix();
        kernel::conjugate(term, k, targets, rho.n_qubits());
        out += term;
    }
    return unchecked_density(std::move(out), rho.n_qubits());
}

} // namespace dqpt::qcore
