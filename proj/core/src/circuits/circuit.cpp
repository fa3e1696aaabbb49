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

#include "dqpt/circuits/circuit.hpp"

#include <algorithm>
#include <numeric>

#include "dqpt/qcore/apply.hpp"
#include "dqpt/qcore/error.hpp"

namespace dqpt::circuits {

Circuit::Circuit(int n_qubits, std::string name) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidTarget("circuit register size out of range");
    }
    meta_.name = std::move(name);
}

Circuit &Circuit::add(const qcore::Gate &gate, std::vector<int> targets) {
    qcore::check_targets(targets, n_qubits_, gate.arity());
    ops_.push_back({gate, std::move(targets)});
    return *this;
}

Circuit &Circuit::barrier() {
    std::vector<int> all(static_cast<std::size_t>(n_qubits_));
    std::iota(all.begin(), all.end(), 0);
    ops_.push_back({std::nullopt, std::move(all)});
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw DimensionMismatch("cannot append circuits of different register sizes");
    }
    const std::size_t offset = ops_.size();
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    for (std::size_t b : other.meta_.boundaries) {
        meta_.boundaries.push_back(offset + b);
    }
    return *this;
}

Circuit &Circuit::mark_boundary() {
    meta_.boundaries.push_back(ops_.size());
    return *this;
}

std::size_t Circuit::gate_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const Operation &op) { return !op.is_barrier(); }));
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_, meta_.name.empty() ? std::string{} : meta_.name + "_inverse");
    inv.meta_.m = meta_.m;
    inv.meta_.J = meta_.J;
    inv.meta_.dt = meta_.dt;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        if (!it->is_barrier()) {
            inv.ops_.push_back({it->gate->adjoint(), it->targets});
        }
    }
    return inv;
}

CMatrix Circuit::unitary() const {
    CMatrix u = CMatrix::Identity(static_cast<Eigen::Index>(dim_of(n_qubits_)),
                                  static_cast<Eigen::Index>(dim_of(n_qubits_)));
    for (const auto &op : ops_) {
        if (!op.is_barrier()) {
            qcore::kernel::apply_left(u, op.gate->matrix(), op.targets, n_qubits_);
        }
    }
    return u;
}

qcore::StateVector run_statevector(const Circuit &c, const qcore::StateVector &input) {
    if (input.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("state has " + std::to_string(input.n_qubits()) +
                                " qubits, circuit has " + std::to_string(c.n_qubits()));
    }
    CVector v = input.amplitudes();
    for (const auto &op : c.ops()) {
        if (!op.is_barrier()) {
            qcore::kernel::apply_left(v, op.gate->matrix(), op.targets, c.n_qubits());
        }
    }
    return qcore::unchecked_state(std::move(v), c.n_qubits());
}

std::vector<qcore::StateVector> run_statevector_recorded(const Circuit &c,
                                                         const qcore::StateVector &input) {
    if (input.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("state and circuit register sizes differ");
    }
    std::vector<qcore::StateVector> out;
    const auto &bounds = c.metadata().boundaries;
    out.reserve(bounds.size());
    CVector v = input.amplitudes();
    std::size_t next = 0;
    for (std::size_t i = 0; i <= c.ops().size(); ++i) {
        while (next < bounds.size() && bounds[next] == i) {
            out.push_back(qcore::unchecked_state(v, c.n_qubits()));
            ++next;
        }
        if (i == c.ops().size()) {
            break;
        }
        const auto &op = c.ops()[i];
        if (!op.is_barrier()) {
            qcore::kernel::apply_left(v, op.gate->matrix(), op.targets, c.n_qubits());
        }
    }
    return out;
}

} // namespace dqpt::circuits
