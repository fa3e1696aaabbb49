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

#include "dqpt/noise/density_sim.hpp"

#include <string>

#include "dqpt/qcore/apply.hpp"
#include "dqpt/qcore/error.hpp"

namespace dqpt::noise {

void Trajectory::validate() const {
    if (times.size() != states.size()) {
        throw InvalidState("trajectory times and states differ in length");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw InvalidState("trajectory times must be strictly increasing");
        }
    }
}

namespace detail {

RecordPlan record_plan(const circuits::Circuit &c, int record_every) {
    if (record_every < 1) {
        throw InvalidParams("record_every must be >= 1");
    }
    RecordPlan plan;
    const auto &b = c.metadata().boundaries;
    if (b.empty()) {
        plan.op_positions.push_back(c.ops().size());
        plan.times.push_back(0.0);
        return plan;
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (k % static_cast<std::size_t>(record_every) == 0) {
            plan.op_positions.push_back(b[k]);
            plan.times.push_back(static_cast<double>(k) * c.metadata().dt);
        }
    }
    return plan;
}

} // namespace detail

namespace {

void apply_channel_in_place(CMatrix &rho, const qcore::KrausChannel &ch,
                            std::span<const int> targets, int n) {
    CMatrix acc = CMatrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : ch.operators()) {
        if (k.cwiseAbs2().sum() == 0.0) {
            continue;
        }
        CMatrix term = rho;
        qcore::kernel::conjugate(term, k, targets, n);
        acc += term;
    }
    rho = std::move(acc);
}

} // namespace

Trajectory run_density_matrix(const circuits::Circuit &c, const NoiseModelSpec &nm,
                              const qcore::DensityMatrix &input, int record_every) {
    nm.validate();
    if (input.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("input state has " + std::to_string(input.n_qubits()) +
                                " qubits, circuit has " + std::to_string(c.n_qubits()));
    }
    const int n = c.n_qubits();
    const auto plan = detail::record_plan(c, record_every);
    const bool noisy1 = !nm.single_qubit.is_zero();
    const bool noisy2 = !nm.two_qubit.is_zero();
    const auto ch1 = make_flip_channel(nm.single_qubit);
    const auto ch2 = make_two_qubit_channel(nm.two_qubit);

    Trajectory tr;
    tr.dt = c.metadata().dt;
    tr.m = c.metadata().m;
    tr.J = c.metadata().J;

    CMatrix rho = input.matrix();
    if (nm.reset_flips && nm.readout_flip > 0.0) {
        const auto flip = make_bit_flip_channel(nm.readout_flip);
        for (int q = 0; q < n; ++q) {
            const int t[1] = {q};
            apply_channel_in_place(rho, flip, t, n);
        }
    }

    std::size_t next = 0;
    const auto &ops = c.ops();
    for (std::size_t i = 0; i <= ops.size(); ++i) {
        while (next < plan.op_positions.size() && plan.op_positions[next] == i) {
            tr.times.push_back(plan.times[next]);
            tr.states.push_back(qcore::unchecked_density(rho, n));
            ++next;
        }
        if (i == ops.size()) {
            break;
        }
        const auto &op = ops[i];
        if (op.is_barrier()) {
            continue;
        }
        qcore::kernel::conjugate(rho, op.gate->matrix(), op.targets, n);
        if (op.targets.size() == 1 && noisy1) {
            apply_channel_in_place(rho, ch1, op.targets, n);
        } else if (op.targets.size() == 2 && noisy2) {
            apply_channel_in_place(rho, ch2, op.targets, n);
        }
    }
    return tr;
}

} // namespace dqpt::noise
