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

#include "dqpt/noise/trajectories.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "dqpt/qcore/apply.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/random.hpp"

namespace dqpt::noise {

namespace {

constexpr int kChunk = 16;

struct Context {
    const circuits::Circuit &c;
    const detail::RecordPlan &plan;
    const qcore::KrausChannel &ch1;
    const qcore::KrausChannel &ch2;
    const qcore::KrausChannel &reset;
    bool noisy1;
    bool noisy2;
    bool noisy_reset;
};

void sample_kraus(CVector &psi, const qcore::KrausChannel &ch, std::span<const int> targets,
                  int n, std::mt19937_64 &rng) {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0.0;
    CVector chosen;
    double chosen_w = 0.0;
    for (const auto &k : ch.operators()) {
        CVector v = psi;
        qcore::kernel::apply_left(v, k, targets, n);
        const double w = v.squaredNorm();
        if (w <= 0.0) {
            continue;
        }
        chosen = std::move(v);
        chosen_w = w;
        acc += w;
        if (u < acc) {
            break;
        }
    }
    psi = chosen / std::sqrt(chosen_w);
}

void run_realization(const Context &ctx, const CVector &input, std::mt19937_64 &rng,
                     std::vector<CMatrix> &sums) {
    const int n = ctx.c.n_qubits();
    CVector psi = input;
    if (ctx.noisy_reset) {
        for (int q = 0; q < n; ++q) {
            const int t[1] = {q};
            sample_kraus(psi, ctx.reset, t, n, rng);
        }
    }
    const auto &ops = ctx.c.ops();
    std::size_t next = 0;
    for (std::size_t i = 0; i <= ops.size(); ++i) {
        while (next < ctx.plan.op_positions.size() && ctx.plan.op_positions[next] == i) {
            sums[next].noalias() += psi * psi.adjoint();
            ++next;
        }
        if (i == ops.size()) {
            break;
        }
        const auto &op = ops[i];
        if (op.is_barrier()) {
            continue;
        }
        qcore::kernel::apply_left(psi, op.gate->matrix(), op.targets, n);
        if (op.targets.size() == 1 && ctx.noisy1) {
            sample_kraus(psi, ctx.ch1, op.targets, n, rng);
        } else if (op.targets.size() == 2 && ctx.noisy2) {
            sample_kraus(psi, ctx.ch2, op.targets, n, rng);
        }
    }
}

} // namespace

Trajectory sample_trajectories(const circuits::Circuit &c, const NoiseModelSpec &nm,
                               const qcore::StateVector &input, int realizations,
                               std::uint64_t seed, SamplingOptions options) {
    if (realizations < 1) {
        throw InvalidParams("need at least one realization");
    }
    nm.validate();
    if (input.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("input state and circuit register sizes differ");
    }
    const auto plan = detail::record_plan(c, options.record_every);
    const auto ch1 = make_flip_channel(nm.single_qubit);
    const auto ch2 = make_two_qubit_channel(nm.two_qubit);
    const auto reset = make_bit_flip_channel(nm.readout_flip);
    const Context ctx{c,      plan,
                      ch1,    ch2,
                      reset,  !nm.single_qubit.is_zero(),
                      !nm.two_qubit.is_zero(), nm.reset_flips && nm.readout_flip > 0.0};

    const auto dim = static_cast<Eigen::Index>(input.dim());
    const int n_chunks = (realizations + kChunk - 1) / kChunk;
    std::vector<std::vector<CMatrix>> partial(
        static_cast<std::size_t>(n_chunks),
        std::vector<CMatrix>(plan.op_positions.size(), CMatrix::Zero(dim, dim)));

    std::atomic<int> next_chunk{0};
    auto worker = [&] {
        for (int k = next_chunk++; k < n_chunks; k = next_chunk++) {
            auto &sums = partial[static_cast<std::size_t>(k)];
            const int first = k * kChunk;
            const int last = std::min(realizations, first + kChunk);
            for (int r = first; r < last; ++r) {
                auto rng = qcore::make_stream(seed, static_cast<std::uint64_t>(r));
                run_realization(ctx, input.amplitudes(), rng, sums);
            }
        }
    };
    unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
    workers = std::clamp(workers, 1U, static_cast<unsigned>(n_chunks));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    Trajectory tr;
    tr.dt = c.metadata().dt;
    tr.m = c.metadata().m;
    tr.J = c.metadata().J;
    for (std::size_t s = 0; s < plan.op_positions.size(); ++s) {
        CMatrix total = CMatrix::Zero(dim, dim);
        for (const auto &chunk : partial) {
            total += chunk[s];
        }
        total /= static_cast<double>(realizations);
        tr.times.push_back(plan.times[s]);
        tr.states.push_back(qcore::unchecked_density(std::move(total), c.n_qubits()));
    }
    return tr;
}

} // namespace dqpt::noise
