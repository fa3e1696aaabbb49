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

#include <array>

#include <benchmark/benchmark.h>

#include "dqpt/circuits/builders.hpp"
#include "dqpt/fit/objective.hpp"
#include "dqpt/fit/sweep.hpp"
#include "dqpt/noise/density_sim.hpp"
#include "dqpt/noise/tomography.hpp"
#include "dqpt/noise/trajectories.hpp"
#include "dqpt/qcore/apply.hpp"
#include "dqpt/schwinger/loschmidt.hpp"
#include "dqpt/schwinger/winding.hpp"

using namespace dqpt;

namespace {

schwinger::ModelParams unit_params() {
    return schwinger::ModelParams{};
}

void BM_StateVectorCnot(benchmark::State &state) {
    auto psi = qcore::StateVector::basis(4, 5);
    const auto cnot = qcore::Gate::cnot();
    const std::array<int, 2> targets = {1, 2};
    for (auto _ : state) {
        psi = qcore::apply_gate(psi, cnot, targets);
        benchmark::DoNotOptimize(psi);
    }
}
BENCHMARK(BM_StateVectorCnot);

void BM_DensityCnotWithChannel(benchmark::State &state) {
    auto rho = qcore::DensityMatrix::basis(4, 5);
    const auto cnot = qcore::Gate::cnot();
    const auto channel = noise::make_two_qubit_channel({0.016, 0.0, 0.016});
    const std::array<int, 2> targets = {1, 2};
    for (auto _ : state) {
        rho = qcore::apply_channel(qcore::apply_gate(rho, cnot, targets), channel, targets);
        benchmark::DoNotOptimize(rho);
    }
}
BENCHMARK(BM_DensityCnotWithChannel);

void BM_NoisyTrotterSteps(benchmark::State &state) {
    const auto circ = circuits::build_evolution(unit_params(), 0.1, static_cast<int>(state.range(0)));
    const auto nm = noise::NoiseModelSpec::split_xz(0.01, 0.016);
    const auto input = qcore::DensityMatrix::basis(4, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noise::run_density_matrix(circ, nm, input));
    }
}
BENCHMARK(BM_NoisyTrotterSteps)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SampledTrajectories(benchmark::State &state) {
    const auto circ = circuits::build_evolution(unit_params(), 0.1, 10);
    const auto nm = noise::NoiseModelSpec::split_xz(0.01, 0.016);
    const auto input = qcore::StateVector::basis(4, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noise::sample_trajectories(circ, nm, input, 100, 7, {1, 1}));
    }
}
BENCHMARK(BM_SampledTrajectories)->Unit(benchmark::kMillisecond);

void BM_TomographyReconstruction(benchmark::State &state) {
    const auto rho = qcore::DensityMatrix::maximally_mixed(4);
    const auto tables = noise::simulate_tomography(rho, 0.0, 8192, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noise::reconstruct_state(tables));
    }
}
BENCHMARK(BM_TomographyReconstruction)->Unit(benchmark::kMillisecond);

void BM_SweepPoint(benchmark::State &state) {
    fit::SweepProgram program;
    const auto grid = fit::GridSpec::make(noise::NoisePreset::SplitXz, 0.0, 0.0, 1e-3, 21);
    const auto target = fit::simulate_program(program, grid.model_at(10, 16));
    const auto model = grid.model_at(9, 15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fit::averaged_trace_distance(fit::simulate_program(program, model), target, program.k));
    }
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

void BM_WindingWindow(benchmark::State &state) {
    const auto J = schwinger::linspace(0.9, 1.1, 21);
    const auto t = schwinger::time_grid(1.0, 1.25, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            schwinger::plaquette_windings(schwinger::analytic_phase_field(1.0, J, t)));
    }
}
BENCHMARK(BM_WindingWindow)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
