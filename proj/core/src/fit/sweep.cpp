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

#include "dqpt/fit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "dqpt/circuits/builders.hpp"
#include "dqpt/fit/objective.hpp"
#include "dqpt/noise/trajectories.hpp"
#include "dqpt/qcore/error.hpp"

namespace dqpt::fit {

GridSpec GridSpec::make(noise::NoisePreset preset, double start1, double start2, double step,
                        int count, double fixed) {
    const bool shared = preset == noise::NoisePreset::AbcShared;
    GridSpec g;
    g.preset = preset;
    g.axis1 = {shared ? "px" : "p1", start1, step, count};
    g.axis2 = {shared ? "pz" : "p2", start2, step, count};
    g.fixed = fixed;
    return g;
}

noise::NoiseModelSpec GridSpec::model_at(int i, int j) const {
    return noise::NoiseModelSpec::from_axes(preset, axis1.value(i), axis2.value(j), fixed);
}

void GridSpec::validate() const {
    for (const Axis *a : {&axis1, &axis2}) {
        if (a->count < 1) {
            throw InvalidParams("grid axis '" + a->name + "' is empty");
        }
        if (a->count > 1 && !(a->step > 0.0)) {
            throw InvalidParams("grid axis '" + a->name + "' needs a positive step");
        }
    }
    for (int i : {0, axis1.count - 1}) {
        for (int j : {0, axis2.count - 1}) {
            model_at(i, j).validate();
        }
    }
}

noise::Trajectory simulate_program(const SweepProgram &program, const noise::NoiseModelSpec &nm) {
    if (program.k < 1) {
        throw InvalidParams("k must be >= 1");
    }
    const auto c = circuits::build_evolution(program.params, program.dt,
                                             static_cast<int>(program.k) - 1);
    if (program.method == SweepMethod::Exact) {
        return noise::run_density_matrix(c, nm, qcore::DensityMatrix::basis(4, 0));
    }
    return noise::sample_trajectories(c, nm, qcore::StateVector::basis(4, 0), program.realizations,
                                      program.seed, {.record_every = 1, .workers = 1});
}

DistanceSurface grid_sweep(const GridSpec &grid, const noise::Trajectory &target,
                           const SweepProgram &program, std::string target_id) {
    grid.validate();
    if (target.size() < program.k) {
        throw InvalidParams("target has " + std::to_string(target.size()) +
                            " states, objective needs " + std::to_string(program.k));
    }
    DistanceSurface s;
    s.grid = grid;
    s.kind = program.k == 1 ? ObjectiveKind::SingleState : ObjectiveKind::TimeAveraged;
    s.provenance = {std::move(target_id), grid.preset,    program.method,
                    program.method == SweepMethod::Sampled ? program.realizations : 0,
                    program.seed,         program.k};
    s.values.assign(grid.size(), 0.0);

    const int n2 = grid.axis2.count;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t idx = next++; idx < s.values.size(); idx = next++) {
            try {
                const int i = static_cast<int>(idx / static_cast<std::size_t>(n2));
                const int j = static_cast<int>(idx % static_cast<std::size_t>(n2));
                const auto tr = simulate_program(program, grid.model_at(i, j));
                s.values[idx] = averaged_trace_distance(target, tr, program.k);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    unsigned workers = program.workers == 0 ? std::thread::hardware_concurrency() : program.workers;
    workers = std::clamp(workers, 1U, static_cast<unsigned>(s.values.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return s;
}

FitResult locate_minimum(const DistanceSurface &s) {
    if (s.values.empty()) {
        throw InvalidParams("cannot locate the minimum of an empty surface");
    }
    FitResult r;
    r.axis1_name = s.grid.axis1.name;
    r.axis2_name = s.grid.axis2.name;
    r.cell1 = s.grid.axis1.step;
    r.cell2 = s.grid.axis2.step;
    r.min = s.value(0, 0);
    for (int i = 0; i < s.grid.axis1.count; ++i) {
        for (int j = 0; j < s.grid.axis2.count; ++j) {
            if (s.value(i, j) < r.min) {
                r.min = s.value(i, j);
                r.i = i;
                r.j = j;
            }
        }
    }
    for (int i = 0; i < s.grid.axis1.count; ++i) {
        for (int j = 0; j < s.grid.axis2.count; ++j) {
            const double v = s.value(i, j);
            if (v == r.min && (i != r.i || j != r.j)) {
                r.tie = true;
            }
            if (v - r.min <= kValleyTolerance) {
                r.valley.emplace_back(i, j);
            }
        }
    }
    r.p1 = s.grid.axis1.value(r.i);
    r.p2 = s.grid.axis2.value(r.j);
    return r;
}

namespace {

// Lower cell index and fractional offset of x along `a`.
std::pair<int, double> locate(const Axis &a, double x) {
    const double hi = a.value(a.count - 1);
    const double tol = 1e-12 * std::max(1.0, std::abs(hi));
    if (x < a.start - tol || x > hi + tol) {
        throw InvalidParams("point outside the grid along '" + a.name + "'");
    }
    if (a.count == 1) {
        return {0, 0.0};
    }
    const double u = std::clamp((x - a.start) / a.step, 0.0, static_cast<double>(a.count - 1));
    const int i = std::min(static_cast<int>(std::floor(u)), a.count - 2);
    return {i, u - i};
}

} // namespace

double interpolate(const DistanceSurface &s, double x1, double x2) {
    const auto [i, fx] = locate(s.grid.axis1, x1);
    const auto [j, fy] = locate(s.grid.axis2, x2);
    const int i1 = std::min(i + 1, s.grid.axis1.count - 1);
    const int j1 = std::min(j + 1, s.grid.axis2.count - 1);
    return (1 - fx) * (1 - fy) * s.value(i, j) + fx * (1 - fy) * s.value(i1, j) +
           (1 - fx) * fy * s.value(i, j1) + fx * fy * s.value(i1, j1);
}

} // namespace dqpt::fit
