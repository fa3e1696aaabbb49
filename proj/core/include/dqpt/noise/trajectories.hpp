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

#include "dqpt/noise/density_sim.hpp"

namespace dqpt::noise {

struct SamplingOptions {
    int record_every = 1;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// Monte-Carlo unraveling of run_density_matrix: each realization draws one
/// Kraus operator per gate (with probability ||K psi||^2) and evolves a pure
/// state; the recorded density matrices are averages of the R outer
/// products. Realization r uses a random stream derived from (seed, r) and
/// partial sums are reduced in a fixed order, so the result does not depend
/// on the worker count. Throws InvalidParams for R < 1.
[[nodiscard]] Trajectory sample_trajectories(const circuits::Circuit &c, const NoiseModelSpec &nm,
                                             const qcore::StateVector &input, int realizations,
                                             std::uint64_t seed, SamplingOptions options = {});

} // namespace dqpt::noise
