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

namespace dqpt::fit {

/// (1/k) sum_{i<k} T(rho_a(t_i), rho_b(t_i)). Throws InvalidParams if k is
/// not in [1, min(len a, len b)] or the first k times differ by more than 1e-9.
[[nodiscard]] double averaged_trace_distance(const noise::Trajectory &a, const noise::Trajectory &b,
                                             std::size_t k = 3);

/// Replaces every state of `target` by its linear-inversion tomography
/// estimate from `shots` per setting. State i uses seed stream (seed, i).
[[nodiscard]] noise::Trajectory inject_tomography_noise(const noise::Trajectory &target,
                                                        std::int64_t shots, double readout_flip,
                                                        std::uint64_t seed);

} // namespace dqpt::fit
