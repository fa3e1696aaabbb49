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

#include "dqpt/fit/objective.hpp"

#include <cmath>
#include <string>

#include "dqpt/noise/tomography.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"
#include "dqpt/qcore/random.hpp"

namespace dqpt::fit {

double averaged_trace_distance(const noise::Trajectory &a, const noise::Trajectory &b,
                               std::size_t k) {
    if (k < 1 || k > a.size() || k > b.size()) {
        throw InvalidParams("k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(std::min(a.size(), b.size())) + "]");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        if (std::abs(a.times[i] - b.times[i]) > 1e-9) {
            throw InvalidParams("time grids differ at entry " + std::to_string(i) + " (" +
                                std::to_string(a.times[i]) + " vs " +
                                std::to_string(b.times[i]) + ")");
        }
        total += qcore::trace_distance(a.states[i], b.states[i]);
    }
    return total / static_cast<double>(k);
}

noise::Trajectory inject_tomography_noise(const noise::Trajectory &target, std::int64_t shots,
                                          double readout_flip, std::uint64_t seed) {
    noise::Trajectory out = target;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const std::uint64_t s = qcore::make_stream(seed, i)();
        out.states[i] = noise::reconstruct_state(
            noise::simulate_tomography(target.states[i], readout_flip, shots, s));
    }
    return out;
}

} // namespace dqpt::fit
