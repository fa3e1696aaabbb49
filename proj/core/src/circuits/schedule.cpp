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

#include "dqpt/circuits/schedule.hpp"

#include <algorithm>

#include "dqpt/qcore/error.hpp"

namespace dqpt::circuits {

MomentSchedule moments(const Circuit &c, ScheduleMode mode) {
    MomentSchedule s;
    std::vector<std::size_t> next_free(static_cast<std::size_t>(c.n_qubits()), 0);
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        const auto &op = c.ops()[i];
        if (op.is_barrier()) {
            if (mode == ScheduleMode::FigureFaithful) {
                std::size_t level = 0;
                for (int q : op.targets) {
                    level = std::max(level, next_free[static_cast<std::size_t>(q)]);
                }
                for (int q : op.targets) {
                    next_free[static_cast<std::size_t>(q)] = level;
                }
            }
            continue;
        }
        std::size_t level = 0;
        for (int q : op.targets) {
            level = std::max(level, next_free[static_cast<std::size_t>(q)]);
        }
        if (level >= s.moments.size()) {
            s.moments.resize(level + 1);
        }
        s.moments[level].push_back(i);
        for (int q : op.targets) {
            next_free[static_cast<std::size_t>(q)] = level + 1;
        }
    }
    return s;
}

CouplingMap::CouplingMap(int n_qubits, std::vector<std::pair<int, int>> edges)
    : n_qubits_(n_qubits), edges_(std::move(edges)) {
    for (const auto &[a, b] : edges_) {
        if (a == b) {
            throw InvalidTarget("coupling map contains a self-edge on qubit " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits) {
            throw InvalidTarget("coupling map edge out of range");
        }
    }
}

CouplingMap CouplingMap::linear(int n_qubits) {
    std::vector<std::pair<int, int>> e;
    for (int q = 0; q + 1 < n_qubits; ++q) {
        e.emplace_back(q, q + 1);
    }
    return CouplingMap(n_qubits, std::move(e));
}

bool CouplingMap::connected(int a, int b) const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [&](const auto &e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
}

LayoutReport validate_layout(const Circuit &c, const CouplingMap &map) {
    LayoutReport r;
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        const auto &op = c.ops()[i];
        if (op.is_barrier() || op.targets.size() != 2) {
            continue;
        }
        if (!map.connected(op.targets[0], op.targets[1])) {
            r.violating_ops.push_back(i);
        }
    }
    r.ok = r.violating_ops.empty();
    return r;
}

} // namespace dqpt::circuits
