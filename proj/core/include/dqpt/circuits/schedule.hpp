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

#include <utility>
#include <vector>

#include "dqpt/circuits/circuit.hpp"

namespace dqpt::circuits {

enum class ScheduleMode { Greedy, FigureFaithful };

/// Moments as lists of operation indices into the source circuit.
struct MomentSchedule {
    std::vector<std::vector<std::size_t>> moments;

    [[nodiscard]] std::size_t depth() const noexcept { return moments.size(); }
};

/// As-soon-as-possible packing on disjoint qubits. Greedy mode ignores
/// barriers; figure-faithful mode never moves an operation across one.
[[nodiscard]] MomentSchedule moments(const Circuit &c, ScheduleMode mode = ScheduleMode::Greedy);

/// Undirected qubit connectivity.
class CouplingMap {
  public:
    /// Throws InvalidTarget on self-edges or out-of-range indices.
    CouplingMap(int n_qubits, std::vector<std::pair<int, int>> edges);

    /// Chain 0-1-...-(n-1).
    [[nodiscard]] static CouplingMap linear(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<std::pair<int, int>> &edges() const noexcept { return edges_; }
    [[nodiscard]] bool connected(int a, int b) const noexcept;

  private:
    int n_qubits_;
    std::vector<std::pair<int, int>> edges_;
};

struct LayoutReport {
    bool ok = true;
    std::vector<std::size_t> violating_ops;
};

/// Lists two-qubit operations whose qubit pair is not an edge of `map`.
[[nodiscard]] LayoutReport validate_layout(const Circuit &c, const CouplingMap &map);

} // namespace dqpt::circuits
