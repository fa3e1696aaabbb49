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

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dqpt/qcore/gate.hpp"
#include "dqpt/qcore/state.hpp"

namespace dqpt::circuits {

/// One entry of a circuit: a gate on explicit targets, or a barrier across
/// the listed qubits (used only by figure-faithful scheduling).
struct Operation {
    std::optional<qcore::Gate> gate;
    std::vector<int> targets;

    [[nodiscard]] bool is_barrier() const noexcept { return !gate.has_value(); }
};

struct CircuitMetadata {
    std::string name;
    double m = 0.0;
    double J = 0.0;
    double dt = 0.0;
    /// Number of operations completed at each recorded boundary. Entry 0 marks
    /// the end of state preparation (t = 0), entry s the end of Trotter step s.
    std::vector<std::size_t> boundaries;
};

class Circuit {
  public:
    explicit Circuit(int n_qubits, std::string name = {});

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Operation> &ops() const noexcept { return ops_; }
    [[nodiscard]] const CircuitMetadata &metadata() const noexcept { return meta_; }
    [[nodiscard]] CircuitMetadata &metadata() noexcept { return meta_; }

    /// Throws InvalidTarget on out-of-range or repeated targets.
    Circuit &add(const qcore::Gate &gate, std::vector<int> targets);
    Circuit &add(const qcore::Gate &gate, std::initializer_list<int> targets) {
        return add(gate, std::vector<int>(targets));
    }
    /// Barrier across all qubits.
    Circuit &barrier();
    /// Appends the operations of `other` (same register size). Boundaries of
    /// `other` are shifted and appended.
    Circuit &append(const Circuit &other);
    /// Records the current operation count as a boundary.
    Circuit &mark_boundary();

    [[nodiscard]] std::size_t gate_count() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return gate_count() == 0; }

    /// Reversed circuit of adjoint gates; barriers and boundaries are dropped.
    [[nodiscard]] Circuit inverse() const;
    /// Dense 2^n x 2^n unitary.
    [[nodiscard]] CMatrix unitary() const;

  private:
    int n_qubits_;
    std::vector<Operation> ops_;
    CircuitMetadata meta_;
};

/// Sequential gate application. Throws DimensionMismatch on register mismatch.
[[nodiscard]] qcore::StateVector run_statevector(const Circuit &c, const qcore::StateVector &input);

/// States after each boundary of `c` (see CircuitMetadata::boundaries).
[[nodiscard]] std::vector<qcore::StateVector> run_statevector_recorded(
    const Circuit &c, const qcore::StateVector &input);

} // namespace dqpt::circuits
