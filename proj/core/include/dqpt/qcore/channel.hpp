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

#include <vector>

#include "dqpt/qcore/types.hpp"

namespace dqpt::qcore {

/// Kraus representation of a channel on 1..n qubits. Any set of equally
/// sized square operators is representable; trace preservation is checked
/// once at construction and enforced when the channel is applied.
class KrausChannel {
  public:
    explicit KrausChannel(std::vector<CMatrix> operators);

    [[nodiscard]] const std::vector<CMatrix> &operators() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] int arity() const noexcept { return arity_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_of(arity_); }

    /// max |sum K^dagger K - 1|
    [[nodiscard]] double trace_preservation_error() const noexcept { return tp_error_; }
    [[nodiscard]] bool is_trace_preserving(double tol = 1e-12) const noexcept {
        return tp_error_ <= tol;
    }

  private:
    std::vector<CMatrix> ops_;
    int arity_ = 0;
    double tp_error_ = 0.0;
};

} // namespace dqpt::qcore
