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

#include "dqpt/qcore/channel.hpp"

#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/state.hpp"

namespace dqpt::qcore {

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) {
        throw InvalidChannel("a channel needs at least one Kraus operator");
    }
    const auto d = ops_.front().rows();
    for (const CMatrix &k : ops_) {
        if (k.rows() != d || k.cols() != d) {
            throw InvalidChannel("Kraus operators must be square and of equal size");
        }
    }
    arity_ = qubits_for_dim(static_cast<std::size_t>(d));
    if (arity_ < 1) {
        throw InvalidChannel("Kraus operator dimension must be a power of two");
    }
    CMatrix sum = CMatrix::Zero(d, d);
    for (const CMatrix &k : ops_) {
        sum += k.adjoint() * k;
    }
    tp_error_ = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

} // namespace dqpt::qcore
