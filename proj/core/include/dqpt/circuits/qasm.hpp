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

#include <string>
#include <string_view>

#include "dqpt/circuits/circuit.hpp"

namespace dqpt::circuits {

/// OpenQASM 2.0 text over the gate set {h, x, ry, rz, cx} plus barriers.
/// Angles use the shortest representation that round-trips exactly.
/// Throws ExportError for any other gate.
[[nodiscard]] std::string export_qasm(const Circuit &c);

/// Parses the subset written by export_qasm. Angle arguments accept
/// arithmetic over numbers and `pi`. Throws ParseError with the line number
/// on malformed or unsupported input.
[[nodiscard]] Circuit import_qasm(std::string_view text);

} // namespace dqpt::circuits
