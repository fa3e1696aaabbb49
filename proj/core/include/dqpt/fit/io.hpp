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

#include "dqpt/fit/sweep.hpp"

namespace dqpt::fit {

/// JSON array of {"t": real, "rho": [[re, im], ...]} with rho row-major.
[[nodiscard]] std::string target_to_json(const noise::Trajectory &tr);
/// Throws ParseError naming the offending entry. Every rho must be a valid
/// density matrix (within 1e-6) of 2^n x 2^n entries.
[[nodiscard]] noise::Trajectory target_from_json(std::string_view text);

/// Header `axis1,axis2,value`, one row per grid point in row-major order,
/// 12 significant digits.
[[nodiscard]] std::string surface_to_csv(const DistanceSurface &s);

/// {"params": {axis1: v, axis2: v}, "min": v, "cell": spacing}. `cell` is a
/// number when both spacings agree and a two-element array otherwise.
[[nodiscard]] std::string fit_result_to_json(const FitResult &r);

/// `%.12g` formatting used by every text export.
[[nodiscard]] std::string format_g12(double v);

} // namespace dqpt::fit
