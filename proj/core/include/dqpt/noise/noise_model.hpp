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

#include "dqpt/qcore/channel.hpp"

namespace dqpt::noise {

/// Bit-flip, Y-flip and phase-flip probabilities of one Pauli channel.
struct ProbTriple {
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    /// Throws InvalidProbability unless every entry is in [0, 1] and the sum is <= 1.
    void validate() const;
    [[nodiscard]] double identity_weight() const noexcept { return 1.0 - px - py - pz; }
    [[nodiscard]] bool is_zero() const noexcept { return px == 0.0 && py == 0.0 && pz == 0.0; }
    [[nodiscard]] ProbTriple scaled(double f) const noexcept { return {px * f, py * f, pz * f}; }

    friend bool operator==(const ProbTriple &, const ProbTriple &) = default;
};

/// (a) one triple shared by all gates; (b) p1 / p2 on X, Y, Z for one- and
/// two-qubit gates; (c) as (b) with Y errors neglected.
enum class NoisePreset { AbcShared, SplitXyz, SplitXz };

[[nodiscard]] std::string_view to_string(NoisePreset p) noexcept;
/// Accepts abc_shared, split_xyz, split_xz. Throws InvalidParams otherwise.
[[nodiscard]] NoisePreset preset_from_string(std::string_view s);

struct NoiseModelSpec {
    ProbTriple single_qubit;
    ProbTriple two_qubit; // per tensor factor
    double readout_flip = 0.0;
    /// Applies a readout_flip bit flip to every qubit before the first gate,
    /// modelling imperfect reset.
    bool reset_flips = true;
    NoisePreset preset = NoisePreset::AbcShared;

    [[nodiscard]] static NoiseModelSpec noiseless();
    /// Readout flip defaults to px.
    [[nodiscard]] static NoiseModelSpec abc_shared(double px, double py, double pz);
    [[nodiscard]] static NoiseModelSpec split_xyz(double p1, double p2);
    [[nodiscard]] static NoiseModelSpec split_xz(double p1, double p2);
    /// Builds a preset from its two free axes. For abc_shared the axes are
    /// (px, pz) and `fixed` supplies py; the split presets read (p1, p2) and
    /// ignore `fixed`.
    [[nodiscard]] static NoiseModelSpec from_axes(NoisePreset preset, double axis1, double axis2,
                                                  double fixed = 0.0);

    /// All probabilities multiplied by `f`, readout included.
    [[nodiscard]] NoiseModelSpec scaled(double f) const;
    void validate() const;
    [[nodiscard]] bool is_noiseless() const noexcept {
        return single_qubit.is_zero() && two_qubit.is_zero() && readout_flip == 0.0;
    }
};

/// K0 = sqrt(1 - px - py - pz) I, K1 = sqrt(px) X, K2 = sqrt(py) Y,
/// K3 = sqrt(pz) Z. Zero-weight operators are kept so the operator count is
/// always 4.
[[nodiscard]] qcore::KrausChannel make_flip_channel(const ProbTriple &p);
[[nodiscard]] qcore::KrausChannel make_flip_channel(double px, double py, double pz);
/// Pure bit flip with probability p.
[[nodiscard]] qcore::KrausChannel make_bit_flip_channel(double p);
/// The 16 products K_i (x) K_j of two single-qubit flip channels.
[[nodiscard]] qcore::KrausChannel make_two_qubit_channel(const ProbTriple &p);

} // namespace dqpt::noise
