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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dqpt/qcore/pauli.hpp"
#include "dqpt/qcore/state.hpp"

namespace dqpt::noise {

/// Per-qubit measurement bases over {X, Y, Z}.
class TomographySetting {
  public:
    /// Throws ParseError unless every letter is X, Y or Z.
    explicit TomographySetting(std::string_view letters);

    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] std::size_t size() const noexcept { return label_.size(); }
    [[nodiscard]] char operator[](std::size_t q) const { return label_[q]; }

    friend auto operator<=>(const TomographySetting &, const TomographySetting &) = default;

  private:
    std::string label_;
};

/// All 3^n settings, lexicographic over X < Y < Z (XX..X first).
[[nodiscard]] std::vector<TomographySetting> tomography_settings(int n_qubits);

/// Outcome distribution after rotating each qubit into its measurement
/// basis (H for X, H S^dagger for Y). Index k is the outcome whose q0 bit is
/// most significant.
[[nodiscard]] std::vector<double> outcome_probabilities(const qcore::DensityMatrix &rho,
                                                        const TomographySetting &setting);

/// Outcome distribution with an independent classical bit flip of
/// probability `flip` on every qubit.
[[nodiscard]] std::vector<double> apply_readout_flips(std::vector<double> probs, int n_qubits,
                                                      double flip);

struct CountsTable {
    std::string setting;
    std::int64_t shots = 0;
    /// Outcome label (q0 first) to count. Zero counts are omitted.
    std::map<std::string, std::int64_t> counts;

    /// Throws InvalidParams if counts do not sum to shots or labels are malformed.
    void validate() const;
    /// {"setting": "XZYX", "shots": n, "counts": {"0000": k, ...}}
    [[nodiscard]] std::string to_json() const;
    /// Throws ParseError on malformed input.
    [[nodiscard]] static CountsTable from_json(std::string_view text);
};

/// Rotates, flips and samples `shots` outcomes multinomially. Deterministic
/// for a fixed seed. Throws InvalidParams for shots < 1.
[[nodiscard]] CountsTable simulate_readout(const qcore::DensityMatrix &rho,
                                           const TomographySetting &setting, double flip,
                                           std::int64_t shots, std::uint64_t seed);

/// Counts for every setting of tomography_settings(n); setting i uses a
/// stream derived from (seed, i).
[[nodiscard]] std::vector<CountsTable> simulate_tomography(const qcore::DensityMatrix &rho,
                                                           double flip, std::int64_t shots,
                                                           std::uint64_t seed);

struct ReconstructionOptions {
    /// Clip negative eigenvalues and renormalize the trace.
    bool project = true;
};

/// Linear inversion (1/2^n) sum_P <P> P over all 4^n Pauli strings, where
/// expectations of strings containing I are averaged over every compatible
/// setting. Returns the raw (possibly non-positive) estimate when
/// options.project is false. Throws MissingSetting if a setting is absent
/// and InvalidParams if shot counts differ between tables.
[[nodiscard]] CMatrix reconstruct_matrix(const std::vector<CountsTable> &tables,
                                         ReconstructionOptions options = {});
[[nodiscard]] qcore::DensityMatrix reconstruct_state(const std::vector<CountsTable> &tables);

/// Same estimator from exact outcome distributions keyed by setting label.
[[nodiscard]] CMatrix reconstruct_from_probabilities(
    const std::map<std::string, std::vector<double>> &probs, int n_qubits,
    ReconstructionOptions options = {});

} // namespace dqpt::noise
