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

#include "dqpt/noise/noise_model.hpp"

#include <cmath>

#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/gate.hpp"

namespace dqpt::noise {

void ProbTriple::validate() const {
    for (double p : {px, py, pz}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InvalidProbability("flip probability out of [0, 1]: " + std::to_string(p));
        }
    }
    if (px + py + pz > 1.0 + 1e-12) {
        throw InvalidProbability("flip probabilities sum to more than 1");
    }
}

std::string_view to_string(NoisePreset p) noexcept {
    switch (p) {
    case NoisePreset::AbcShared:
        return "abc_shared";
    case NoisePreset::SplitXyz:
        return "split_xyz";
    case NoisePreset::SplitXz:
        return "split_xz";
    }
    return "?";
}

NoisePreset preset_from_string(std::string_view s) {
    if (s == "abc_shared") {
        return NoisePreset::AbcShared;
    }
    if (s == "split_xyz") {
        return NoisePreset::SplitXyz;
    }
    if (s == "split_xz") {
        return NoisePreset::SplitXz;
    }
    throw InvalidParams("unknown noise preset '" + std::string(s) + "'");
}

NoiseModelSpec NoiseModelSpec::noiseless() { return {}; }

NoiseModelSpec NoiseModelSpec::abc_shared(double px, double py, double pz) {
    NoiseModelSpec s;
    s.preset = NoisePreset::AbcShared;
    s.single_qubit = {px, py, pz};
    s.two_qubit = s.single_qubit;
    s.readout_flip = px;
    return s;
}

NoiseModelSpec NoiseModelSpec::split_xyz(double p1, double p2) {
    NoiseModelSpec s;
    s.preset = NoisePreset::SplitXyz;
    s.single_qubit = {p1, p1, p1};
    s.two_qubit = {p2, p2, p2};
    s.readout_flip = p1;
    return s;
}

NoiseModelSpec NoiseModelSpec::split_xz(double p1, double p2) {
    NoiseModelSpec s;
    s.preset = NoisePreset::SplitXz;
    s.single_qubit = {p1, 0.0, p1};
    s.two_qubit = {p2, 0.0, p2};
    s.readout_flip = p1;
    return s;
}

NoiseModelSpec NoiseModelSpec::from_axes(NoisePreset preset, double axis1, double axis2,
                                         double fixed) {
    switch (preset) {
    case NoisePreset::AbcShared:
        return abc_shared(axis1, fixed, axis2);
    case NoisePreset::SplitXyz:
        return split_xyz(axis1, axis2);
    case NoisePreset::SplitXz:
        return split_xz(axis1, axis2);
    }
    throw InvalidParams("unknown noise preset");
}

NoiseModelSpec NoiseModelSpec::scaled(double f) const {
    NoiseModelSpec s = *this;
    s.single_qubit = single_qubit.scaled(f);
    s.two_qubit = two_qubit.scaled(f);
    s.readout_flip = readout_flip * f;
    return s;
}

void NoiseModelSpec::validate() const {
    single_qubit.validate();
    two_qubit.validate();
    if (!(readout_flip >= 0.0 && readout_flip <= 1.0)) {
        throw InvalidProbability("readout flip probability out of [0, 1]");
    }
}

qcore::KrausChannel make_flip_channel(const ProbTriple &p) {
    p.validate();
    const double p0 = std::max(0.0, p.identity_weight());
    return qcore::KrausChannel({std::sqrt(p0) * CMatrix::Identity(2, 2),
                                std::sqrt(p.px) * qcore::pauli_x(),
                                std::sqrt(p.py) * qcore::pauli_y(),
                                std::sqrt(p.pz) * qcore::pauli_z()});
}

qcore::KrausChannel make_flip_channel(double px, double py, double pz) {
    return make_flip_channel(ProbTriple{px, py, pz});
}

qcore::KrausChannel make_bit_flip_channel(double p) {
    return make_flip_channel(ProbTriple{p, 0.0, 0.0});
}

namespace {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace

qcore::KrausChannel make_two_qubit_channel(const ProbTriple &p) {
    const qcore::KrausChannel single = make_flip_channel(p);
    std::vector<CMatrix> ops;
    ops.reserve(16);
    for (const auto &a : single.operators()) {
        for (const auto &b : single.operators()) {
            ops.push_back(kron(a, b));
        }
    }
    return qcore::KrausChannel(std::move(ops));
}

} // namespace dqpt::noise
