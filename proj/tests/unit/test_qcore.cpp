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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dqpt/qcore/apply.hpp"
#include "dqpt/qcore/channel.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"
#include "dqpt/qcore/pauli.hpp"

using namespace dqpt;
using namespace dqpt::qcore;

namespace {

CMatrix random_density(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    CMatrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    CMatrix rho = a * a.adjoint();
    return rho / rho.trace();
}

} // namespace

TEST(StateVector, RejectsBadLengthAndNorm) {
    EXPECT_THROW(StateVector(CVector::Ones(3)), InvalidState);
    EXPECT_THROW(StateVector(CVector::Ones(4)), InvalidState);
    EXPECT_NO_THROW(StateVector::normalized(CVector::Ones(4)));
}

TEST(StateVector, LabelsPutQubitZeroFirst) {
    const auto s = StateVector::from_label("1000");
    EXPECT_DOUBLE_EQ(s.probability(8), 1.0);
    EXPECT_EQ(basis_label(0b1011, 4), "1011");
    EXPECT_THROW((void)StateVector::from_label("10a1"), InvalidState);
}

TEST(DensityMatrix, ValidatesInvariants) {
    CMatrix m = CMatrix::Identity(4, 4) / 4.0;
    EXPECT_NO_THROW(DensityMatrix{m});
    CMatrix bad_trace = CMatrix::Identity(4, 4) / 2.0;
    EXPECT_THROW(DensityMatrix{bad_trace}, InvalidState);
    CMatrix not_psd = CMatrix::Zero(2, 2);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{not_psd}, InvalidState);
    CMatrix not_herm = CMatrix::Identity(2, 2) / 2.0;
    not_herm(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{not_herm}, InvalidState);
}

TEST(Gate, BuiltinsAreUnitary) {
    for (const auto &g : {Gate::x(), Gate::y(), Gate::z(), Gate::h(), Gate::ry(0.3), Gate::rz(-1.2),
                          Gate::cnot()}) {
        EXPECT_LT(g.unitarity_error(), 1e-14) << g.name();
    }
    EXPECT_THROW((void)Gate::custom("bad", CMatrix::Ones(2, 2)), InvalidTarget);
}

TEST(Gate, RotationConventions) {
    const auto rz = Gate::rz(0.4).matrix();
    EXPECT_NEAR(std::abs(rz(0, 0) - std::exp(-kI * 0.2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rz(1, 1) - std::exp(kI * 0.2)), 0.0, 1e-15);
    const auto ry = Gate::ry(kPi).matrix();
    EXPECT_NEAR(ry(1, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs((Gate::ry(0.7).adjoint().matrix() * Gate::ry(0.7).matrix() -
                          CMatrix::Identity(2, 2))
                             .norm()),
                0.0, 1e-15);
}

TEST(Apply, CnotControlIsFirstTarget) {
    const auto s = StateVector::from_label("0100");
    const int t12[2] = {1, 2};
    EXPECT_DOUBLE_EQ(apply_gate(s, Gate::cnot(), t12).probability(0b0110), 1.0);
    const int t21[2] = {2, 1};
    EXPECT_DOUBLE_EQ(apply_gate(s, Gate::cnot(), t21).probability(0b0100), 1.0);
}

TEST(Apply, RejectsBadTargets) {
    const auto s = StateVector::basis(2, 0);
    const int dup[2] = {1, 1};
    EXPECT_THROW((void)apply_gate(s, Gate::cnot(), dup), InvalidTarget);
    const int out[1] = {2};
    EXPECT_THROW((void)apply_gate(s, Gate::x(), out), InvalidTarget);
}

TEST(Apply, DensityMatchesPureEvolution) {
    const auto psi = StateVector::normalized(CVector::Random(8));
    const int t[2] = {2, 0};
    const auto out = apply_gate(psi, Gate::cnot(), t);
    const auto rho = apply_gate(DensityMatrix::from_pure(psi), Gate::cnot(), t);
    EXPECT_LT((rho.matrix() - out.amplitudes() * out.amplitudes().adjoint()).norm(), 1e-14);
}

TEST(Channel, TracePreservationIsEnforced) {
    KrausChannel half({std::sqrt(0.5) * CMatrix::Identity(2, 2)});
    EXPECT_FALSE(half.is_trace_preserving());
    const int t[1] = {0};
    EXPECT_THROW((void)apply_channel(DensityMatrix::basis(1, 0), half, t), InvalidChannel);
    EXPECT_THROW(KrausChannel({CMatrix::Identity(2, 2), CMatrix::Identity(4, 4)}), InvalidChannel);
}

TEST(Metrics, TraceDistanceProperties) {
    std::mt19937_64 rng(3);
    const auto a = random_density(2, rng);
    const auto b = random_density(2, rng);
    EXPECT_NEAR(trace_distance(a, a), 0.0, 1e-14);
    EXPECT_NEAR(trace_distance(a, b), trace_distance(b, a), 1e-14);
    EXPECT_LE(trace_distance(a, b), 1.0);
    EXPECT_NEAR(trace_distance(DensityMatrix::basis(1, 0), DensityMatrix::basis(1, 1)), 1.0, 1e-15);
    EXPECT_THROW((void)trace_distance(DensityMatrix::basis(1, 0), DensityMatrix::basis(2, 0)),
                 DimensionMismatch);
}

TEST(Metrics, FidelityOfMaximallyMixed) {
    const auto psi = StateVector::basis(4, 5);
    EXPECT_NEAR(fidelity(psi, DensityMatrix::maximally_mixed(4)), 1.0 / 16.0, 1e-15);
    EXPECT_NEAR(fidelity(psi, DensityMatrix::from_pure(psi)), 1.0, 1e-15);
}

TEST(Metrics, ProjectionClipsNegativeEigenvalues) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.2;
    m(1, 1) = -0.2;
    const CMatrix p = project_to_density(m);
    EXPECT_NEAR(p(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(p(1, 1).real(), 0.0, 1e-15);
}

TEST(Pauli, ParseAndLabel) {
    const auto p = PauliString::parse("XIZY");
    EXPECT_EQ(p.label(), "XIZY");
    EXPECT_THROW((void)PauliString::parse("XQ"), ParseError);
    EXPECT_EQ(all_pauli_strings(2).size(), 16U);
    EXPECT_EQ(all_pauli_strings(2).front().label(), "II");
    EXPECT_EQ(all_pauli_strings(2).back().label(), "ZZ");
}

TEST(Pauli, BasisActionMatchesMatrix) {
    for (const auto &p : all_pauli_strings(3)) {
        const CMatrix m = p.matrix();
        for (std::size_t k = 0; k < 8; ++k) {
            const auto img = p.act_on_basis(k);
            CVector col = CVector::Zero(8);
            col(static_cast<Eigen::Index>(img.index)) = img.phase;
            EXPECT_LT((m.col(static_cast<Eigen::Index>(k)) - col).norm(), 1e-15) << p.label();
        }
    }
}

TEST(Pauli, ExpectationMatchesTrace) {
    std::mt19937_64 rng(11);
    const CMatrix rho = random_density(3, rng);
    for (const auto &p : all_pauli_strings(3)) {
        EXPECT_NEAR(pauli_expectation(rho, p), (rho * p.matrix()).trace().real(), 1e-13);
    }
}

TEST(Apply, SpecExamples) {
    const int t01[2] = {0, 1};
    EXPECT_DOUBLE_EQ(apply_gate(StateVector::from_label("10"), Gate::cnot(), t01).probability(3),
                     1.0);
    const auto psi = StateVector::normalized(CVector::Random(4));
    const int t0[1] = {0};
    const auto same = apply_gate(psi, Gate::identity(), t0);
    EXPECT_TRUE((same.amplitudes().array() == psi.amplitudes().array()).all());
    const auto hh = apply_gate(apply_gate(StateVector::basis(1, 0), Gate::h(), t0), Gate::h(), t0);
    EXPECT_NEAR(hh.probability(0), 1.0, 1e-12);
}

TEST(Apply, GateEqualsSingleKrausChannel) {
    std::mt19937_64 rng(5);
    const auto rho = unchecked_density(random_density(3, rng), 3);
    const int t[2] = {2, 1};
    const auto by_gate = apply_gate(rho, Gate::cnot(), t);
    const auto by_channel = apply_channel(rho, KrausChannel({Gate::cnot().matrix()}), t);
    EXPECT_LT((by_gate.matrix() - by_channel.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Channel, FlipExamples) {
    const int t[1] = {0};
    const KrausChannel bit_flip({CMatrix::Zero(2, 2), pauli_x(), CMatrix::Zero(2, 2),
                                 CMatrix::Zero(2, 2)});
    EXPECT_NEAR(apply_channel(DensityMatrix::basis(1, 0), bit_flip, t).population(1), 1.0, 1e-15);

    // px = pz = 1/4 leaves weight 1/2 on the identity: X keeps |+><+|, Z maps
    // it to |-><-|, so the coherence becomes (1/2 + 1/4 - 1/4) / 2.
    const KrausChannel xz({std::sqrt(0.5) * CMatrix::Identity(2, 2), 0.5 * pauli_x(),
                           CMatrix::Zero(2, 2), 0.5 * pauli_z()});
    const auto plus = DensityMatrix::from_pure(StateVector::normalized(CVector::Ones(2)));
    const auto out = apply_channel(plus, xz, t);
    EXPECT_NEAR(out(0, 1).real(), 0.25, 1e-15);
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
}

TEST(Channel, TracePreservedForValidTriples) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto rho = unchecked_density(random_density(2, rng), 2);
    for (int rep = 0; rep < 50; ++rep) {
        double px = u(rng), py = u(rng), pz = u(rng);
        const double s = px + py + pz + u(rng);
        px /= s, py /= s, pz /= s;
        const KrausChannel ch({std::sqrt(1 - px - py - pz) * CMatrix::Identity(2, 2),
                               std::sqrt(px) * pauli_x(), std::sqrt(py) * pauli_y(),
                               std::sqrt(pz) * pauli_z()});
        const int t[1] = {1};
        EXPECT_NEAR(apply_channel(rho, ch, t).trace().real(), 1.0, 1e-12);
    }
}

TEST(Metrics, PureVersusMaximallyMixed) {
    const auto psi = StateVector::normalized(CVector::Random(16));
    EXPECT_NEAR(trace_distance(DensityMatrix::from_pure(psi), DensityMatrix::maximally_mixed(4)),
                15.0 / 16.0, 1e-12);
    EXPECT_NEAR(fidelity(StateVector::basis(1, 0), DensityMatrix::basis(1, 1)), 0.0, 1e-15);
}

TEST(Metrics, TriangleInequalityOnRandomStates) {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix a = random_density(4, rng);
        const CMatrix b = random_density(4, rng);
        const CMatrix c = random_density(4, rng);
        EXPECT_GE(trace_distance(a, b), 0.0);
        EXPECT_LE(trace_distance(a, c), trace_distance(a, b) + trace_distance(b, c) + 1e-9);
    }
}

TEST(Pauli, SpecExpectations) {
    std::mt19937_64 rng(2);
    const auto rho = unchecked_density(random_density(4, rng), 4);
    EXPECT_NEAR(pauli_expectation(rho, PauliString::parse("IIII")), 1.0, 1e-12);
    EXPECT_NEAR(pauli_expectation(DensityMatrix::basis(1, 0), PauliString::parse("Z")), 1.0, 1e-15);
    CVector bell = CVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(pauli_expectation(DensityMatrix::from_pure(StateVector(bell)),
                                  PauliString::parse("XX")),
                1.0, 1e-15);
    EXPECT_THROW((void)pauli_expectation(rho, PauliString::parse("XX")), DimensionMismatch);
}
