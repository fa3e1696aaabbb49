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
#include <map>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "dqpt/circuits/builders.hpp"
#include "dqpt/circuits/qasm.hpp"
#include "dqpt/circuits/schedule.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"
#include "dqpt/qcore/pauli.hpp"
#include "dqpt/schwinger/loschmidt.hpp"

using namespace dqpt;
using namespace dqpt::circuits;
using qcore::Gate;
using qcore::StateVector;

namespace {

schwinger::ModelParams unit_params() { return {}; }

CMatrix expm_hermitian(const CMatrix &h, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const CVector phases = (-kI * t * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

int count_kind(const Circuit &c, qcore::GateKind k) {
    int n = 0;
    for (const auto &op : c.ops()) {
        n += (!op.is_barrier() && op.gate->kind() == k) ? 1 : 0;
    }
    return n;
}

} // namespace

TEST(Circuit, RejectsInvalidTargets) {
    Circuit c(4);
    EXPECT_THROW(c.add(Gate::cnot(), {1, 1}), InvalidTarget);
    EXPECT_THROW(c.add(Gate::x(), {4}), InvalidTarget);
    EXPECT_THROW(c.add(Gate::x(), {0, 1}), InvalidTarget);
    EXPECT_THROW(Circuit(0), InvalidTarget);
}

TEST(Circuit, EmptyCircuitLeavesInputUnchanged) {
    const auto psi = StateVector::normalized(CVector::Random(16));
    const auto out = run_statevector(Circuit(4), psi);
    EXPECT_TRUE((out.amplitudes().array() == psi.amplitudes().array()).all());
    EXPECT_THROW((void)run_statevector(Circuit(3), psi), DimensionMismatch);
}

TEST(Circuit, InverseUndoesCircuit) {
    const auto c = build_evolution(unit_params(), 0.1, 3);
    const auto psi = StateVector::normalized(CVector::Random(16));
    const auto back = run_statevector(c.inverse(), run_statevector(c, psi));
    EXPECT_LT((back.amplitudes() - psi.amplitudes()).norm(), 1e-10);
}

TEST(GroundPrep, AngleAndGateCounts) {
    EXPECT_NEAR(ground_prep_angle(unit_params()), -kPi / 4.0, 1e-14);
    const auto c = build_ground_prep(unit_params());
    EXPECT_EQ(c.gate_count(), 7U);
    EXPECT_EQ(count_kind(c, qcore::GateKind::Ry), 1);
    EXPECT_EQ(count_kind(c, qcore::GateKind::H), 1);
    EXPECT_EQ(count_kind(c, qcore::GateKind::X), 1);
    EXPECT_EQ(count_kind(c, qcore::GateKind::CNOT), 4);
    const std::vector<std::vector<int>> cnot_targets = {{0, 2}, {1, 3}, {0, 3}, {3, 2}};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(c.ops()[3 + k].targets, cnot_targets[k]);
    }
}

TEST(GroundPrep, PreparesGroundStateExactly) {
    for (double J : {0.2, 1.0, 2.7}) {
        auto p = unit_params();
        p.J = J;
        const auto psi = run_statevector(build_ground_prep(p), StateVector::basis(4, 0));
        const auto s = schwinger::diagonalize(p);
        const auto g = schwinger::embed(s.g.amplitudes);
        EXPECT_NEAR(qcore::overlap_probability(psi, g), 1.0, 1e-12);
        EXPECT_NEAR(psi[0b0010].real(), s.a_g, 1e-12);
        EXPECT_NEAR(psi[0b1011].real(), s.a_g, 1e-12);
        EXPECT_NEAR(psi[0b0101].real(), s.b_g, 1e-12);
        EXPECT_NEAR(psi[0b1100].real(), s.b_g, 1e-12);
    }
}

TEST(HoppingBlock, CaseTable) {
    const double J = 1.0;
    const double dt = 0.1;
    const auto block = build_hopping_block(J, dt, 0, 1, 2, 3);
    const std::map<std::string, std::string> partner = {
        {"001", "110"}, {"101", "010"}, {"010", "101"}, {"110", "001"}};
    for (const auto &[in, out] : partner) {
        const auto psi = run_statevector(block, StateVector::from_label(in));
        const auto ii = static_cast<std::size_t>(std::stoi(in, nullptr, 2));
        const auto oo = static_cast<std::size_t>(std::stoi(out, nullptr, 2));
        EXPECT_NEAR(std::abs(psi[ii] - std::cos(J * dt / 2)), 0.0, 1e-12) << in;
        EXPECT_NEAR(std::abs(psi[oo] - (-kI * std::sin(J * dt / 2))), 0.0, 1e-12) << in;
    }
    const auto psi = run_statevector(block, StateVector::from_label("001"));
    EXPECT_NEAR(psi[1].real(), 0.998750, 5e-7);
    EXPECT_NEAR(psi[6].imag(), -0.049979, 5e-7);
}

TEST(HoppingBlock, NoEvolutionWhenMatterBitsAgree) {
    const auto block = build_hopping_block(1.3, 0.2, 0, 1, 2, 3);
    for (const char *label : {"000", "011", "100", "111"}) {
        const auto in = StateVector::from_label(label);
        EXPECT_NEAR(qcore::overlap_probability(run_statevector(block, in), in), 1.0, 1e-12)
            << label;
    }
}

TEST(HoppingBlock, EqualsExactExponential) {
    const double J = 0.8;
    const double dt = 0.3;
    using qcore::PauliString;
    const CMatrix h0 = (J / 4) * (PauliString::parse("XXXI").matrix() +
                                  PauliString::parse("XYYI").matrix());
    const CMatrix h1 = (J / 4) * (PauliString::parse("IXXX").matrix() +
                                  PauliString::parse("IYYX").matrix());
    EXPECT_LT((build_hopping_block(J, dt, 0, 1, 2).unitary() - expm_hermitian(h0, dt)).norm(),
              1e-12);
    EXPECT_LT((build_hopping_block(J, dt, 3, 2, 1).unitary() - expm_hermitian(h1, dt)).norm(),
              1e-12);
}

TEST(TrotterStep, RejectsNonPositiveStep) {
    EXPECT_THROW((void)build_trotter_step(unit_params().quenched(), 0.0), InvalidParams);
    EXPECT_THROW((void)build_trotter_step(unit_params().quenched(), -0.1), InvalidParams);
}

TEST(TrotterStep, ApproximatesQuenchedEvolution) {
    const auto p = unit_params().quenched();
    const CMatrix h = schwinger::build_spin_hamiltonian(p);
    double prev = 0.0;
    for (double dt : {0.1, 0.05}) {
        const double err = (build_trotter_step(p, dt).unitary() - expm_hermitian(h, dt)).norm();
        EXPECT_LT(err, 0.05);
        if (prev > 0.0) {
            EXPECT_NEAR(prev / err, 4.0, 0.2);
        }
        prev = err;
    }
}

TEST(TrotterStep, MassRotationSigns) {
    auto p = unit_params().quenched();
    p.J = 0.0;
    const auto c = build_trotter_step(p, 0.1);
    const CMatrix hm = schwinger::build_spin_hamiltonian(p);
    EXPECT_LT((c.unitary() - expm_hermitian(hm, 0.1)).norm(), 1e-12);
}

TEST(TrotterStep, PreservesPhysicalSubspace) {
    const auto c = build_evolution(unit_params(), 0.1, 40);
    for (const auto &psi : run_statevector_recorded(c, StateVector::basis(4, 0))) {
        EXPECT_NEAR(schwinger::physical_population(psi), 1.0, 1e-10);
    }
}

TEST(TrotterStep, MirrorLeakageStatesEvolve) {
    const auto step = build_trotter_step(unit_params().quenched(), 0.1);
    for (const char *label : {"1101", "0100", "0011", "1010"}) {
        const auto in = StateVector::from_label(label);
        const auto out = run_statevector(step, in);
        EXPECT_LT(qcore::overlap_probability(out, in), 1.0 - 1e-4) << label;
        EXPECT_LT(schwinger::physical_population(out), 1e-12) << label;
    }
}

TEST(TrotterStep, DoublyOccupiedMatterIsStationary) {
    const auto step = build_trotter_step(unit_params().quenched(), 0.1);
    const auto in = StateVector::from_label("0111");
    EXPECT_NEAR(qcore::overlap_probability(run_statevector(step, in), in), 1.0, 1e-12);
}

TEST(TrotterStep, EchoTracksAnalyticAtFirstOrder) {
    const auto p = unit_params();
    const auto c = build_evolution(p, 0.1, 10);
    const auto states = run_statevector_recorded(c, StateVector::basis(4, 0));
    ASSERT_EQ(states.size(), 11U);
    for (std::size_t s = 0; s < states.size(); ++s) {
        const double t = 0.1 * static_cast<double>(s);
        const double echo = qcore::overlap_probability(states.front(), states[s]);
        const double exact = std::pow(std::cos(std::sqrt(2.0) * t), 2);
        EXPECT_NEAR(echo, exact, 0.1 * 0.1);
    }
}

TEST(Moments, FigureFaithfulDepth) {
    const auto step = build_trotter_step(unit_params().quenched(), 0.1);
    EXPECT_EQ(moments(step, ScheduleMode::FigureFaithful).depth(), 20U);
    Circuit ten(4);
    for (int s = 0; s < 10; ++s) {
        ten.append(step);
    }
    EXPECT_EQ(moments(ten, ScheduleMode::FigureFaithful).depth(), 200U);
    EXPECT_LE(moments(ten, ScheduleMode::Greedy).depth(), 200U);
}

TEST(Moments, GreedyPacking) {
    Circuit one(4);
    one.add(Gate::x(), {2});
    EXPECT_EQ(moments(one).depth(), 1U);
    Circuit hh(4);
    hh.add(Gate::h(), {0});
    hh.add(Gate::h(), {1});
    const auto s = moments(hh);
    EXPECT_EQ(s.depth(), 1U);
    EXPECT_EQ(s.moments[0].size(), 2U);
}

TEST(Moments, ScheduleIsValid) {
    const auto c = build_evolution(unit_params(), 0.1, 4);
    for (auto mode : {ScheduleMode::Greedy, ScheduleMode::FigureFaithful}) {
        const auto s = moments(c, mode);
        std::vector<std::size_t> last(4, 0);
        std::vector<bool> seen_any(4, false);
        std::size_t scheduled = 0;
        for (std::size_t m = 0; m < s.depth(); ++m) {
            std::vector<int> used(4, 0);
            for (std::size_t idx : s.moments[m]) {
                ++scheduled;
                for (int q : c.ops()[idx].targets) {
                    EXPECT_EQ(++used[static_cast<std::size_t>(q)], 1);
                    if (seen_any[static_cast<std::size_t>(q)]) {
                        EXPECT_GT(idx, last[static_cast<std::size_t>(q)]);
                    }
                    seen_any[static_cast<std::size_t>(q)] = true;
                    last[static_cast<std::size_t>(q)] = idx;
                }
            }
        }
        EXPECT_EQ(scheduled, c.gate_count());
    }
    EXPECT_LE(moments(c, ScheduleMode::Greedy).depth(),
              moments(c, ScheduleMode::FigureFaithful).depth());
}

TEST(Layout, LinearMapChecks) {
    const auto map = CouplingMap::linear(4);
    EXPECT_TRUE(validate_layout(build_trotter_step(unit_params().quenched(), 0.1), map).ok);
    const auto prep = validate_layout(build_ground_prep(unit_params()), map);
    EXPECT_FALSE(prep.ok);
    EXPECT_EQ(prep.violating_ops, (std::vector<std::size_t>{3, 4, 5}));
    EXPECT_TRUE(validate_layout(Circuit(4), map).ok);
    EXPECT_THROW(CouplingMap(4, {{1, 1}}), InvalidTarget);
    EXPECT_THROW(CouplingMap(4, {{0, 4}}), InvalidTarget);
}

TEST(Qasm, ExportFormatting) {
    Circuit c(4);
    c.add(Gate::x(), {2});
    c.add(Gate::rz(0.1), {1});
    c.add(Gate::ry(-kPi / 4), {0});
    const auto text = export_qasm(c);
    EXPECT_NE(text.find("OPENQASM 2.0;"), std::string::npos);
    EXPECT_NE(text.find("qreg q[4];"), std::string::npos);
    EXPECT_NE(text.find("x q[2];"), std::string::npos);
    EXPECT_NE(text.find("rz(0.1) q[1];"), std::string::npos);
    EXPECT_NE(text.find("ry(-0.7853981633974483) q[0];"), std::string::npos);
}

TEST(Qasm, RejectsUnsupportedGates) {
    Circuit c(4);
    c.add(Gate::y(), {0});
    EXPECT_THROW((void)export_qasm(c), ExportError);
}

TEST(Qasm, RoundTripPreservesUnitary) {
    const auto step = build_trotter_step(unit_params().quenched(), 0.1);
    const auto back = import_qasm(export_qasm(step));
    EXPECT_LT((back.unitary() - step.unitary()).cwiseAbs().maxCoeff(), 1e-10);
    const auto evo = build_evolution(unit_params(), 0.1, 10);
    EXPECT_LT((import_qasm(export_qasm(evo)).unitary() - evo.unitary()).cwiseAbs().maxCoeff(),
              1e-10);
    EXPECT_EQ(moments(back, ScheduleMode::FigureFaithful).depth(), 20U);
}

TEST(Qasm, ImportAcceptsCommentsAndExpressions) {
    const auto c = import_qasm("OPENQASM 2.0;\n// header comment\ninclude \"qelib1.inc\";\n"
                               "qreg q[2];\nrz(pi/2) q[0]; // trailing\nry(-(pi/4)*2) q[1];\n"
                               "cx q[0], q[1];\nbarrier q;\n");
    ASSERT_EQ(c.ops().size(), 4U);
    EXPECT_NEAR(*c.ops()[0].gate->angle(), kPi / 2, 1e-15);
    EXPECT_NEAR(*c.ops()[1].gate->angle(), -kPi / 2, 1e-15);
    EXPECT_TRUE(c.ops()[3].is_barrier());
}

TEST(Qasm, ImportErrorsNameTheLine) {
    EXPECT_THROW((void)import_qasm("qreg q[4];"), ParseError);
    EXPECT_THROW((void)import_qasm("OPENQASM 2.0;\nqreg q[4];\nmeasure q[0];\n"), ParseError);
    EXPECT_THROW((void)import_qasm("OPENQASM 2.0;\nqreg q[4];\nx q[7];\n"), ParseError);
    EXPECT_THROW((void)import_qasm("OPENQASM 2.0;\nqreg q[4];\nrz(0.1 q[0];\n"), ParseError);
    EXPECT_THROW((void)import_qasm("OPENQASM 2.0;\nqreg q[4];\ncx q[1],q[1];\n"), ParseError);
    try {
        (void)import_qasm("OPENQASM 2.0;\nqreg q[4];\nh q[0];\nfoo q[1];\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}
