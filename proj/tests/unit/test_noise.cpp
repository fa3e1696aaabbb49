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

#include <array>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "dqpt/circuits/builders.hpp"
#include "dqpt/noise/density_sim.hpp"
#include "dqpt/noise/noise_model.hpp"
#include "dqpt/noise/tomography.hpp"
#include "dqpt/noise/trajectories.hpp"
#include "dqpt/qcore/apply.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"
#include "dqpt/schwinger/loschmidt.hpp"

using namespace dqpt;
using namespace dqpt::noise;
using qcore::DensityMatrix;
using qcore::Gate;
using qcore::StateVector;

namespace {

DensityMatrix random_density(int n, unsigned seed) {
    std::srand(seed);
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    const CMatrix a = CMatrix::Random(d, d);
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace();
    return DensityMatrix(rho);
}

DensityMatrix ground_rho() {
    return DensityMatrix::from_pure(
        schwinger::embed(schwinger::diagonalize(schwinger::ModelParams{}).g.amplitudes));
}

circuits::Circuit short_program(int steps) {
    return circuits::build_evolution(schwinger::ModelParams{}, 0.1, steps);
}

} // namespace

TEST(FlipChannel, Examples) {
    const auto id = make_flip_channel(0, 0, 0);
    EXPECT_EQ(id.size(), 4U);
    const auto rho = random_density(1, 3);
    const std::array<int, 1> t{0};
    EXPECT_LT((qcore::apply_channel(rho, id, t).matrix() - rho.matrix()).norm(), 1e-15);

    const auto flip = make_flip_channel(1, 0, 0);
    const auto flipped = qcore::apply_channel(DensityMatrix::basis(1, 0), flip, t);
    EXPECT_NEAR(flipped.population(1), 1.0, 1e-15);

    const auto ch = make_flip_channel(0.01, 0.0, 0.015);
    int nonzero = 0;
    for (const auto &k : ch.operators()) {
        nonzero += k.norm() > 0.0 ? 1 : 0;
    }
    EXPECT_EQ(nonzero, 3);
    EXPECT_TRUE(ch.is_trace_preserving(1e-14));
}

TEST(FlipChannel, RejectsInvalidProbabilities) {
    EXPECT_THROW((void)make_flip_channel(0.6, 0.3, 0.2), InvalidProbability);
    EXPECT_THROW((void)make_flip_channel(-0.1, 0, 0), InvalidProbability);
    EXPECT_THROW(NoiseModelSpec::split_xz(0.2, 1.5).validate(), InvalidProbability);
}

TEST(TwoQubitChannel, OperatorCountAndDepolarizing) {
    const auto zero = make_two_qubit_channel({0, 0, 0});
    EXPECT_EQ(zero.size(), 16U);
    int nonzero = 0;
    for (const auto &k : zero.operators()) {
        nonzero += k.norm() > 0.0 ? 1 : 0;
    }
    EXPECT_EQ(nonzero, 1);
    EXPECT_EQ(make_two_qubit_channel({0.01, 0.02, 0.03}).size(), 16U);

    const auto dep = make_two_qubit_channel({0.25, 0.25, 0.25});
    const std::array<int, 2> t{0, 1};
    for (unsigned s = 0; s < 5; ++s) {
        const auto out = qcore::apply_channel(random_density(2, s), dep, t);
        EXPECT_LT((out.matrix() - CMatrix::Identity(4, 4) / 4.0).norm(), 1e-14);
    }
}

TEST(NoisePresets, Mapping) {
    const auto a = NoiseModelSpec::abc_shared(0.01, 0.002, 0.015);
    EXPECT_EQ(a.single_qubit, (ProbTriple{0.01, 0.002, 0.015}));
    EXPECT_EQ(a.two_qubit, a.single_qubit);
    EXPECT_DOUBLE_EQ(a.readout_flip, 0.01);
    const auto b = NoiseModelSpec::split_xyz(0.01, 0.02);
    EXPECT_EQ(b.two_qubit, (ProbTriple{0.02, 0.02, 0.02}));
    const auto c = NoiseModelSpec::split_xz(0.01, 0.02);
    EXPECT_EQ(c.single_qubit, (ProbTriple{0.01, 0.0, 0.01}));
    EXPECT_EQ(c.two_qubit, (ProbTriple{0.02, 0.0, 0.02}));
    EXPECT_EQ(NoiseModelSpec::from_axes(NoisePreset::AbcShared, 0.01, 0.015, 0.002).single_qubit,
              a.single_qubit);
    EXPECT_EQ(preset_from_string("split_xz"), NoisePreset::SplitXz);
    EXPECT_EQ(to_string(NoisePreset::SplitXyz), "split_xyz");
    EXPECT_THROW((void)preset_from_string("d"), InvalidParams);
}

TEST(DensitySim, ZeroNoiseMatchesStatevector) {
    const auto c = short_program(10);
    const auto tr = run_density_matrix(c, NoiseModelSpec::noiseless(), DensityMatrix::basis(4, 0));
    const auto pure = circuits::run_statevector_recorded(c, StateVector::basis(4, 0));
    ASSERT_EQ(tr.size(), pure.size());
    for (std::size_t i = 0; i < tr.size(); ++i) {
        EXPECT_NEAR(tr.times[i], 0.1 * static_cast<double>(i), 1e-12);
        EXPECT_LT((tr.states[i].matrix() - DensityMatrix::from_pure(pure[i]).matrix()).norm(),
                  1e-10);
    }
}

TEST(DensitySim, FullFlipAfterXIsIdentity) {
    circuits::Circuit c(4);
    c.add(Gate::x(), {1});
    auto nm = NoiseModelSpec::abc_shared(1.0, 0.0, 0.0);
    nm.readout_flip = 0.0;
    const auto tr = run_density_matrix(c, nm, DensityMatrix::basis(4, 0));
    ASSERT_EQ(tr.size(), 1U);
    EXPECT_NEAR(tr.states[0].population(0), 1.0, 1e-14);
}

TEST(DensitySim, ResetFlipsUseReadoutProbability) {
    circuits::Circuit c(4);
    c.add(Gate::h(), {0});
    c.add(Gate::h(), {0});
    auto nm = NoiseModelSpec::noiseless();
    nm.readout_flip = 0.1;
    const auto tr = run_density_matrix(c, nm, DensityMatrix::basis(4, 0));
    EXPECT_NEAR(tr.states[0].population(0), std::pow(0.9, 4), 1e-14);
    nm.reset_flips = false;
    EXPECT_NEAR(run_density_matrix(c, nm, DensityMatrix::basis(4, 0)).states[0].population(0), 1.0,
                1e-14);
}

TEST(DensitySim, RecordEvery) {
    const auto c = short_program(6);
    const auto tr = run_density_matrix(c, NoiseModelSpec::split_xz(0.01, 0.01),
                                       DensityMatrix::basis(4, 0), 3);
    ASSERT_EQ(tr.size(), 3U);
    EXPECT_NEAR(tr.times[1], 0.3, 1e-12);
    EXPECT_NEAR(tr.times[2], 0.6, 1e-12);
}

TEST(DensitySim, StatesStayValidAcrossLongCircuits) {
    const auto c = short_program(20);
    ASSERT_GT(c.gate_count(), 400U);
    const auto tr = run_density_matrix(c, NoiseModelSpec::split_xyz(0.02, 0.03),
                                       DensityMatrix::basis(4, 0));
    for (const auto &rho : tr.states) {
        EXPECT_TRUE(rho.report().valid(1e-10, 1e-9));
    }
}

TEST(DensitySim, ConvergesToMaximallyMixed) {
    const auto tr = run_density_matrix(short_program(100), NoiseModelSpec::abc_shared(0.01, 0, 0.015),
                                       DensityMatrix::basis(4, 0));
    const auto mixed = DensityMatrix::maximally_mixed(4);
    double prev = 2.0;
    for (std::size_t k = 10; k < tr.size(); ++k) {
        const double d = qcore::trace_distance(tr.states[k], mixed);
        EXPECT_LE(d, prev + 1e-6) << k;
        prev = d;
    }
    for (auto s : schwinger::kPhysStates) {
        EXPECT_NEAR(tr.states.back().population(schwinger::encoding(s)), 1.0 / 16.0, 0.02);
    }
}

TEST(Sampling, SingleNoiselessRealizationIsPure) {
    const auto c = short_program(5);
    const auto tr = sample_trajectories(c, NoiseModelSpec::noiseless(), StateVector::basis(4, 0), 1, 7);
    const auto exact = run_density_matrix(c, NoiseModelSpec::noiseless(), DensityMatrix::basis(4, 0));
    for (std::size_t i = 0; i < tr.size(); ++i) {
        EXPECT_NEAR((tr.states[i].matrix() * tr.states[i].matrix()).trace().real(), 1.0, 1e-12);
        EXPECT_LT(qcore::trace_distance(tr.states[i], exact.states[i]), 1e-10);
    }
    EXPECT_THROW((void)sample_trajectories(c, NoiseModelSpec::noiseless(), StateVector::basis(4, 0),
                                           0, 7),
                 InvalidParams);
}

TEST(Sampling, DeterministicAndWorkerIndependent) {
    const auto c = short_program(4);
    const auto nm = NoiseModelSpec::split_xz(0.02, 0.03);
    const auto a = sample_trajectories(c, nm, StateVector::basis(4, 0), 50, 11, {1, 1});
    const auto b = sample_trajectories(c, nm, StateVector::basis(4, 0), 50, 11, {1, 4});
    const auto other = sample_trajectories(c, nm, StateVector::basis(4, 0), 50, 12, {1, 1});
    ASSERT_EQ(a.size(), b.size());
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE((a.states[i].matrix().array() == b.states[i].matrix().array()).all());
        differs = differs || (a.states[i].matrix() - other.states[i].matrix()).norm() > 0.0;
    }
    EXPECT_TRUE(differs);
}

TEST(Sampling, AgreesWithExactChannels) {
    const auto c = short_program(10);
    const auto nm = NoiseModelSpec::abc_shared(0.01, 0.0, 0.01);
    const auto exact = run_density_matrix(c, nm, DensityMatrix::basis(4, 0));
    const auto tr = sample_trajectories(c, nm, StateVector::basis(4, 0), 2000, 5);
    for (std::size_t i = 0; i < tr.size(); ++i) {
        EXPECT_LT(qcore::trace_distance(tr.states[i], exact.states[i]), 0.05) << i;
    }
}

TEST(Sampling, ErrorShrinksLikeInverseSqrtR) {
    const auto c = short_program(5);
    const auto nm = NoiseModelSpec::split_xz(0.02, 0.04);
    const auto exact = run_density_matrix(c, nm, DensityMatrix::basis(4, 0));
    std::vector<double> err;
    for (int r : {100, 400, 1600}) {
        double sum = 0.0;
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto tr = sample_trajectories(c, nm, StateVector::basis(4, 0), r, seed);
            sum += qcore::trace_distance(tr.states.back(), exact.states.back());
        }
        err.push_back(sum / 4.0);
    }
    EXPECT_NEAR(err[0] / err[1], 2.0, 0.8);
    EXPECT_NEAR(err[1] / err[2], 2.0, 0.8);
}

TEST(Tomography, Settings) {
    const auto s4 = tomography_settings(4);
    EXPECT_EQ(s4.size(), 81U);
    EXPECT_EQ(s4.front().label(), "XXXX");
    EXPECT_EQ(s4.back().label(), "ZZZZ");
    EXPECT_TRUE(std::is_sorted(s4.begin(), s4.end()));
    EXPECT_EQ(std::adjacent_find(s4.begin(), s4.end()), s4.end());
    const auto s1 = tomography_settings(1);
    ASSERT_EQ(s1.size(), 3U);
    EXPECT_EQ(s1[0].label() + s1[1].label() + s1[2].label(), "XYZ");
    EXPECT_THROW(TomographySetting("XQ"), ParseError);
}

TEST(Tomography, ReadoutExamples) {
    const auto zero = DensityMatrix::basis(4, 0);
    const auto all = simulate_readout(zero, TomographySetting("ZZZZ"), 0.0, 1000, 1);
    EXPECT_EQ(all.counts.size(), 1U);
    EXPECT_EQ(all.counts.at("0000"), 1000);

    const std::int64_t shots = 100000;
    const auto uniform = simulate_readout(zero, TomographySetting("ZZZZ"), 0.5, shots, 2);
    EXPECT_EQ(uniform.counts.size(), 16U);
    const double mean = static_cast<double>(shots) / 16.0;
    const double sigma = std::sqrt(static_cast<double>(shots) * (1.0 / 16.0) * (15.0 / 16.0));
    for (const auto &[label, k] : uniform.counts) {
        EXPECT_LT(std::abs(static_cast<double>(k) - mean), 5.0 * sigma) << label;
    }
}

TEST(Tomography, BellParity) {
    CVector amps = CVector::Zero(16);
    amps(0b0000) = amps(0b1100) = 1.0 / std::sqrt(2.0);
    const auto bell = DensityMatrix::from_pure(StateVector::normalized(amps));
    const auto t = simulate_readout(bell, TomographySetting("XXZZ"), 0.0, 4096, 3);
    for (const auto &[label, k] : t.counts) {
        EXPECT_EQ(label[0], label[1]) << label;
    }
    const auto p = outcome_probabilities(bell, TomographySetting("XXZZ"));
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-14);
}

TEST(Tomography, FlipsMixOutcomes) {
    const auto p = apply_readout_flips({1.0, 0.0, 0.0, 0.0}, 2, 0.1);
    EXPECT_NEAR(p[0], 0.81, 1e-15);
    EXPECT_NEAR(p[1], 0.09, 1e-15);
    EXPECT_NEAR(p[3], 0.01, 1e-15);
}

TEST(Tomography, InfiniteShotReconstructionIsExact) {
    for (unsigned s = 0; s < 20; ++s) {
        const auto rho = random_density(4, 100 + s);
        std::map<std::string, std::vector<double>> probs;
        for (const auto &setting : tomography_settings(4)) {
            probs[setting.label()] = outcome_probabilities(rho, setting);
        }
        EXPECT_LT((reconstruct_from_probabilities(probs, 4) - rho.matrix()).cwiseAbs().maxCoeff(),
                  1e-10);
    }
}

TEST(Tomography, MissingSettingIsReported) {
    auto tables = simulate_tomography(ground_rho(), 0.0, 64, 1);
    tables.erase(tables.begin() + 5);
    EXPECT_THROW((void)reconstruct_state(tables), MissingSetting);
}

TEST(Tomography, MaximallyMixedInput) {
    const auto mixed = DensityMatrix::maximally_mixed(4);
    const auto rho = reconstruct_state(simulate_tomography(mixed, 0.0, 8192, 4));
    EXPECT_LT(qcore::trace_distance(rho, mixed), 0.05);
    EXPECT_TRUE(rho.report().valid(1e-10, 1e-9));
}

TEST(Tomography, ErrorScalesAsInverseSqrtShots) {
    const auto rho = ground_rho();
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::int64_t shots : {512, 2048, 8192}) {
        double sum = 0.0;
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            sum += qcore::trace_distance(reconstruct_state(simulate_tomography(rho, 0.0, shots, seed)),
                                         rho);
        }
        lx.push_back(std::log(static_cast<double>(shots)));
        ly.push_back(std::log(sum / 4.0));
    }
    const double slope = (ly[2] - ly[0]) / (lx[2] - lx[0]);
    EXPECT_NEAR(slope, -0.5, 0.1);
}

TEST(Tomography, RawEstimatorIsUnbiased) {
    const auto rho = ground_rho();
    const int seeds = 50;
    const auto d = static_cast<Eigen::Index>(16);
    CMatrix sum = CMatrix::Zero(d, d);
    Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(d, d);
    for (int s = 0; s < seeds; ++s) {
        const CMatrix est = reconstruct_matrix(
            simulate_tomography(rho, 0.0, 512, static_cast<std::uint64_t>(s)), {false});
        sum += est;
        sum_sq += est.real().cwiseAbs2();
    }
    // Many entries are compared at once, so single 3-sigma excursions are
    // expected; the aggregate z^2 over the upper triangle must stay near 1.
    const CMatrix mean = sum / seeds;
    double z2 = 0.0;
    int entries = 0;
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = r; c < d; ++c) {
            const double m = mean(r, c).real();
            const double var = sum_sq(r, c) / seeds - m * m;
            const double se = std::sqrt(std::max(var, 0.0) / seeds);
            const double dev = std::abs(m - rho.matrix()(r, c).real());
            EXPECT_LE(dev, 4.0 * se + 1e-12) << r << "," << c;
            if (se > 0.0) {
                z2 += (dev / se) * (dev / se);
                ++entries;
            }
        }
    }
    ASSERT_GT(entries, 0);
    EXPECT_LT(z2 / entries, 1.6);
}

TEST(CountsTable, JsonRoundTrip) {
    CountsTable t{"XZYX", 10, {{"0000", 7}, {"1011", 3}}};
    EXPECT_NO_THROW(t.validate());
    const auto text = t.to_json();
    EXPECT_EQ(text, R"({"setting":"XZYX","shots":10,"counts":{"0000":7,"1011":3}})");
    const auto back = CountsTable::from_json(text);
    EXPECT_EQ(back.setting, t.setting);
    EXPECT_EQ(back.shots, 10);
    EXPECT_EQ(back.counts, t.counts);
    EXPECT_THROW((void)CountsTable::from_json("{\"setting\": 3}"), ParseError);
    EXPECT_THROW((void)CountsTable::from_json("not json"), ParseError);
    CountsTable bad{"XZYX", 11, {{"0000", 7}}};
    EXPECT_THROW(bad.validate(), InvalidParams);
}

TEST(Tomography, DeterministicForSeed) {
    const auto rho = ground_rho();
    const auto a = simulate_tomography(rho, 0.01, 256, 9);
    const auto b = simulate_tomography(rho, 0.01, 256, 9);
    ASSERT_EQ(a.size(), 81U);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].counts, b[i].counts);
    }
}
