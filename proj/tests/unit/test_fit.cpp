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

#include <gtest/gtest.h>
#include <json.hpp>

#include "dqpt/fit/io.hpp"
#include "dqpt/fit/objective.hpp"
#include "dqpt/fit/sweep.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"

using namespace dqpt;
using namespace dqpt::fit;
using noise::NoiseModelSpec;
using noise::NoisePreset;

namespace {

SweepProgram program(std::size_t k = 3) {
    SweepProgram p;
    p.k = k;
    return p;
}

DistanceSurface synthetic_surface(int count, double (*f)(double, double)) {
    DistanceSurface s;
    s.grid = GridSpec::make(NoisePreset::SplitXz, 0.0, 0.0, 1e-3, count);
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            s.values.push_back(f(s.grid.axis1.value(i), s.grid.axis2.value(j)));
        }
    }
    return s;
}

} // namespace

TEST(Objective, IdentityAndReduction) {
    const auto tr = simulate_program(program(5), NoiseModelSpec::split_xz(0.01, 0.02));
    for (std::size_t k = 1; k <= 5; ++k) {
        EXPECT_EQ(averaged_trace_distance(tr, tr, k), 0.0);
    }
    const auto clean = simulate_program(program(5), NoiseModelSpec::noiseless());
    EXPECT_NEAR(averaged_trace_distance(tr, clean, 1),
                qcore::trace_distance(tr.states[0], clean.states[0]), 1e-15);
    EXPECT_THROW((void)averaged_trace_distance(tr, clean, 0), InvalidParams);
    EXPECT_THROW((void)averaged_trace_distance(tr, clean, 6), InvalidParams);
    auto shifted = clean;
    shifted.times[1] += 1e-6;
    EXPECT_THROW((void)averaged_trace_distance(tr, shifted, 3), InvalidParams);
}

TEST(Objective, PositiveAndMonotoneInK) {
    const auto noisy = simulate_program(program(6), NoiseModelSpec::abc_shared(0.011, 0.0, 0.015));
    const auto clean = simulate_program(program(6), NoiseModelSpec::noiseless());
    EXPECT_GT(averaged_trace_distance(noisy, clean, 3), 0.0);
    double prev = 0.0;
    for (std::size_t k = 1; k <= 6; ++k) {
        const double d = averaged_trace_distance(noisy, clean, k);
        EXPECT_GE(d, prev - 1e-15) << k;
        prev = d;
    }
}

TEST(Sweep, SelfMatchAtGridPoint) {
    const auto grid = GridSpec::make(NoisePreset::SplitXz, 0.006, 0.010, 1e-3, 5);
    const auto target = simulate_program(program(), grid.model_at(3, 1));
    const auto surface = grid_sweep(grid, target, program(), "self");
    const auto fit = locate_minimum(surface);
    EXPECT_EQ(fit.i, 3);
    EXPECT_EQ(fit.j, 1);
    EXPECT_LT(fit.min, 1e-9);
    EXPECT_NEAR(fit.p1, 0.009, 1e-15);
    EXPECT_NEAR(fit.p2, 0.011, 1e-15);
    EXPECT_EQ(fit.axis1_name, "p1");
    EXPECT_EQ(surface.provenance.target_id, "self");
    for (double v : surface.values) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Sweep, ZeroNoiseTargetFindsOrigin) {
    const auto grid = GridSpec::make(NoisePreset::AbcShared, 0.0, 0.0, 1e-3, 4);
    EXPECT_EQ(grid.axis1.name, "px");
    EXPECT_EQ(grid.axis2.name, "pz");
    const auto target = simulate_program(program(), NoiseModelSpec::noiseless());
    const auto fit = locate_minimum(grid_sweep(grid, target, program()));
    EXPECT_EQ(fit.i, 0);
    EXPECT_EQ(fit.j, 0);
    EXPECT_LT(fit.min, 1e-12);
}

TEST(Sweep, OffGridRecoveryWithinOneCell) {
    auto nm = NoiseModelSpec::abc_shared(0.0107, 0.0, 0.0063);
    const auto target = simulate_program(program(), nm);
    const auto grid = GridSpec::make(NoisePreset::AbcShared, 0.005, 0.0, 1e-3, 11);
    const auto fit = locate_minimum(grid_sweep(grid, target, program()));
    EXPECT_LE(std::abs(fit.p1 - 0.0107), 1e-3 + 1e-12);
    EXPECT_LE(std::abs(fit.p2 - 0.0063), 1e-3 + 1e-12);
}

TEST(Sweep, WorkerCountDoesNotChangeSurface) {
    const auto grid = GridSpec::make(NoisePreset::SplitXyz, 0.0, 0.0, 2e-3, 3);
    auto prog = program();
    prog.method = SweepMethod::Sampled;
    prog.realizations = 8;
    prog.seed = 3;
    const auto target = simulate_program(program(), NoiseModelSpec::split_xyz(0.002, 0.002));
    prog.workers = 1;
    const auto a = grid_sweep(grid, target, prog);
    prog.workers = 3;
    const auto b = grid_sweep(grid, target, prog);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.provenance.realizations, 8);
}

TEST(Sweep, SplitXzMatchesSharedWithoutY) {
    const auto a = simulate_program(program(), NoiseModelSpec::split_xz(0.01, 0.01));
    auto shared = NoiseModelSpec::abc_shared(0.01, 0.0, 0.01);
    const auto b = simulate_program(program(), shared);
    EXPECT_LT(averaged_trace_distance(a, b, 3), 1e-14);
}

TEST(Sweep, RejectsInvalidGrids) {
    EXPECT_THROW(GridSpec::make(NoisePreset::SplitXz, 0.0, 0.0, 0.0, 3).validate(), InvalidParams);
    EXPECT_THROW(GridSpec::make(NoisePreset::SplitXz, 0.0, 0.0, 1e-3, 0).validate(), InvalidParams);
    EXPECT_THROW(GridSpec::make(NoisePreset::SplitXz, 0.45, 0.0, 0.1, 3).validate(),
                 InvalidProbability);
}

TEST(Minimum, ConstantSurfaceTiesToOrigin) {
    const auto s = synthetic_surface(4, [](double, double) { return 0.25; });
    const auto fit = locate_minimum(s);
    EXPECT_EQ(fit.i, 0);
    EXPECT_EQ(fit.j, 0);
    EXPECT_TRUE(fit.tie);
    EXPECT_EQ(fit.valley.size(), 16U);
}

TEST(Minimum, UniqueMinimum) {
    const auto s = synthetic_surface(
        7, [](double x, double y) { return std::hypot(x - 0.004, y - 0.002); });
    const auto fit = locate_minimum(s);
    EXPECT_EQ(fit.i, 4);
    EXPECT_EQ(fit.j, 2);
    EXPECT_FALSE(fit.tie);
    EXPECT_DOUBLE_EQ(fit.min, s.value(4, 2));
    EXPECT_DOUBLE_EQ(fit.cell1, 1e-3);
    EXPECT_THROW((void)locate_minimum(DistanceSurface{}), InvalidParams);
}

TEST(Minimum, ElongatedValleyListsFlatCells) {
    // Flat along x + y = 0.01, steep across it.
    const auto f = [](double x, double y) {
        const double u = (x + y - 0.01) * 1e3;
        const double v = (x - y) * 1e3;
        return 0.1 + 0.5 * u * u + 1e-5 * v * v;
    };
    DistanceSurface s;
    s.grid = GridSpec::make(NoisePreset::SplitXz, 0.0, 0.0, 1e-3, 11);
    for (int i = 0; i < 11; ++i) {
        for (int j = 0; j < 11; ++j) {
            s.values.push_back(f(s.grid.axis1.value(i), s.grid.axis2.value(j)));
        }
    }
    const auto fit = locate_minimum(s);
    EXPECT_EQ(fit.i, 5);
    EXPECT_EQ(fit.j, 5);
    std::vector<std::pair<int, int>> expected;
    for (int i = 0; i < 11; ++i) {
        for (int j = 0; j < 11; ++j) {
            if (s.value(i, j) - fit.min <= kValleyTolerance) {
                expected.emplace_back(i, j);
            }
        }
    }
    EXPECT_EQ(fit.valley, expected);
    EXPECT_GE(fit.valley.size(), 5U);
    for (const auto &[i, j] : fit.valley) {
        EXPECT_EQ(i + j, 10);
    }
}

TEST(Interpolate, Bilinear) {
    const auto s = synthetic_surface(5, [](double x, double y) { return 2.0 * x + 3.0 * y + 1.0; });
    EXPECT_NEAR(interpolate(s, 0.0015, 0.0025), 2.0 * 0.0015 + 3.0 * 0.0025 + 1.0, 1e-14);
    EXPECT_NEAR(interpolate(s, 0.004, 0.004), s.value(4, 4), 1e-14);
    EXPECT_THROW((void)interpolate(s, 0.0041, 0.0), InvalidParams);
    EXPECT_THROW((void)interpolate(s, -1e-6, 0.0), InvalidParams);
}

TEST(Io, FormatG12) {
    EXPECT_EQ(format_g12(0.1), "0.1");
    EXPECT_EQ(format_g12(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_g12(-0.0), "0");
    EXPECT_EQ(format_g12(1e-3 * 7), "0.007");
}

TEST(Io, SurfaceCsv) {
    const auto s = synthetic_surface(2, [](double x, double y) { return x + y; });
    EXPECT_EQ(surface_to_csv(s), "axis1,axis2,value\n0,0,0\n0,0.001,0.001\n0.001,0,0.001\n"
                                 "0.001,0.001,0.002\n");
}

TEST(Io, FitResultJson) {
    FitResult r;
    r.axis1_name = "p1";
    r.axis2_name = "p2";
    r.p1 = 0.0075;
    r.p2 = 0.015;
    r.min = 0.0977;
    r.cell1 = r.cell2 = 1e-3;
    const auto j = nlohmann::json::parse(fit_result_to_json(r));
    EXPECT_DOUBLE_EQ(j["params"]["p1"].get<double>(), 0.0075);
    EXPECT_DOUBLE_EQ(j["min"].get<double>(), 0.0977);
    EXPECT_DOUBLE_EQ(j["cell"].get<double>(), 1e-3);
    r.cell2 = 2e-3;
    EXPECT_TRUE(nlohmann::json::parse(fit_result_to_json(r))["cell"].is_array());
}

TEST(Io, TargetRoundTrip) {
    const auto tr = simulate_program(program(), NoiseModelSpec::split_xz(0.01, 0.02));
    const auto back = target_from_json(target_to_json(tr));
    ASSERT_EQ(back.size(), 3U);
    EXPECT_NEAR(back.dt, 0.1, 1e-15);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(back.times[i], tr.times[i]);
        EXPECT_LT((back.states[i].matrix() - tr.states[i].matrix()).cwiseAbs().maxCoeff(), 1e-15);
    }
    const auto j = nlohmann::json::parse(target_to_json(tr));
    EXPECT_EQ(j[0]["rho"].size(), 256U);
}

TEST(Io, TargetErrorsNameTheEntry) {
    EXPECT_THROW((void)target_from_json("[]"), ParseError);
    EXPECT_THROW((void)target_from_json("{"), ParseError);
    const auto tr = simulate_program(program(), NoiseModelSpec::noiseless());
    auto j = nlohmann::json::parse(target_to_json(tr));
    j[1]["rho"][0] = {5.0, 0.0};
    try {
        (void)target_from_json(j.dump());
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("entry 1"), std::string::npos) << e.what();
    }
    auto k = nlohmann::json::parse(target_to_json(tr));
    k[2]["t"] = 0.0;
    EXPECT_THROW((void)target_from_json(k.dump()), ParseError);
    auto short_rho = nlohmann::json::parse(target_to_json(tr));
    short_rho[0]["rho"].erase(0);
    EXPECT_THROW((void)target_from_json(short_rho.dump()), ParseError);
}

TEST(Io, InjectedTomographyNoiseIsSmallAndDeterministic) {
    const auto tr = simulate_program(program(), NoiseModelSpec::split_xz(0.01, 0.01));
    const auto a = inject_tomography_noise(tr, 8192, 0.0, 4);
    const auto b = inject_tomography_noise(tr, 8192, 0.0, 4);
    EXPECT_EQ(a.times, tr.times);
    const double d = averaged_trace_distance(a, tr, 3);
    EXPECT_GT(d, 0.0);
    EXPECT_LT(d, 0.1);
    EXPECT_EQ(averaged_trace_distance(a, b, 3), 0.0);
}
