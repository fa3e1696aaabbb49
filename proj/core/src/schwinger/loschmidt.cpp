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

#include "dqpt/schwinger/loschmidt.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "dqpt/qcore/error.hpp"

namespace dqpt::schwinger {

RateResult rate_function(std::span<const double> echo, int n_dof) {
    if (n_dof < 1) {
        throw InvalidParams("n_dof must be positive");
    }
    RateResult r;
    r.rate.reserve(echo.size());
    r.clamped.reserve(echo.size());
    for (double l : echo) {
        const bool clamp = !(l >= kEchoFloor);
        const double v = clamp ? kEchoFloor : std::min(l, 1.0);
        r.rate.push_back(-std::log(v) / n_dof + 0.0); // no negative zero
        r.clamped.push_back(clamp);
    }
    return r;
}

double wrap_phase(double angle) noexcept {
    double a = std::remainder(angle, 2.0 * kPi); // [-pi, pi]
    if (a <= -kPi) {
        a += 2.0 * kPi;
    }
    return a;
}

LoschmidtSeries LoschmidtSeries::from_amplitudes(std::vector<double> times,
                                                 std::vector<Complex> amplitude, int n_dof) {
    if (times.size() != amplitude.size()) {
        throw DimensionMismatch("times and amplitudes differ in length");
    }
    LoschmidtSeries s;
    s.n_dof = n_dof;
    s.echo.reserve(times.size());
    s.phase.reserve(times.size());
    for (const Complex &g : amplitude) {
        s.echo.push_back(std::norm(g));
        s.phase.push_back(wrap_phase(std::arg(g)));
    }
    auto rr = rate_function(s.echo, n_dof);
    s.rate = std::move(rr.rate);
    s.clamped = std::move(rr.clamped);
    s.times = std::move(times);
    s.amplitude = std::move(amplitude);
    return s;
}

LoschmidtSeries LoschmidtSeries::from_echo(std::vector<double> times, std::vector<double> echo,
                                           int n_dof) {
    if (times.size() != echo.size()) {
        throw DimensionMismatch("times and echo differ in length");
    }
    LoschmidtSeries s;
    s.n_dof = n_dof;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.amplitude.assign(times.size(), Complex{nan, nan});
    s.phase.assign(times.size(), nan);
    auto rr = rate_function(echo, n_dof);
    s.rate = std::move(rr.rate);
    s.clamped = std::move(rr.clamped);
    s.echo = std::move(echo);
    s.times = std::move(times);
    return s;
}

Complex analytic_amplitude(const ModelParams &p, double t) {
    // With c = 2a_g^2 - 2b_g^2 = m/E the ground state splits into the
    // eigenstates of H(-m, J) with weights c^2 (energy +E) and 1 - c^2 (-E).
    const Spectrum s = diagonalize(p.pre_quench());
    const double c = 2.0 * s.a_g * s.a_g - 2.0 * s.b_g * s.b_g;
    const double w_high = c * c;
    const double w_low = 1.0 - w_high;
    const double e_high = s.gbar.energy;
    const double e_low = s.g.energy;
    return w_high * std::exp(-kI * (e_high * t)) + w_low * std::exp(-kI * (e_low * t));
}

LoschmidtSeries analytic_loschmidt(const ModelParams &p, std::span<const double> times,
                                   int n_dof) {
    p.validate();
    std::vector<double> ts(times.begin(), times.end());
    std::vector<Complex> amps;
    amps.reserve(ts.size());
    for (double t : ts) {
        if (t < 0.0) {
            throw InvalidParams("Loschmidt times must be non-negative");
        }
        amps.push_back(analytic_amplitude(p, t));
    }
    return LoschmidtSeries::from_amplitudes(std::move(ts), std::move(amps), n_dof);
}

Complex exact_amplitude(const ModelParams &p, double t) {
    const Matrix4 H0 = build_physical_hamiltonian(p.pre_quench());
    const Matrix4 Hq = build_physical_hamiltonian(p.quenched());
    Eigen::SelfAdjointEigenSolver<Matrix4> pre(H0);
    const Vector4 ground = pre.eigenvectors().col(0);
    Eigen::SelfAdjointEigenSolver<Matrix4> post(Hq);
    const Vector4 overlaps = post.eigenvectors().transpose() * ground;
    Complex g{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        g += overlaps(k) * overlaps(k) * std::exp(-kI * (post.eigenvalues()(k) * t));
    }
    return g;
}

double dqpt_time(const ModelParams &p, int j) {
    p.validate();
    if (j < 0) {
        throw InvalidParams("DQPT index must be non-negative");
    }
    if (std::abs(p.J - p.m) > 1e-12 * std::max(1.0, p.m)) {
        throw NoExactDqpt("echo zeros are exact only for J = m (got m = " + std::to_string(p.m) +
                          ", J = " + std::to_string(p.J) + ")");
    }
    return (2.0 * j + 1.0) * kPi / (2.0 * p.gap_energy());
}

std::vector<double> time_grid(double t0, double t1, double dt) {
    if (!(dt > 0.0)) {
        throw InvalidParams("time step must be positive");
    }
    std::vector<double> ts;
    const auto n = static_cast<long>(std::floor((t1 - t0) / dt + 1e-9));
    ts.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        ts.push_back(t0 + static_cast<double>(i) * dt);
    }
    return ts;
}

} // namespace dqpt::schwinger
