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

#include "dqpt/schwinger/winding.hpp"

#include <cmath>
#include <string>

#include "dqpt/qcore/error.hpp"

namespace dqpt::schwinger {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) {
        throw InvalidParams("linspace needs at least two points");
    }
    std::vector<double> v(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        v[k] = lo + step * static_cast<double>(k);
    }
    v.back() = hi;
    return v;
}

PhaseField analytic_phase_field(double m, std::span<const double> J_values,
                                std::span<const double> t_values) {
    PhaseField f;
    f.m = m;
    f.J_values.assign(J_values.begin(), J_values.end());
    f.t_values.assign(t_values.begin(), t_values.end());
    f.phase.reserve(J_values.size() * t_values.size());
    f.echo.reserve(J_values.size() * t_values.size());
    for (double J : J_values) {
        ModelParams p;
        p.m = m;
        p.J = J;
        p.validate();
        for (double t : t_values) {
            const Complex g = analytic_amplitude(p, t);
            f.phase.push_back(wrap_phase(std::arg(g)));
            f.echo.push_back(std::norm(g));
        }
    }
    return f;
}

WindingLoop::WindingLoop(std::vector<GridPoint> points) : points_(std::move(points)) {
    if (points_.size() < 5) {
        throw InvalidParams("a winding loop needs at least four steps");
    }
    if (points_.front() != points_.back()) {
        throw InvalidParams("winding loop is not closed");
    }
    for (std::size_t k = 1; k < points_.size(); ++k) {
        const auto [i0, j0] = points_[k - 1];
        const auto [i1, j1] = points_[k];
        const std::size_t di = i0 > i1 ? i0 - i1 : i1 - i0;
        const std::size_t dj = j0 > j1 ? j0 - j1 : j1 - j0;
        if (di + dj != 1) {
            throw InvalidParams("winding loop steps must connect grid neighbours");
        }
    }
}

WindingLoop WindingLoop::rectangle(std::size_t i0, std::size_t j0, std::size_t i1,
                                   std::size_t j1) {
    if (i1 <= i0 || j1 <= j0) {
        throw InvalidParams("rectangle corners must be ordered lower-left, upper-right");
    }
    std::vector<GridPoint> pts;
    for (std::size_t i = i0; i < i1; ++i) {
        pts.emplace_back(i, j0);
    }
    for (std::size_t j = j0; j < j1; ++j) {
        pts.emplace_back(i1, j);
    }
    for (std::size_t i = i1; i > i0; --i) {
        pts.emplace_back(i, j1);
    }
    for (std::size_t j = j1; j > j0; --j) {
        pts.emplace_back(i0, j);
    }
    pts.emplace_back(i0, j0);
    return WindingLoop(std::move(pts));
}

int winding_number(const PhaseField &field, const WindingLoop &loop) {
    const auto &pts = loop.points();
    for (const auto &[i, j] : pts) {
        if (i >= field.nJ() || j >= field.nt()) {
            throw InvalidParams("winding loop leaves the phase-field grid");
        }
        if (field.echo_at(i, j) < kPhaseEpsilon) {
            throw UndefinedPhase("phase undefined at J = " + std::to_string(field.J_values[i]) +
                                 ", t = " + std::to_string(field.t_values[j]));
        }
    }
    double total = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const double d = field.phase_at(pts[k].first, pts[k].second) -
                         field.phase_at(pts[k - 1].first, pts[k - 1].second);
        total += wrap_phase(d);
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

std::vector<PlaquetteWinding> plaquette_windings(const PhaseField &field) {
    std::vector<PlaquetteWinding> out;
    if (field.nJ() < 2 || field.nt() < 2) {
        return out;
    }
    out.reserve((field.nJ() - 1) * (field.nt() - 1));
    for (std::size_t i = 0; i + 1 < field.nJ(); ++i) {
        for (std::size_t j = 0; j + 1 < field.nt(); ++j) {
            PlaquetteWinding w{i, j, std::nullopt};
            try {
                w.nu = winding_number(field, WindingLoop::plaquette(i, j));
            } catch (const UndefinedPhase &) {
                // reported as undefined, the sweep continues
            }
            out.push_back(w);
        }
    }
    return out;
}

} // namespace dqpt::schwinger
