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

#include "dqpt/cli/commands.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "dqpt/circuits/builders.hpp"
#include "dqpt/circuits/qasm.hpp"
#include "dqpt/circuits/schedule.hpp"
#include "dqpt/cli/svg.hpp"
#include "dqpt/fit/io.hpp"
#include "dqpt/fit/objective.hpp"
#include "dqpt/noise/density_sim.hpp"
#include "dqpt/noise/tomography.hpp"
#include "dqpt/noise/trajectories.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"
#include "dqpt/qcore/random.hpp"
#include "dqpt/schwinger/loschmidt.hpp"
#include "dqpt/schwinger/winding.hpp"

namespace dqpt::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kRoundTripTolerance = 1e-10;

std::string parity_name(schwinger::Parity p) {
    return p == schwinger::Parity::Even ? "even" : "odd";
}

ordered_json eigenstate_json(const schwinger::EigenState &s) {
    ordered_json j;
    j["label"] = std::string(s.label);
    j["energy"] = s.energy;
    j["parity"] = parity_name(s.parity);
    ordered_json amps = ordered_json::object();
    for (std::size_t k = 0; k < 4; ++k) {
        const auto ps = schwinger::kPhysStates[k];
        amps[std::string(schwinger::name(ps))] = s.amplitudes(static_cast<Eigen::Index>(k));
    }
    j["amplitudes"] = std::move(amps);
    return j;
}

std::vector<double> step_times(const RunConfig &c) {
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(c.steps) + 1);
    for (int k = 0; k <= c.steps; ++k) {
        ts.push_back(c.dt * k);
    }
    return ts;
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

void maybe_plot(const RunConfig &c, CommandOutput &out, const std::string &name,
                std::string svg_text) {
    if (c.plots) {
        out.files.emplace_back(name, std::move(svg_text));
    }
}

/// Overlaps of the recorded states with the four eigenstates of H(m, J).
struct Projections {
    std::vector<double> g, e, ebar, gbar;
    std::vector<Complex> amplitude; // <g|psi>, pure runs only
};

Projections project_pure(const schwinger::Spectrum &spec,
                         const std::vector<qcore::StateVector> &states) {
    const auto g = schwinger::embed(spec.g.amplitudes);
    const auto e = schwinger::embed(spec.e.amplitudes);
    const auto eb = schwinger::embed(spec.ebar.amplitudes);
    const auto gb = schwinger::embed(spec.gbar.amplitudes);
    Projections p;
    for (const auto &psi : states) {
        p.amplitude.push_back(g.inner(psi));
        p.g.push_back(qcore::overlap_probability(g, psi));
        p.e.push_back(qcore::overlap_probability(e, psi));
        p.ebar.push_back(qcore::overlap_probability(eb, psi));
        p.gbar.push_back(qcore::overlap_probability(gb, psi));
    }
    return p;
}

Projections project_mixed(const schwinger::Spectrum &spec, const noise::Trajectory &tr) {
    const auto g = schwinger::embed(spec.g.amplitudes);
    const auto e = schwinger::embed(spec.e.amplitudes);
    const auto eb = schwinger::embed(spec.ebar.amplitudes);
    const auto gb = schwinger::embed(spec.gbar.amplitudes);
    Projections p;
    for (const auto &rho : tr.states) {
        p.g.push_back(qcore::fidelity(g, rho));
        p.e.push_back(qcore::fidelity(e, rho));
        p.ebar.push_back(qcore::fidelity(eb, rho));
        p.gbar.push_back(qcore::fidelity(gb, rho));
    }
    return p;
}

noise::Trajectory simulate_noisy(const RunConfig &c, const circuits::Circuit &circ, bool sampled) {
    const auto nm = c.noise_model();
    noise::Trajectory tr =
        sampled ? noise::sample_trajectories(circ, nm, qcore::StateVector::basis(4, 0),
                                             c.realizations, c.seed, {1, c.workers})
                : noise::run_density_matrix(circ, nm, qcore::DensityMatrix::basis(4, 0));
    tr.m = c.m;
    tr.J = c.J;
    return tr;
}

} // namespace

CommandOutput cmd_spectrum(const RunConfig &c) {
    const auto spec = schwinger::diagonalize(c.params());
    ordered_json j;
    j["m"] = c.m;
    j["J"] = c.J;
    j["eigenvalues"] = spec.eigenvalues();
    ordered_json states = ordered_json::array();
    for (const auto *s : spec.states()) {
        states.push_back(eigenstate_json(*s));
    }
    j["eigenstates"] = std::move(states);
    j["a_g"] = spec.a_g;
    j["b_g"] = spec.b_g;
    if (c.J > 0.0) {
        j["p_g"] = spec.p_g();
    }
    const auto ev = spec.eigenvalues();
    CommandOutput out;
    out.files.emplace_back("spectrum.json", dump(j));
    out.message = fmt::format("eigenvalues {:.6f} {:.6f} {:.6f} {:.6f}\na_g = {:.3f}, b_g = {:.3f}\n",
                              ev[0], ev[1], ev[2], ev[3], spec.a_g, spec.b_g);
    return out;
}

CommandOutput cmd_evolve(const RunConfig &c) {
    const auto p = c.params();
    const auto spec = schwinger::diagonalize(p);
    const auto times = step_times(c);
    CommandOutput out;

    schwinger::LoschmidtSeries series;
    Projections proj;
    switch (c.mode) {
    case EvolveMode::Analytic: {
        series = schwinger::analytic_loschmidt(p, times);
        // The quench conserves parity, so the evolved state stays in span{g, gbar}.
        proj.g = series.echo;
        proj.e.assign(times.size(), 0.0);
        proj.ebar.assign(times.size(), 0.0);
        for (double echo : series.echo) {
            proj.gbar.push_back(std::max(0.0, 1.0 - echo));
        }
        break;
    }
    case EvolveMode::TrotterNoiseless: {
        const auto circ = circuits::build_evolution(p, c.dt, c.steps);
        proj = project_pure(spec, circuits::run_statevector_recorded(
                                      circ, qcore::StateVector::basis(4, 0)));
        series = schwinger::LoschmidtSeries::from_amplitudes(times, proj.amplitude);
        break;
    }
    case EvolveMode::TrotterNoisy:
    case EvolveMode::TrotterSampled: {
        const auto circ = circuits::build_evolution(p, c.dt, c.steps);
        const auto tr = simulate_noisy(c, circ, c.mode == EvolveMode::TrotterSampled);
        proj = project_mixed(spec, tr);
        series = schwinger::LoschmidtSeries::from_echo(times, proj.g);
        out.files.emplace_back("trajectory.json", fit::target_to_json(tr));
        break;
    }
    }

    std::vector<SeriesRow> rows;
    for (std::size_t i = 0; i < times.size(); ++i) {
        rows.push_back({times[i], series.echo[i], proj.e[i], proj.ebar[i], proj.gbar[i],
                        series.phase[i], series.rate[i]});
    }
    auto csv = series_to_csv(rows);
    validate_series_csv(csv, rows.size());
    out.files.insert(out.files.begin(), {"series.csv", std::move(csv)});
    maybe_plot(c, out, "series.svg",
               svg::line_plot(fmt::format("Loschmidt echo ({}, m={}, J={})", to_string(c.mode),
                                          c.m, c.J),
                              "t", "probability",
                              {{"echo", times, series.echo},
                               {"|<gbar|psi>|^2", times, proj.gbar},
                               {"|<e|psi>|^2", times, proj.e},
                               {"|<ebar|psi>|^2", times, proj.ebar}}));
    const auto min_it = std::min_element(series.echo.begin(), series.echo.end());
    out.message = fmt::format("{} rows, mode {}, minimum echo {:.6g} at t = {:.6g}\n", rows.size(),
                              to_string(c.mode), *min_it,
                              times[static_cast<std::size_t>(min_it - series.echo.begin())]);
    return out;
}

CommandOutput cmd_fit(const RunConfig &c) {
    if (c.target.empty()) {
        throw UsageError("fit needs a target trajectory file (config key 'target' or --target)");
    }
    const auto target = fit::target_from_json(read_file(c.target));
    const auto k = static_cast<std::size_t>(c.k);
    if (target.size() < k) {
        throw DataError(fmt::format("target has {} entries, fit needs k = {}", target.size(), k));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (std::abs(target.times[i] - c.dt * static_cast<double>(i)) > 1e-9) {
            throw DataError(fmt::format("target entry {}: t = {} does not match step {} * dt = {}",
                                        i, target.times[i], i, c.dt * static_cast<double>(i)));
        }
    }

    const auto grid = fit::GridSpec::make(c.preset, c.grid_start1, c.grid_start2, c.grid_step,
                                          c.grid_count, c.py);
    try {
        grid.validate();
    } catch (const InvalidProbability &e) {
        throw UsageError(std::string("grid: ") + e.what());
    }
    fit::SweepProgram prog;
    prog.params = c.params();
    prog.dt = c.dt;
    prog.k = k;
    prog.method = c.fit_method;
    prog.realizations = c.realizations;
    prog.seed = c.seed;
    prog.workers = c.workers;

    const auto surface = fit::grid_sweep(grid, target, prog, c.target);
    const auto result = fit::locate_minimum(surface);

    CommandOutput out;
    auto csv = fit::surface_to_csv(surface);
    validate_surface_csv(csv, grid.size());
    out.files.emplace_back("surface.csv", std::move(csv));
    out.files.emplace_back("fit.json", fit::fit_result_to_json(result) + "\n");

    ordered_json report;
    report["target"] = c.target;
    report["preset"] = std::string(noise::to_string(c.preset));
    report["method"] = c.fit_method == fit::SweepMethod::Exact ? "exact" : "sampled";
    report["realizations"] = surface.provenance.realizations;
    report["seed"] = c.seed;
    report["k"] = k;
    report["grid"] = {{"axis1", grid.axis1.name},
                      {"axis2", grid.axis2.name},
                      {"start1", grid.axis1.start},
                      {"start2", grid.axis2.start},
                      {"step", c.grid_step},
                      {"count", c.grid_count},
                      {"fixed", c.py}};
    report["minimum"] = {{"i", result.i}, {"j", result.j}, {"p1", result.p1},
                         {"p2", result.p2}, {"value", result.min}, {"tie", result.tie}};
    ordered_json valley = ordered_json::array();
    for (const auto &[i, j] : result.valley) {
        valley.push_back({{"i", i}, {"j", j}, {"value", surface.value(i, j)}});
    }
    report["valley"] = std::move(valley);
    out.files.emplace_back("fit_report.json", dump(report));

    std::vector<double> xs;
    std::vector<double> ys;
    for (int i = 0; i < grid.axis1.count; ++i) {
        xs.push_back(grid.axis1.value(i));
    }
    for (int j = 0; j < grid.axis2.count; ++j) {
        ys.push_back(grid.axis2.value(j));
    }
    maybe_plot(c, out, "surface.svg",
               svg::heatmap("Averaged trace distance", grid.axis1.name, grid.axis2.name, xs, ys,
                            surface.values, std::pair{result.p1, result.p2}));
    out.message = fmt::format("minimum {:.6g} at {} = {:.6g}, {} = {:.6g}{}\n", result.min,
                              result.axis1_name, result.p1, result.axis2_name, result.p2,
                              result.tie ? " (tie)" : "");
    return out;
}

CommandOutput cmd_winding(const RunConfig &c) {
    const auto Js = schwinger::linspace(c.J_min, c.J_max, static_cast<std::size_t>(c.J_count));
    const auto ts = schwinger::time_grid(c.t_min, c.t_max, c.t_step);
    if (ts.size() < 2) {
        throw UsageError("t window must contain at least two samples");
    }
    const auto field = schwinger::analytic_phase_field(c.m, Js, ts);
    const auto cells = schwinger::plaquette_windings(field);

    ordered_json vortices = ordered_json::array();
    ordered_json undefined = ordered_json::array();
    int total = 0;
    for (const auto &cell : cells) {
        if (!cell.nu) {
            undefined.push_back({{"i", cell.i}, {"j", cell.j}});
            continue;
        }
        total += *cell.nu;
        if (*cell.nu != 0) {
            vortices.push_back({{"i", cell.i},
                                {"j", cell.j},
                                {"J", {Js[cell.i], Js[cell.i + 1]}},
                                {"t", {ts[cell.j], ts[cell.j + 1]}},
                                {"nu", *cell.nu}});
        }
    }
    ordered_json j;
    j["m"] = c.m;
    j["J"] = {{"min", c.J_min}, {"max", c.J_max}, {"count", Js.size()}};
    j["t"] = {{"min", ts.front()}, {"max", ts.back()}, {"count", ts.size()}};
    j["cells"] = cells.size();
    j["vortices"] = vortices;
    j["undefined"] = undefined;
    j["total"] = total;
    try {
        j["boundary_nu"] = schwinger::winding_number(
            field, schwinger::WindingLoop::rectangle(0, 0, Js.size() - 1, ts.size() - 1));
    } catch (const UndefinedPhase &) {
        j["boundary_nu"] = nullptr;
    }

    CommandOutput out;
    out.files.emplace_back("winding.json", dump(j));
    maybe_plot(c, out, "phase.svg",
               svg::heatmap(fmt::format("Loschmidt phase (m={})", c.m), "J", "t", Js, ts,
                            field.phase));
    out.message = fmt::format("{} cells, {} with nonzero winding, {} undefined, total {}\n",
                              cells.size(), vortices.size(), undefined.size(), total);
    return out;
}

CommandOutput cmd_export(const RunConfig &c) {
    const auto p = c.params();
    const std::vector<std::pair<std::string, circuits::Circuit>> circuits_out = {
        {"ground_prep.qasm", circuits::build_ground_prep(p)},
        {"trotter_step.qasm", circuits::build_trotter_step(p.quenched(), c.dt)},
        {"evolution.qasm", circuits::build_evolution(p, c.dt, c.steps)},
    };
    CommandOutput out;
    for (const auto &[name, circ] : circuits_out) {
        auto text = circuits::export_qasm(circ);
        const auto back = circuits::import_qasm(text);
        const double err = (back.unitary() - circ.unitary()).cwiseAbs().maxCoeff();
        if (!(err < kRoundTripTolerance)) {
            throw DataError(fmt::format("{}: round trip deviates by {:.3g}", name, err));
        }
        out.files.emplace_back(name, std::move(text));
        out.message += fmt::format("{}: {} gates, round trip ok\n", name, circ.gate_count());
    }
    if (c.moments) {
        const auto &step = circuits_out[1].second;
        const auto &evo = circuits_out[2].second;
        const auto faithful = circuits::ScheduleMode::FigureFaithful;
        circuits::Circuit steps_only(4);
        for (int s = 0; s < c.steps; ++s) {
            steps_only.append(step);
        }
        out.message += fmt::format("figure_faithful depth per step: {}\n",
                                   circuits::moments(step, faithful).depth());
        out.message += fmt::format("figure_faithful depth for {} steps: {}\n", c.steps,
                                   circuits::moments(steps_only, faithful).depth());
        out.message += fmt::format("greedy depth for {} steps: {}\n", c.steps,
                                   circuits::moments(steps_only).depth());
        out.message += fmt::format("greedy depth including preparation: {}\n",
                                   circuits::moments(evo).depth());
    }
    return out;
}

CommandOutput cmd_tomo(const RunConfig &c) {
    const auto p = c.params();
    const auto circ = circuits::build_evolution(p, c.dt, c.steps);
    noise::Trajectory tr;
    double flip = 0.0;
    if (c.mode == EvolveMode::TrotterNoiseless) {
        tr = noise::run_density_matrix(circ, noise::NoiseModelSpec::noiseless(),
                                       qcore::DensityMatrix::basis(4, 0));
        tr.m = c.m;
        tr.J = c.J;
    } else {
        tr = simulate_noisy(c, circ, c.mode == EvolveMode::TrotterSampled);
        flip = c.noise_model().readout_flip;
    }
    const auto estimate = fit::inject_tomography_noise(tr, c.shots, flip, c.seed);
    const std::size_t last = tr.size() - 1;
    const auto tables = noise::simulate_tomography(tr.states[last], flip, c.shots,
                                                   qcore::make_stream(c.seed, last)());

    ordered_json counts = ordered_json::array();
    for (const auto &t : tables) {
        counts.push_back(ordered_json::parse(t.to_json()));
    }
    ordered_json report;
    report["shots"] = c.shots;
    report["settings"] = tables.size();
    report["readout_flip"] = flip;
    report["mode"] = std::string(to_string(c.mode));
    ordered_json rows = ordered_json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const double d = qcore::trace_distance(tr.states[i], estimate.states[i]);
        worst = std::max(worst, d);
        const auto &m = estimate.states[i].matrix();
        rows.push_back({{"t", tr.times[i]},
                        {"trace_distance", d},
                        {"purity", (m * m).trace().real()}});
    }
    report["states"] = std::move(rows);

    CommandOutput out;
    out.files.emplace_back("counts.json", dump(counts));
    out.files.emplace_back("target.json", fit::target_to_json(estimate));
    out.files.emplace_back("tomo.json", dump(report));
    out.message = fmt::format("{} states reconstructed from {} settings x {} shots, "
                              "max trace distance {:.4g}\n",
                              tr.size(), tables.size(), c.shots, worst);
    return out;
}

} // namespace dqpt::cli
