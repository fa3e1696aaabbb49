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

#include "dqpt/fit/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "dqpt/qcore/error.hpp"

namespace dqpt::fit {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string target_to_json(const noise::Trajectory &tr) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < tr.size(); ++i) {
        ordered_json entry;
        entry["t"] = tr.times[i];
        ordered_json rho = ordered_json::array();
        const auto &m = tr.states[i].matrix();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                rho.push_back({m(r, c).real(), m(r, c).imag()});
            }
        }
        entry["rho"] = std::move(rho);
        arr.push_back(std::move(entry));
    }
    return arr.dump();
}

noise::Trajectory target_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("target file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("target file must be a non-empty JSON array");
    }
    noise::Trajectory tr;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string where = "target entry " + std::to_string(i);
        const auto &e = doc[i];
        if (!e.is_object() || !e.contains("t") || !e.contains("rho")) {
            throw ParseError(where + ": expected an object with \"t\" and \"rho\"");
        }
        if (!e["t"].is_number()) {
            throw ParseError(where + ": \"t\" must be a number");
        }
        const auto &rho = e["rho"];
        if (!rho.is_array()) {
            throw ParseError(where + ": \"rho\" must be an array");
        }
        const int n = qcore::qubits_for_dim(static_cast<std::size_t>(std::lround(
            std::sqrt(static_cast<double>(rho.size())))));
        const auto dim = n < 1 ? 0 : static_cast<Eigen::Index>(dim_of(n));
        if (n < 1 || static_cast<std::size_t>(dim * dim) != rho.size()) {
            throw ParseError(where + ": \"rho\" has " + std::to_string(rho.size()) +
                             " entries, expected 4^n (256 for 4 qubits)");
        }
        CMatrix m(dim, dim);
        for (std::size_t k = 0; k < rho.size(); ++k) {
            const auto &pair = rho[k];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number()) {
                throw ParseError(where + ": rho[" + std::to_string(k) +
                                 "] must be a [re, im] pair of numbers");
            }
            m(static_cast<Eigen::Index>(k) / dim, static_cast<Eigen::Index>(k) % dim) =
                Complex(pair[0].get<double>(), pair[1].get<double>());
        }
        const auto state = qcore::unchecked_density(m, n);
        if (!state.report().valid(1e-6, 1e-6)) {
            throw ParseError(where + ": rho is not a valid density matrix");
        }
        if (!tr.states.empty() && tr.states.front().n_qubits() != n) {
            throw ParseError(where + ": qubit count differs from entry 0");
        }
        const double t = e["t"].get<double>();
        if (!tr.times.empty() && !(t > tr.times.back())) {
            throw ParseError(where + ": times must be strictly increasing");
        }
        tr.times.push_back(t);
        tr.states.push_back(qcore::unchecked_density(0.5 * (m + m.adjoint()), n));
    }
    tr.dt = tr.times.size() > 1 ? tr.times[1] - tr.times[0] : 0.0;
    return tr;
}

std::string surface_to_csv(const DistanceSurface &s) {
    std::string out = "axis1,axis2,value\n";
    for (int i = 0; i < s.grid.axis1.count; ++i) {
        for (int j = 0; j < s.grid.axis2.count; ++j) {
            out += format_g12(s.grid.axis1.value(i));
            out += ',';
            out += format_g12(s.grid.axis2.value(j));
            out += ',';
            out += format_g12(s.value(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string fit_result_to_json(const FitResult &r) {
    ordered_json j;
    j["params"] = ordered_json::object();
    j["params"][r.axis1_name] = r.p1;
    j["params"][r.axis2_name] = r.p2;
    j["min"] = r.min;
    if (r.cell1 == r.cell2) {
        j["cell"] = r.cell1;
    } else {
        j["cell"] = {r.cell1, r.cell2};
    }
    return j.dump();
}

} // namespace dqpt::fit
