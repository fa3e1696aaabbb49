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

#include "dqpt/noise/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <json.hpp>

#include "dqpt/qcore/apply.hpp"
#include "dqpt/qcore/error.hpp"
#include "dqpt/qcore/metrics.hpp"
#include "dqpt/qcore/random.hpp"

namespace dqpt::noise {

TomographySetting::TomographySetting(std::string_view letters) : label_(letters) {
    if (label_.empty()) {
        throw ParseError("empty tomography setting");
    }
    for (char c : label_) {
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError("tomography setting '" + label_ + "' must use only X, Y, Z");
        }
    }
}

std::vector<TomographySetting> tomography_settings(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidParams("tomography needs 1.." + std::to_string(kMaxQubits) + " qubits");
    }
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    std::size_t total = 1;
    for (int q = 0; q < n_qubits; ++q) {
        total *= 3;
    }
    std::vector<TomographySetting> out;
    out.reserve(total);
    std::string label(static_cast<std::size_t>(n_qubits), 'X');
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t r = idx;
        for (int q = n_qubits - 1; q >= 0; --q) {
            label[static_cast<std::size_t>(q)] = kLetters[r % 3];
            r /= 3;
        }
        out.emplace_back(label);
    }
    return out;
}

namespace {

CMatrix basis_rotation(char letter) {
    const double r = 1.0 / std::sqrt(2.0);
    CMatrix h(2, 2);
    h << r, r, r, -r;
    if (letter == 'X') {
        return h;
    }
    CMatrix sdg = CMatrix::Zero(2, 2);
    sdg(0, 0) = 1.0;
    sdg(1, 1) = -kI;
    return h * sdg;
}

std::int64_t count_at(const CountsTable &t, const std::string &label) {
    const auto it = t.counts.find(label);
    return it == t.counts.end() ? 0 : it->second;
}

} // namespace

std::vector<double> outcome_probabilities(const qcore::DensityMatrix &rho,
                                          const TomographySetting &setting) {
    const int n = rho.n_qubits();
    if (static_cast<int>(setting.size()) != n) {
        throw DimensionMismatch("setting length differs from qubit count");
    }
    CMatrix m = rho.matrix();
    for (int q = 0; q < n; ++q) {
        const char c = setting[static_cast<std::size_t>(q)];
        if (c == 'Z') {
            continue;
        }
        const int t[1] = {q};
        qcore::kernel::conjugate(m, basis_rotation(c), t, n);
    }
    std::vector<double> p(rho.dim());
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = std::max(0.0, m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real());
    }
    return p;
}

std::vector<double> apply_readout_flips(std::vector<double> probs, int n_qubits, double flip) {
    if (!(flip >= 0.0 && flip <= 1.0)) {
        throw InvalidProbability("readout flip probability out of [0, 1]");
    }
    if (flip == 0.0) {
        return probs;
    }
    for (int q = 0; q < n_qubits; ++q) {
        const std::size_t mask = std::size_t{1} << bit_of(q, n_qubits);
        std::vector<double> next(probs.size());
        for (std::size_t k = 0; k < probs.size(); ++k) {
            next[k] = (1.0 - flip) * probs[k] + flip * probs[k ^ mask];
        }
        probs = std::move(next);
    }
    return probs;
}

void CountsTable::validate() const {
    const TomographySetting s(setting);
    std::int64_t total = 0;
    for (const auto &[label, k] : counts) {
        if (label.size() != s.size() ||
            label.find_first_not_of("01") != std::string::npos) {
            throw InvalidParams("outcome label '" + label + "' does not match setting " + setting);
        }
        if (k < 0) {
            throw InvalidParams("negative count for outcome " + label);
        }
        total += k;
    }
    if (total != shots) {
        throw InvalidParams("counts of setting " + setting + " sum to " + std::to_string(total) +
                            ", expected " + std::to_string(shots));
    }
}

std::string CountsTable::to_json() const {
    nlohmann::ordered_json j;
    j["setting"] = setting;
    j["shots"] = shots;
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto &[label, k] : counts) {
        j["counts"][label] = k;
    }
    return j.dump();
}

CountsTable CountsTable::from_json(std::string_view text) {
    CountsTable t;
    try {
        const auto j = nlohmann::json::parse(text);
        t.setting = j.at("setting").get<std::string>();
        t.shots = j.at("shots").get<std::int64_t>();
        for (const auto &[label, k] : j.at("counts").items()) {
            t.counts[label] = k.get<std::int64_t>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("counts table: ") + e.what());
    }
    try {
        t.validate();
    } catch (const Error &e) {
        throw ParseError(std::string("counts table: ") + e.what());
    }
    return t;
}

CountsTable simulate_readout(const qcore::DensityMatrix &rho, const TomographySetting &setting,
                             double flip, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw InvalidParams("shots must be >= 1");
    }
    const int n = rho.n_qubits();
    const auto probs = apply_readout_flips(outcome_probabilities(rho, setting), n, flip);
    auto rng = qcore::make_stream(seed, 0);

    CountsTable t;
    t.setting = setting.label();
    t.shots = shots;
    double mass_left = 0.0;
    for (double p : probs) {
        mass_left += p;
    }
    std::int64_t remaining = shots;
    for (std::size_t k = 0; k < probs.size() && remaining > 0; ++k) {
        std::int64_t c = remaining;
        if (k + 1 < probs.size()) {
            const double q = mass_left > 0.0 ? std::clamp(probs[k] / mass_left, 0.0, 1.0) : 0.0;
            c = std::binomial_distribution<std::int64_t>(remaining, q)(rng);
        }
        mass_left -= probs[k];
        remaining -= c;
        if (c > 0) {
            t.counts[qcore::basis_label(k, n)] = c;
        }
    }
    return t;
}

std::vector<CountsTable> simulate_tomography(const qcore::DensityMatrix &rho, double flip,
                                             std::int64_t shots, std::uint64_t seed) {
    const auto settings = tomography_settings(rho.n_qubits());
    std::vector<CountsTable> out;
    out.reserve(settings.size());
    for (std::size_t i = 0; i < settings.size(); ++i) {
        // distinct stream per setting: mix the index into the seed
        const std::uint64_t s = qcore::make_stream(seed, i)();
        out.push_back(simulate_readout(rho, settings[i], flip, shots, s));
    }
    return out;
}

CMatrix reconstruct_from_probabilities(const std::map<std::string, std::vector<double>> &probs,
                                       int n_qubits, ReconstructionOptions options) {
    const auto settings = tomography_settings(n_qubits);
    const std::size_t dim = dim_of(n_qubits);
    std::vector<const std::vector<double> *> table;
    table.reserve(settings.size());
    for (const auto &s : settings) {
        const auto it = probs.find(s.label());
        if (it == probs.end()) {
            throw MissingSetting("tomography setting " + s.label() + " is missing");
        }
        if (it->second.size() != dim) {
            throw DimensionMismatch("outcome table for " + s.label() + " has wrong length");
        }
        table.push_back(&it->second);
    }

    CMatrix rho = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &p : qcore::all_pauli_strings(n_qubits)) {
        double expectation = 1.0;
        if (!p.is_identity()) {
            std::size_t mask = 0;
            for (int q = 0; q < n_qubits; ++q) {
                if (p[static_cast<std::size_t>(q)] != qcore::PauliLetter::I) {
                    mask |= std::size_t{1} << bit_of(q, n_qubits);
                }
            }
            double sum = 0.0;
            int compatible = 0;
            for (std::size_t si = 0; si < settings.size(); ++si) {
                bool ok = true;
                for (int q = 0; q < n_qubits && ok; ++q) {
                    const auto letter = p[static_cast<std::size_t>(q)];
                    ok = letter == qcore::PauliLetter::I ||
                         qcore::to_char(letter) == settings[si][static_cast<std::size_t>(q)];
                }
                if (!ok) {
                    continue;
                }
                const auto &dist = *table[si];
                double e = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    e += (std::popcount(k & mask) % 2 == 0 ? 1.0 : -1.0) * dist[k];
                }
                sum += e;
                ++compatible;
            }
            expectation = sum / compatible;
        }
        for (std::size_t k = 0; k < dim; ++k) {
            const auto img = p.act_on_basis(k);
            rho(static_cast<Eigen::Index>(img.index), static_cast<Eigen::Index>(k)) +=
                expectation * img.phase;
        }
    }
    rho /= static_cast<double>(dim);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return options.project ? qcore::project_to_density(rho) : rho;
}

CMatrix reconstruct_matrix(const std::vector<CountsTable> &tables, ReconstructionOptions options) {
    if (tables.empty()) {
        throw MissingSetting("no counts tables supplied");
    }
    const int n = static_cast<int>(tables.front().setting.size());
    const std::int64_t shots = tables.front().shots;
    std::map<std::string, std::vector<double>> probs;
    for (const auto &t : tables) {
        t.validate();
        if (t.shots != shots) {
            throw InvalidParams("all tomography settings must use the same shot count");
        }
        if (static_cast<int>(t.setting.size()) != n) {
            throw DimensionMismatch("tomography settings differ in length");
        }
        std::vector<double> p(dim_of(n));
        for (std::size_t k = 0; k < p.size(); ++k) {
            p[k] = static_cast<double>(count_at(t, qcore::basis_label(k, n))) /
                   static_cast<double>(shots);
        }
        probs[t.setting] = std::move(p);
    }
    return reconstruct_from_probabilities(probs, n, options);
}

qcore::DensityMatrix reconstruct_state(const std::vector<CountsTable> &tables) {
    CMatrix m = reconstruct_matrix(tables, {.project = true});
    const int n = qcore::qubits_for_dim(static_cast<std::size_t>(m.rows()));
    return qcore::unchecked_density(std::move(m), n);
}

} // namespace dqpt::noise
