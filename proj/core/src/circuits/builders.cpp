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

#include "dqpt/circuits/builders.hpp"

#include <cmath>

#include "dqpt/qcore/error.hpp"

namespace dqpt::circuits {

using qcore::Gate;

double ground_prep_angle(const schwinger::ModelParams &p) {
    const auto s = schwinger::diagonalize(p.pre_quench());
    const double r2 = std::sqrt(2.0);
    return 2.0 * std::atan2(s.b_g * r2, s.a_g * r2);
}

Circuit build_ground_prep(const schwinger::ModelParams &p) {
    p.validate();
    Circuit c(4, "ground_prep");
    c.metadata().m = p.m;
    c.metadata().J = p.J;
    c.add(Gate::h(), {0});
    c.add(Gate::ry(ground_prep_angle(p)), {1});
    c.add(Gate::x(), {2});
    c.add(Gate::cnot(), {0, 2});
    c.add(Gate::cnot(), {1, 3});
    c.add(Gate::cnot(), {0, 3});
    c.add(Gate::cnot(), {3, 2});
    return c;
}

Circuit build_hopping_block(double J, double dt, int a, int b, int c, int n_qubits) {
    Circuit k(n_qubits, "hopping");
    k.add(Gate::cnot(), {b, c});
    k.add(Gate::h(), {a});
    k.add(Gate::h(), {b});
    k.add(Gate::cnot(), {a, b});
    k.add(Gate::cnot(), {b, c});

    Circuit block = k;
    block.add(Gate::rz(J * dt / 2.0), {b});
    block.add(Gate::rz(-J * dt / 2.0), {c});
    block.append(k.inverse());
    block.metadata().name = "hopping";
    return block;
}

Circuit build_trotter_step(const schwinger::ModelParams &p, double dt) {
    p.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidParams("Trotter step needs dt > 0, got " + std::to_string(dt));
    }
    Circuit c(4, "trotter_step");
    c.metadata().m = p.m;
    c.metadata().J = p.J;
    c.metadata().dt = dt;
    c.append(build_hopping_block(p.J, dt, 0, 1, 2));
    c.barrier();
    c.append(build_hopping_block(p.J, dt, 3, 2, 1));
    c.barrier();
    const double phi = p.signed_mass() * dt;
    c.add(Gate::rz(-phi), {1});
    c.barrier();
    c.add(Gate::rz(phi), {2});
    c.barrier();
    return c;
}

Circuit build_evolution(const schwinger::ModelParams &p, double dt, int steps) {
    if (steps < 0) {
        throw InvalidParams("number of Trotter steps must be non-negative");
    }
    Circuit c = build_ground_prep(p.pre_quench());
    c.metadata().name = "evolution";
    c.metadata().dt = dt;
    c.barrier();
    c.mark_boundary();
    if (steps > 0) {
        const Circuit step = build_trotter_step(p.quenched(), dt);
        for (int s = 0; s < steps; ++s) {
            c.append(step);
            c.mark_boundary();
        }
    }
    return c;
}

} // namespace dqpt::circuits
