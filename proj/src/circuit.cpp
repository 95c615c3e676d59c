// Copyright 2026 scmatch Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scmatch/circuit.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scmatch {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::init_z: return "init_z";
        case GateKind::init_x: return "init_x";
        case GateKind::cnot: return "cnot";
        case GateKind::measure_z: return "measure_z";
        case GateKind::measure_x: return "measure_x";
        case GateKind::idle: return "idle";
    }
    return "?";
}

namespace {

// Coupling order within a round. Index 0..3 selects the neighbor offset a
// stabilizer couples at cnot step k. Z stabilizers: north, west, east, south;
// X stabilizers: north, east, west, south.
constexpr int kZOrder[4][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
constexpr int kXOrder[4][2] = {{-1, 0}, {0, 1}, {0, -1}, {1, 0}};

}  // namespace

Circuit build_cycle_circuit(const CodeLayout& layout, int rounds) {
    if (rounds < 1)
        throw std::invalid_argument("build_cycle_circuit: rounds must be >= 1");

    Circuit circuit;
    circuit.d = layout.d;
    circuit.rounds = rounds;
    circuit.n_data = static_cast<int32_t>(layout.num_data());
    circuit.n_x_anc = static_cast<int32_t>(layout.num_stabs(StabBasis::x));
    circuit.n_z_anc = static_cast<int32_t>(layout.num_stabs(StabBasis::z));

    const int32_t n_qubits = circuit.num_qubits();
    std::vector<uint8_t> busy(n_qubits);

    auto begin_step = [&] { std::fill(busy.begin(), busy.end(), 0); };
    auto add_gate = [&](GateKind kind, int32_t step, int32_t q0, int32_t q1, int32_t slot,
                        bool noisy) {
        if (busy[q0] || (q1 >= 0 && (q1 == q0 || busy[q1])))
            throw std::logic_error("build_cycle_circuit: schedule collision");
        busy[q0] = 1;
        if (q1 >= 0)
            busy[q1] = 1;
        circuit.gates.push_back(Gate{kind, step, q0, q1, slot, noisy});
    };
    auto fill_idle = [&](int32_t step) {
        for (int32_t q = 0; q < n_qubits; ++q)
            if (!busy[q])
                add_gate(GateKind::idle, step, q, -1, -1, true);
    };

    for (int r = 0; r < rounds; ++r) {
        const int32_t base = 6 * r;

        begin_step();
        for (int32_t s = 0; s < circuit.n_x_anc; ++s)
            add_gate(GateKind::init_x, base, circuit.ancilla_qubit(StabBasis::x, s), -1, -1, true);
        for (int32_t s = 0; s < circuit.n_z_anc; ++s)
            add_gate(GateKind::init_z, base, circuit.ancilla_qubit(StabBasis::z, s), -1, -1, true);
        fill_idle(base);

        for (int k = 0; k < 4; ++k) {
            const int32_t step = base + 1 + k;
            begin_step();
            for (StabBasis b : kBothBases) {
                const auto& order = (b == StabBasis::x) ? kXOrder : kZOrder;
                const auto& stabs = layout.stabilizers(b);
                for (size_t s = 0; s < stabs.size(); ++s) {
                    Coord site = stabs[s].site;
                    Coord n{static_cast<int16_t>(site.row + order[k][0]),
                            static_cast<int16_t>(site.col + order[k][1])};
                    int32_t data = layout.qubit_at(n);
                    if (data < 0)
                        continue;
                    int32_t anc = circuit.ancilla_qubit(b, static_cast<int32_t>(s));
                    // X ancillas control their data targets; Z ancillas are
                    // targets of data controls.
                    if (b == StabBasis::x)
                        add_gate(GateKind::cnot, step, anc, data, -1, true);
                    else
                        add_gate(GateKind::cnot, step, data, anc, -1, true);
                }
            }
            fill_idle(step);
        }

        begin_step();
        for (int32_t s = 0; s < circuit.n_x_anc; ++s)
            add_gate(GateKind::measure_x, base + 5, circuit.ancilla_qubit(StabBasis::x, s), -1,
                     r * circuit.n_x_anc + s, true);
        for (int32_t s = 0; s < circuit.n_z_anc; ++s)
            add_gate(GateKind::measure_z, base + 5, circuit.ancilla_qubit(StabBasis::z, s), -1,
                     r * circuit.n_z_anc + s, true);
        fill_idle(base + 5);
    }

    // Ideal end-of-trial data readout in both bases. Frames are classical, so
    // reading both costs nothing and keeps the two decoding problems
    // symmetric for the correlated pass.
    const int32_t readout_z_step = 6 * rounds;
    const int32_t readout_x_step = 6 * rounds + 1;
    for (int32_t q = 0; q < circuit.n_data; ++q)
        circuit.gates.push_back(Gate{GateKind::measure_z, readout_z_step, q, -1, q, false});
    for (int32_t q = 0; q < circuit.n_data; ++q)
        circuit.gates.push_back(Gate{GateKind::measure_x, readout_x_step, q, -1, q, false});
    circuit.n_steps = readout_x_step + 1;

    for (size_t g = 0; g < circuit.gates.size(); ++g)
        if (circuit.gates[g].noisy)
            circuit.noisy_gates.push_back(static_cast<int32_t>(g));

    return circuit;
}

void dump_circuit(const Circuit& circuit, std::ostream& out) {
    for (const Gate& g : circuit.gates) {
        out << g.step << ' ' << gate_kind_name(g.kind) << ' ' << g.q0;
        if (g.q1 >= 0)
            out << ' ' << g.q1;
        out << '\n';
    }
}

std::string dump_circuit(const Circuit& circuit) {
    std::ostringstream ss;
    dump_circuit(circuit, ss);
    return ss.str();
}

}  // namespace scmatch
