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

#include "scmatch/propagate.hpp"

#include <algorithm>
#include <stdexcept>

namespace scmatch {

PropagationResult propagate(const Circuit& circuit, const std::vector<Fault>& faults) {
    for (const Fault& f : faults)
        if (f.gate < 0 || f.gate >= static_cast<int32_t>(circuit.gates.size()))
            throw std::invalid_argument("propagate: fault references an unknown gate");

    std::vector<Fault> ordered(faults);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Fault& a, const Fault& b) { return a.gate < b.gate; });

    const int32_t n_qubits = circuit.num_qubits();
    std::vector<uint8_t> x(n_qubits, 0), z(n_qubits, 0);

    PropagationResult result;
    result.record.outcomes[basis_index(StabBasis::x)].assign(
        static_cast<size_t>(circuit.n_x_anc) * circuit.rounds, 0);
    result.record.outcomes[basis_index(StabBasis::z)].assign(
        static_cast<size_t>(circuit.n_z_anc) * circuit.rounds, 0);
    result.record.final_z_readout.assign(circuit.n_data, 0);
    result.record.final_x_readout.assign(circuit.n_data, 0);

    size_t next_fault = 0;
    for (size_t g = 0; g < circuit.gates.size(); ++g) {
        const Gate& gate = circuit.gates[g];
        uint8_t* outcome_bit = nullptr;

        switch (gate.kind) {
            case GateKind::init_z:
            case GateKind::init_x:
                x[gate.q0] = 0;
                z[gate.q0] = 0;
                break;
            case GateKind::cnot:
                x[gate.q1] ^= x[gate.q0];
                z[gate.q0] ^= z[gate.q1];
                break;
            case GateKind::measure_z:
            case GateKind::measure_x: {
                uint8_t bit = (gate.kind == GateKind::measure_z) ? x[gate.q0] : z[gate.q0];
                if (circuit.is_ancilla(gate.q0)) {
                    StabBasis b = circuit.ancilla_basis(gate.q0);
                    outcome_bit = &result.record.outcomes[basis_index(b)][gate.slot];
                } else {
                    auto& readout = (gate.kind == GateKind::measure_z)
                                        ? result.record.final_z_readout
                                        : result.record.final_x_readout;
                    outcome_bit = &readout[gate.slot];
                }
                *outcome_bit = bit;
                break;
            }
            case GateKind::idle:
                break;
        }

        while (next_fault < ordered.size() && ordered[next_fault].gate == static_cast<int32_t>(g)) {
            const FaultOutcome& o = ordered[next_fault].outcome;
            if (o.meas_flip) {
                if (outcome_bit == nullptr)
                    throw std::invalid_argument("propagate: flip fault on a non-measurement gate");
                *outcome_bit ^= 1;
            }
            if (o.p0 != Pauli::i) {
                x[gate.q0] ^= has_x_component(o.p0) ? 1 : 0;
                z[gate.q0] ^= has_z_component(o.p0) ? 1 : 0;
            }
            if (o.p1 != Pauli::i) {
                if (gate.q1 < 0)
                    throw std::invalid_argument("propagate: two-qubit fault on a one-qubit gate");
                x[gate.q1] ^= has_x_component(o.p1) ? 1 : 0;
                z[gate.q1] ^= has_z_component(o.p1) ? 1 : 0;
            }
            ++next_fault;
        }
    }

    result.final_data_frame = PauliFrame(circuit.n_data);
    for (int32_t q = 0; q < circuit.n_data; ++q) {
        result.final_data_frame.x_bits[q] = x[q];
        result.final_data_frame.z_bits[q] = z[q];
    }
    return result;
}

SyndromeInstance detection_events(const MeasurementRecord& record, const CodeLayout& layout) {
    SyndromeInstance syndrome;
    for (StabBasis b : kBothBases) {
        const auto& outcomes = record.outcomes[basis_index(b)];
        const size_t n_stabs = layout.num_stabs(b);
        if (n_stabs == 0 || outcomes.size() % n_stabs != 0)
            throw std::invalid_argument("detection_events: record does not match layout");
        const size_t rounds = outcomes.size() / n_stabs;
        const auto& stabs = layout.stabilizers(b);
        // The X-basis readout bit carries Z components, which is what an X
        // stabilizer checks (and dually).
        const auto& readout =
            (b == StabBasis::x) ? record.final_x_readout : record.final_z_readout;

        for (size_t s = 0; s < n_stabs; ++s) {
            uint8_t prev = 0;
            for (size_t t = 0; t <= rounds; ++t) {
                uint8_t cur;
                if (t < rounds) {
                    cur = outcomes[t * n_stabs + s];
                } else {
                    cur = 0;  // ideal final layer from the data readout
                    for (int32_t q : stabs[s].data)
                        cur ^= readout[q];
                }
                if (cur != prev)
                    syndrome.of(b).push_back(static_cast<int32_t>(t * n_stabs + s));
                prev = cur;
            }
        }
    }
    for (StabBasis b : kBothBases)
        std::sort(syndrome.of(b).begin(), syndrome.of(b).end());
    return syndrome;
}

}  // namespace scmatch
