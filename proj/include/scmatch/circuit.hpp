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

#ifndef SCMATCH_CIRCUIT_HPP
#define SCMATCH_CIRCUIT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scmatch/layout.hpp"

namespace scmatch {

enum class GateKind : uint8_t { init_z, init_x, cnot, measure_z, measure_x, idle };

const char* gate_kind_name(GateKind k);

struct Gate {
    GateKind kind;
    int32_t step;
    int32_t q0;
    int32_t q1 = -1;    // second cnot target, -1 otherwise
    int32_t slot = -1;  // measurement record slot, -1 for non-measurements
    bool noisy = true;  // final ideal readout gates are noiseless
};

/// Syndrome-extraction circuit: per round one ancilla init step, four
/// interleaved cnot steps, one ancilla measurement step; after the last round
/// an ideal readout of every data qubit in both bases. All cnots connect grid
/// neighbors; every qubit gets exactly one gate (or an explicit idle) per
/// step of the noisy rounds.
struct Circuit {
    int d = 0;
    int rounds = 0;
    int32_t n_data = 0;
    int32_t n_x_anc = 0;
    int32_t n_z_anc = 0;
    int32_t n_steps = 0;
    std::vector<Gate> gates;          // execution order (step-major)
    std::vector<int32_t> noisy_gates; // indices into gates, in execution order

    int32_t num_qubits() const { return n_data + n_x_anc + n_z_anc; }
    bool is_ancilla(int32_t q) const { return q >= n_data; }
    StabBasis ancilla_basis(int32_t q) const {
        return q < n_data + n_x_anc ? StabBasis::x : StabBasis::z;
    }
    int32_t ancilla_stab(int32_t q) const {
        return ancilla_basis(q) == StabBasis::x ? q - n_data : q - n_data - n_x_anc;
    }
    int32_t ancilla_qubit(StabBasis b, int32_t stab) const {
        return b == StabBasis::x ? n_data + stab : n_data + n_x_anc + stab;
    }
};

/// Builds the circuit for `rounds` noisy measurement cycles over the layout.
/// Z stabilizers couple their data qubits in (north, west, east, south)
/// order, X stabilizers in (north, east, west, south) order; this schedule
/// is collision-free and keeps hook errors from shortening the effective
/// distance.
Circuit build_cycle_circuit(const CodeLayout& layout, int rounds);

/// Line-oriented text dump, one gate per line: step, kind, targets.
void dump_circuit(const Circuit& circuit, std::ostream& out);
std::string dump_circuit(const Circuit& circuit);

}  // namespace scmatch

#endif
