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

#ifndef SCMATCH_PROPAGATE_HPP
#define SCMATCH_PROPAGATE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "scmatch/circuit.hpp"
#include "scmatch/noise.hpp"

namespace scmatch {

/// Raw measurement outcomes of one trial. Ancilla outcomes are stored per
/// (round, stabilizer) slot; the ideal end-of-trial data readout is stored
/// per qubit in both bases (readout bit set iff the final frame anticommutes
/// with the measured operator).
struct MeasurementRecord {
    std::array<std::vector<uint8_t>, 2> outcomes;  // [StabBasis][round * n_stabs + stab]
    std::vector<uint8_t> final_z_readout;          // flips on X components
    std::vector<uint8_t> final_x_readout;          // flips on Z components
};

struct PropagationResult {
    MeasurementRecord record;
    PauliFrame final_data_frame;  // over data qubits only
};

/// Pauli-frame propagation of a fault set through the circuit. Cnots spread
/// X from control to target and Z from target to control; a measurement
/// outcome is flipped iff the accumulated frame anticommutes with the
/// measured operator or the gate carries a flip fault. Linear: the outcome
/// record of a combined fault set is the XOR of the individual records.
PropagationResult propagate(const Circuit& circuit, const std::vector<Fault>& faults);

/// Detection events: per basis, an event at (stab, layer) iff temporally
/// consecutive outcomes differ, with layer -1 defined as all zeros and a
/// final layer computed from the ideal data readout so every error chain
/// terminates. Site id = layer * n_stabs + stab.
SyndromeInstance detection_events(const MeasurementRecord& record, const CodeLayout& layout);

}  // namespace scmatch

#endif
