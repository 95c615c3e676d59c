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

#ifndef SCMATCH_NOISE_HPP
#define SCMATCH_NOISE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "scmatch/circuit.hpp"
#include "scmatch/pauli.hpp"

namespace scmatch {

/// One non-identity outcome of a gate's error channel: Paulis applied to the
/// gate's targets after the ideal gate action, or a classical flip of a
/// recorded measurement outcome.
struct FaultOutcome {
    Pauli p0 = Pauli::i;
    Pauli p1 = Pauli::i;
    bool meas_flip = false;
};

/// Balanced depolarizing model at strength p. Every gate fails with total
/// probability p, split uniformly over its channel outcomes:
///   single-qubit gate / idle: X, Y, Z at p/3 each
///   cnot: the 15 nontrivial two-qubit Paulis at p/15 each
///   init: the orthogonal state at p
///   measurement: reported outcome flipped at p
struct NoiseModel {
    double p = 0.0;
    std::array<std::vector<FaultOutcome>, 6> channels;  // indexed by GateKind

    const std::vector<FaultOutcome>& channel(GateKind k) const {
        return channels[static_cast<size_t>(k)];
    }
};

NoiseModel make_depolarizing_noise(double p);

/// A sampled or injected fault on one gate, with the channel outcome resolved.
struct Fault {
    int32_t gate = -1;  // index into Circuit::gates
    FaultOutcome outcome;
};

/// Samples one trial of gate faults: each noisy gate independently fails with
/// probability p and draws a uniform channel outcome. Reproducible for a
/// fixed seed; returned in execution order.
std::vector<Fault> sample_noise(const Circuit& circuit, const NoiseModel& noise, uint64_t seed);

}  // namespace scmatch

#endif
