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

#include "scmatch/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "scmatch/rng.hpp"

namespace scmatch {

NoiseModel make_depolarizing_noise(double p) {
    if (p < 0.0 || p >= 1.0)
        throw std::invalid_argument("make_depolarizing_noise: need 0 <= p < 1");

    NoiseModel noise;
    noise.p = p;

    auto& ch = noise.channels;
    ch[static_cast<size_t>(GateKind::init_z)] = {{Pauli::x, Pauli::i, false}};
    ch[static_cast<size_t>(GateKind::init_x)] = {{Pauli::z, Pauli::i, false}};
    ch[static_cast<size_t>(GateKind::measure_z)] = {{Pauli::i, Pauli::i, true}};
    ch[static_cast<size_t>(GateKind::measure_x)] = {{Pauli::i, Pauli::i, true}};

    std::vector<FaultOutcome> single;
    for (Pauli p0 : {Pauli::x, Pauli::y, Pauli::z})
        single.push_back({p0, Pauli::i, false});
    ch[static_cast<size_t>(GateKind::idle)] = single;

    std::vector<FaultOutcome> two;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a || b)
                two.push_back({static_cast<Pauli>(a), static_cast<Pauli>(b), false});
    ch[static_cast<size_t>(GateKind::cnot)] = two;

    return noise;
}

std::vector<Fault> sample_noise(const Circuit& circuit, const NoiseModel& noise, uint64_t seed) {
    std::vector<Fault> faults;
    if (noise.p <= 0.0)
        return faults;

    Xoshiro256 rng(seed);
    const double inv_log_keep = 1.0 / std::log1p(-noise.p);
    const size_t n = circuit.noisy_gates.size();

    // Every gate kind fails with the same total probability p, so a single
    // geometric skip over the gate sequence samples the whole trial.
    size_t idx = 0;
    while (true) {
        double u = 1.0 - rng.uniform();  // (0, 1]
        idx += static_cast<size_t>(std::log(u) * inv_log_keep);
        if (idx >= n)
            break;
        int32_t gate_id = circuit.noisy_gates[idx];
        const auto& channel = noise.channel(circuit.gates[gate_id].kind);
        const auto& outcome = channel[rng.below(channel.size())];
        faults.push_back(Fault{gate_id, outcome});
        ++idx;
    }
    return faults;
}

}  // namespace scmatch
