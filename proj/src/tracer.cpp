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

#include "scmatch/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "scmatch/propagate.hpp"

namespace scmatch {

namespace {

std::array<uint8_t, 2> readout_flips(const PauliFrame& final_frame, const CodeLayout& layout) {
    // The X-stabilizer graph guards the logical Z readout, which flips on Z
    // components crossing logical X; dually for the Z-stabilizer graph.
    uint8_t flip_x_graph = 0, flip_z_graph = 0;
    for (int32_t q : layout.logical_x_support)
        flip_x_graph ^= final_frame.z_bits[q];
    for (int32_t q : layout.logical_z_support)
        flip_z_graph ^= final_frame.x_bits[q];
    return {flip_x_graph, flip_z_graph};
}

void fill_endpoints(ErrorSource& src, const SyndromeInstance& syndrome) {
    for (StabBasis b : kBothBases) {
        const auto& events = syndrome.of(b);
        if (events.size() > 2)
            throw std::logic_error(
                "trace_all_single_faults: a single fault produced more than 2 detection events");
        src.n_endpoints[basis_index(b)] = static_cast<uint8_t>(events.size());
        for (size_t i = 0; i < events.size(); ++i)
            src.endpoints[basis_index(b)][i] = events[i];
    }
}

}  // namespace

std::vector<ErrorSource> trace_all_single_faults(const Circuit& circuit, const NoiseModel& noise,
                                                 const CodeLayout& layout) {
    std::vector<ErrorSource> sources;
    if (noise.p <= 0.0)
        return sources;

    for (int32_t gate_id : circuit.noisy_gates) {
        const auto& channel = noise.channel(circuit.gates[gate_id].kind);
        for (const FaultOutcome& outcome : channel) {
            ErrorSource src;
            src.gate = gate_id;
            src.outcome = outcome;
            src.prob = noise.p / static_cast<double>(channel.size());

            PropagationResult res = propagate(circuit, {Fault{gate_id, outcome}});
            fill_endpoints(src, detection_events(res.record, layout));
            src.obs_flip = readout_flips(res.final_data_frame, layout);
            sources.push_back(std::move(src));
        }
    }
    return sources;
}

std::array<DetectorGraph, 2> build_detector_graphs(std::vector<ErrorSource>& sources,
                                                   const CodeLayout& layout, int rounds) {
    std::array<DetectorGraph, 2> graphs;
    for (StabBasis b : kBothBases) {
        DetectorGraph& g = graphs[basis_index(b)];
        g.basis = b;
        g.rounds = rounds;
        const auto& stabs = layout.stabilizers(b);
        const int layers = rounds > 0 ? rounds + 1 : 1;
        g.n_sites = static_cast<int32_t>(stabs.size() * layers);
        g.vertices.reserve(g.n_sites);
        for (int t = 0; t < layers; ++t)
            for (const Stabilizer& s : stabs)
                g.vertices.push_back(
                    DetVertex{s.site.row, s.site.col, static_cast<int16_t>(t)});
    }

    std::array<std::unordered_map<int64_t, int32_t>, 2> edge_index;
    std::array<std::vector<double>, 2> survival;  // product of (1 - p_source)

    for (size_t si = 0; si < sources.size(); ++si) {
        ErrorSource& src = sources[si];
        if (src.prob <= 0.0 || src.prob >= 1.0)
            throw std::invalid_argument("build_detector_graphs: source probability out of (0,1)");
        for (StabBasis basis : kBothBases) {
            const size_t bi = basis_index(basis);
            if (src.n_endpoints[bi] == 0) {
                if (src.obs_flip[bi])
                    throw std::runtime_error(
                        "build_detector_graphs: undetectable fault flips a logical readout");
                continue;
            }
            DetectorGraph& g = graphs[bi];
            int32_t a = src.endpoints[bi][0];
            int32_t b = src.n_endpoints[bi] == 2 ? src.endpoints[bi][1] : g.boundary();
            if (a > b)
                std::swap(a, b);

            int64_t key = static_cast<int64_t>(a) * (g.n_sites + 1) + b;
            auto [it, inserted] = edge_index[bi].try_emplace(
                key, static_cast<int32_t>(g.edges.size()));
            if (inserted) {
                DetEdge e;
                e.a = a;
                e.b = b;
                e.obs_flip = src.obs_flip[bi] != 0;
                g.edges.push_back(std::move(e));
                survival[bi].push_back(1.0);
            }
            const int32_t eid = it->second;
            DetEdge& e = g.edges[eid];
            if (e.obs_flip != (src.obs_flip[bi] != 0))
                throw std::runtime_error(
                    "build_detector_graphs: sources sharing endpoint pair disagree on logical "
                    "flip parity (site " +
                    std::to_string(a) + "," + std::to_string(b) + ")");
            e.sources.push_back(static_cast<int32_t>(si));
            e.src_mass += src.prob;
            survival[bi][eid] *= 1.0 - src.prob;
            src.edge_id[bi] = eid;
        }
    }

    for (StabBasis basis : kBothBases) {
        const size_t bi = basis_index(basis);
        DetectorGraph& g = graphs[bi];
        for (size_t e = 0; e < g.edges.size(); ++e) {
            g.edges[e].p = 1.0 - survival[bi][e];
            g.edges[e].w = -std::log(g.edges[e].p);
            if (!(g.edges[e].p > 0.0 && g.edges[e].p < 1.0) || !std::isfinite(g.edges[e].w))
                throw std::runtime_error("build_detector_graphs: edge probability out of range");
        }
    }

    // Correlation links: a source detected in both bases couples its edges.
    for (const ErrorSource& src : sources) {
        if (src.edge_id[0] >= 0 && src.edge_id[1] >= 0) {
            graphs[0].edges[src.edge_id[0]].links.push_back(CrossLink{src.prob, src.edge_id[1]});
            graphs[1].edges[src.edge_id[1]].links.push_back(CrossLink{src.prob, src.edge_id[0]});
        }
    }

    for (auto& g : graphs)
        g.build_adjacency();
    return graphs;
}

DetectorModel build_model_2d(const CodeLayout& layout, double p) {
    if (p < 0.0 || p >= 1.0)
        throw std::invalid_argument("build_model_2d: need 0 <= p < 1");

    DetectorModel model;
    model.mode = SimMode::perfect_2d;
    model.layout = layout;
    model.noise = make_depolarizing_noise(p);

    if (p > 0.0) {
        const Pauli outcomes[3] = {Pauli::x, Pauli::y, Pauli::z};
        for (size_t q = 0; q < layout.num_data(); ++q) {
            for (Pauli pl : outcomes) {
                ErrorSource src;
                src.gate = static_cast<int32_t>(q);
                src.outcome = FaultOutcome{pl, Pauli::i, false};
                src.prob = p / 3.0;
                for (StabBasis b : kBothBases) {
                    const size_t bi = basis_index(b);
                    // An X stabilizer fires on Z components, and dually.
                    bool detected = (b == StabBasis::x) ? has_z_component(pl)
                                                        : has_x_component(pl);
                    if (!detected)
                        continue;
                    const auto& stabs = layout.qubit_to_stabs[bi][q];
                    src.n_endpoints[bi] = static_cast<uint8_t>(stabs.size());
                    for (size_t i = 0; i < stabs.size(); ++i)
                        src.endpoints[bi][i] = stabs[i];
                    src.obs_flip[bi] = (b == StabBasis::x) ? layout.in_logical_x[q]
                                                           : layout.in_logical_z[q];
                }
                model.sources.push_back(std::move(src));
            }
        }
    }

    model.graphs = build_detector_graphs(model.sources, layout, 0);
    return model;
}

DetectorModel build_model_3d(const CodeLayout& layout, double p, int rounds) {
    if (p < 0.0 || p >= 1.0)
        throw std::invalid_argument("build_model_3d: need 0 <= p < 1");

    DetectorModel model;
    model.mode = SimMode::fault_tolerant_3d;
    model.layout = layout;
    model.noise = make_depolarizing_noise(p);
    model.circuit = build_cycle_circuit(layout, rounds);
    model.sources = trace_all_single_faults(model.circuit, model.noise, layout);
    model.graphs = build_detector_graphs(model.sources, layout, rounds);
    model.source_offset.reserve(model.circuit.noisy_gates.size());
    int32_t prefix = 0;
    for (int32_t gate_id : model.circuit.noisy_gates) {
        model.source_offset.push_back(prefix);
        prefix += static_cast<int32_t>(model.noise.channel(model.circuit.gates[gate_id].kind).size());
    }
    return model;
}

void sample_sources(const DetectorModel& model, uint64_t seed, std::vector<int32_t>& out) {
    out.clear();
    const double p = model.noise.p;
    if (p <= 0.0)
        return;

    Xoshiro256 rng(seed);
    const double inv_log_keep = 1.0 / std::log1p(-p);

    if (model.mode == SimMode::perfect_2d) {
        const size_t n = model.layout.num_data();
        size_t q = 0;
        while (true) {
            double u = 1.0 - rng.uniform();
            q += static_cast<size_t>(std::log(u) * inv_log_keep);
            if (q >= n)
                break;
            out.push_back(static_cast<int32_t>(3 * q + rng.below(3)));
            ++q;
        }
        return;
    }

    // Source rows follow noisy-gate execution order; source_offset maps a
    // gate slot to its first row.
    const size_t n = model.circuit.noisy_gates.size();
    size_t idx = 0;
    while (true) {
        double u = 1.0 - rng.uniform();
        idx += static_cast<size_t>(std::log(u) * inv_log_keep);
        if (idx >= n)
            break;
        GateKind k = model.circuit.gates[model.circuit.noisy_gates[idx]].kind;
        const size_t n_out = model.noise.channel(k).size();
        out.push_back(model.source_offset[idx] + static_cast<int32_t>(rng.below(n_out)));
        ++idx;
    }
}

std::array<bool, 2> collect_syndrome(const DetectorModel& model,
                                     const std::vector<int32_t>& source_ids,
                                     SyndromeInstance& syndrome) {
    syndrome.of(StabBasis::x).clear();
    syndrome.of(StabBasis::z).clear();
    std::array<bool, 2> flips{false, false};
    for (int32_t sid : source_ids) {
        const ErrorSource& src = model.sources[sid];
        for (StabBasis b : kBothBases) {
            const size_t bi = basis_index(b);
            for (int i = 0; i < src.n_endpoints[bi]; ++i)
                syndrome.of(b).push_back(src.endpoints[bi][i]);
            flips[bi] = flips[bi] != (src.obs_flip[bi] != 0);
        }
    }
    // XOR semantics: sites hit an even number of times cancel.
    for (StabBasis b : kBothBases) {
        auto& events = syndrome.of(b);
        std::sort(events.begin(), events.end());
        size_t out = 0;
        for (size_t i = 0; i < events.size();) {
            size_t j = i;
            while (j < events.size() && events[j] == events[i])
                ++j;
            if ((j - i) % 2 != 0)
                events[out++] = events[i];
            i = j;
        }
        events.resize(out);
    }
    return flips;
}

}  // namespace scmatch
