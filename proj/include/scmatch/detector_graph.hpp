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

#ifndef SCMATCH_DETECTOR_GRAPH_HPP
#define SCMATCH_DETECTOR_GRAPH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "scmatch/circuit.hpp"
#include "scmatch/layout.hpp"
#include "scmatch/noise.hpp"

namespace scmatch {

enum class SimMode : uint8_t { perfect_2d, fault_tolerant_3d };

/// Detection site: stabilizer grid position plus time layer (0 in 2D).
struct DetVertex {
    int16_t row = 0;
    int16_t col = 0;
    int16_t layer = 0;
};

/// Correlated mass flowing to the other basis graph: one source's
/// probability and the edge it maps to over there.
struct CrossLink {
    double p = 0.0;
    int32_t other_edge = -1;
};

/// One elementary fault mechanism: a specific channel outcome on a specific
/// gate (fault-tolerant mode) or data qubit (perfect-measurement mode),
/// with the detection sites and logical flips it produces, traced once by
/// propagating the lone fault.
struct ErrorSource {
    int32_t gate = -1;  // gate index (3D) or data qubit index (2D)
    FaultOutcome outcome;
    double prob = 0.0;
    std::array<std::array<int32_t, 2>, 2> endpoints{{{-1, -1}, {-1, -1}}};  // [basis]
    std::array<uint8_t, 2> n_endpoints{0, 0};
    // obs_flip[b]: whether this fault flips the logical readout guarded by
    // the basis-b graph (logical Z for the X-stabilizer graph, logical X for
    // the Z-stabilizer graph).
    std::array<uint8_t, 2> obs_flip{0, 0};
    std::array<int32_t, 2> edge_id{-1, -1};
};

struct DetEdge {
    int32_t a = -1;  // smaller vertex id; b may be the boundary vertex
    int32_t b = -1;
    double p = 0.0;       // independent-OR of source probabilities
    double w = 0.0;       // -ln p
    bool obs_flip = false;
    double src_mass = 0.0;  // plain sum of source probabilities
    std::vector<int32_t> sources;
    std::vector<CrossLink> links;
};

/// Weighted detection graph for one stabilizer basis. Vertices are detection
/// sites plus one boundary vertex (id n_sites); each edge is the set of
/// single-fault mechanisms connecting its endpoint pair.
struct DetectorGraph {
    StabBasis basis = StabBasis::x;
    int rounds = 0;  // 0 in perfect-measurement mode
    int32_t n_sites = 0;
    std::vector<DetVertex> vertices;
    std::vector<DetEdge> edges;
    std::vector<int32_t> adj_offsets;  // CSR over n_sites + 1 vertices
    std::vector<int32_t> adj_edges;

    int32_t boundary() const { return n_sites; }
    int32_t num_vertices() const { return n_sites + 1; }
    int32_t other_endpoint(int32_t edge, int32_t v) const {
        const DetEdge& e = edges[edge];
        return e.a == v ? e.b : e.a;
    }
    std::vector<double> base_weights() const;
    void build_adjacency();
};

/// The full decoding model for one (layout, noise, rounds) configuration:
/// the traced source table and both basis graphs with correlation links.
struct DetectorModel {
    SimMode mode = SimMode::perfect_2d;
    CodeLayout layout;
    NoiseModel noise;
    Circuit circuit;  // 3D mode only
    std::vector<ErrorSource> sources;
    std::array<DetectorGraph, 2> graphs;
    // 3D only: first source row of each noisy-gate slot, for O(#faults) sampling.
    std::vector<int32_t> source_offset;

    const DetectorGraph& graph(StabBasis b) const { return graphs[basis_index(b)]; }
    DetectorGraph& graph(StabBasis b) { return graphs[basis_index(b)]; }
};

}  // namespace scmatch

#endif
