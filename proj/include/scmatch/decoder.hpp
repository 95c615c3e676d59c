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

#ifndef SCMATCH_DECODER_HPP
#define SCMATCH_DECODER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "scmatch/detector_graph.hpp"
#include "scmatch/mwpm.hpp"

namespace scmatch {

/// One matched pair of syndrome-graph nodes. Nodes 0..k-1 are detection
/// events, k..2k-1 their boundary companions. The path holds the detector
/// edges realizing the pair (empty for companion-companion pairs).
struct MatchedPair {
    int32_t a = -1;
    int32_t b = -1;
    double weight = 0.0;
    std::vector<int32_t> path;
};

struct Matching {
    std::vector<MatchedPair> pairs;
    double total_weight = 0.0;
};

struct DecodeOptions {
    // Per-trial tie-breaking: every detector edge weight is scaled by
    // (1 + eps * u) with u uniform in [0,1), so degenerate matchings and
    // degenerate shortest paths are sampled instead of resolved by solver
    // internals.
    double jitter_eps = 1e-6;
};

struct DecodeResult {
    std::vector<int32_t> correction;  // detector edge ids, XOR-reduced
    Matching matching;
    bool obs_flip = false;  // parity of the correction's logical-flip flags
};

/// Decodes one basis: contracts the detector graph to a complete syndrome
/// graph via one shortest-path run per event, solves exact MWPM, and expands
/// matched pairs back to detector edge paths. The correction's syndrome
/// equals the input event set.
DecodeResult decode(const DetectorGraph& graph, std::span<const double> weights,
                    const std::vector<int32_t>& events, uint64_t jitter_seed,
                    const DecodeOptions& options = {});

/// Convenience: decode both bases independently with per-basis jitter
/// streams derived from the trial seed.
std::array<DecodeResult, 2> decode_independent(const std::array<DetectorGraph, 2>& graphs,
                                               const SyndromeInstance& syndrome, uint64_t seed,
                                               const DecodeOptions& options = {});

}  // namespace scmatch

#endif
