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

#ifndef SCMATCH_CORRELATED_HPP
#define SCMATCH_CORRELATED_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "scmatch/decoder.hpp"
#include "scmatch/detector_graph.hpp"

namespace scmatch {

/// A pending edge reweight: the target edge in the named basis graph gets
/// probability new_p. Each target edge appears at most once; contributions
/// from several matched edges are combined before insertion.
struct ReweightEntry {
    StabBasis target_basis;
    int32_t edge = -1;
    double new_p = 0.0;
    int32_t provenance_pair = -1;  // pair index in the triggering matching, -1 if merged
};

using ReweightSet = std::vector<ReweightEntry>;

/// How conditional mass from a matched edge combines with the target edge's
/// prior probability. Kept as an internal switch for sensitivity checks;
/// independent-OR is the default.
enum class CombineRule : uint8_t { independent_or, replace };

struct CorrelatedOptions {
    DecodeOptions decode;
    CombineRule combine = CombineRule::independent_or;
};

/// Conditional probabilities of 1 are clamped below 1 so reweighted edge
/// weights stay finite and positive.
inline constexpr double kReweightClamp = 1.0 - 1e-9;

/// Indices of matched pairs whose expanded path is exactly one detector
/// edge, including event-boundary pairs; companion-companion pairs never
/// qualify (their paths are empty).
std::vector<int32_t> find_unit_matches(const Matching& matching);

/// Perfect-measurement reweighting: each unit match locates an error with
/// high confidence, so the other-basis edge through the same data qubit is
/// reweighted to p = 0.5 (w = ln 2).
ReweightSet reweight_2d(const std::vector<int32_t>& unit_pairs, const Matching& matching,
                        const DetectorGraph& matched_graph);

/// Fault-tolerant reweighting: condition on the matched edge (scale its
/// source probabilities to total 1), map each source's conditional mass to
/// its linked other-basis edge, and fold the summed mass into that edge's
/// prior: p_new = 1 - (1 - p_old)(1 - sum q), clamped below 1.
ReweightSet reweight_3d(const std::vector<int32_t>& unit_pairs, const Matching& matching,
                        const DetectorGraph& matched_graph, const DetectorGraph& other_graph,
                        CombineRule combine = CombineRule::independent_or);

struct CorrelatedResult {
    std::array<DecodeResult, 2> result;      // final per-basis corrections
    std::array<DecodeResult, 2> first_pass;  // pass-1 (independent) corrections
    std::array<ReweightSet, 2> reweights;    // entries applied INTO basis b's graph
    bool second_pass = false;
};

/// Two-pass correlated decoding: independent matching of both graphs,
/// symmetric reweighting from both pass-1 unit-match sets, then a full
/// re-decode of both graphs with the same jitter streams. With no reweights
/// the pass-1 output is returned unchanged.
CorrelatedResult correlated_decode(const std::array<DetectorGraph, 2>& graphs, SimMode mode,
                                   const SyndromeInstance& syndrome, uint64_t seed,
                                   const CorrelatedOptions& options = {});

}  // namespace scmatch

#endif
