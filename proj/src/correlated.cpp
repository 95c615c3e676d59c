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

#include "scmatch/correlated.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "scmatch/rng.hpp"

namespace scmatch {

std::vector<int32_t> find_unit_matches(const Matching& matching) {
    std::vector<int32_t> out;
    for (size_t i = 0; i < matching.pairs.size(); ++i)
        if (matching.pairs[i].path.size() == 1)
            out.push_back(static_cast<int32_t>(i));
    return out;
}

ReweightSet reweight_2d(const std::vector<int32_t>& unit_pairs, const Matching& matching,
                        const DetectorGraph& matched_graph) {
    // In 2D each edge is one data qubit; the correlation links of a matched
    // edge point at the other-basis edge through that qubit (the Y outcome).
    std::map<int32_t, int32_t> targets;  // target edge -> provenance pair
    for (int32_t pi : unit_pairs) {
        const int32_t e = matching.pairs[pi].path[0];
        for (const CrossLink& link : matched_graph.edges[e].links)
            targets.try_emplace(link.other_edge, pi);
    }

    ReweightSet out;
    for (const auto& [edge, pi] : targets)
        out.push_back(ReweightEntry{other_basis(matched_graph.basis), edge, 0.5, pi});
    return out;
}

ReweightSet reweight_3d(const std::vector<int32_t>& unit_pairs, const Matching& matching,
                        const DetectorGraph& matched_graph, const DetectorGraph& other_graph,
                        CombineRule combine) {
    // Conditional mass per target edge, summed over every triggering match
    // before being folded into the prior.
    std::map<int32_t, std::pair<double, int32_t>> mass;  // edge -> (sum q, provenance)
    for (int32_t pi : unit_pairs) {
        const int32_t e = matching.pairs[pi].path[0];
        const DetEdge& edge = matched_graph.edges[e];
        if (edge.sources.empty() || edge.src_mass <= 0.0)
            throw std::runtime_error("reweight_3d: matched edge has no sources");
        for (const CrossLink& link : edge.links) {
            const double q = link.p / edge.src_mass;
            auto [it, inserted] = mass.try_emplace(link.other_edge, std::make_pair(q, pi));
            if (!inserted) {
                it->second.first += q;
                it->second.second = -1;  // merged from several matches
            }
        }
    }

    ReweightSet out;
    for (const auto& [edge, entry] : mass) {
        const auto& [q_sum, provenance] = entry;
        const double p_old = other_graph.edges[edge].p;
        double p_new = combine == CombineRule::independent_or
                           ? 1.0 - (1.0 - p_old) * (1.0 - q_sum)
                           : q_sum;
        p_new = std::min(p_new, kReweightClamp);
        out.push_back(ReweightEntry{other_graph.basis, edge, p_new, provenance});
    }
    return out;
}

CorrelatedResult correlated_decode(const std::array<DetectorGraph, 2>& graphs, SimMode mode,
                                   const SyndromeInstance& syndrome, uint64_t seed,
                                   const CorrelatedOptions& options) {
    CorrelatedResult res;

    // Pass 1: independent matching, one jitter stream per basis reused
    // identically in pass 2.
    std::array<std::vector<double>, 2> weights;
    std::array<uint64_t, 2> jitter_seed;
    for (StabBasis b : kBothBases) {
        const size_t bi = basis_index(b);
        weights[bi] = graphs[bi].base_weights();
        jitter_seed[bi] = child_seed(seed, bi);
        res.first_pass[bi] =
            decode(graphs[bi], weights[bi], syndrome.of(b), jitter_seed[bi], options.decode);
    }

    // Symmetric reweighting from both pass-1 unit-match sets.
    for (StabBasis b : kBothBases) {
        const size_t bi = basis_index(b);
        const size_t oi = basis_index(other_basis(b));
        const auto units = find_unit_matches(res.first_pass[bi].matching);
        res.reweights[oi] =
            mode == SimMode::perfect_2d
                ? reweight_2d(units, res.first_pass[bi].matching, graphs[bi])
                : reweight_3d(units, res.first_pass[bi].matching, graphs[bi], graphs[oi],
                              options.combine);
    }

    if (res.reweights[0].empty() && res.reweights[1].empty()) {
        res.result = res.first_pass;
        return res;
    }

    // Pass 2: apply the reweights and re-decode both graphs from scratch
    // with the same jitter streams.
    for (StabBasis b : kBothBases) {
        const size_t bi = basis_index(b);
        for (const ReweightEntry& r : res.reweights[bi]) {
            if (!(r.new_p > 0.0 && r.new_p < 1.0))
                throw std::logic_error("correlated_decode: reweighted probability out of (0,1)");
            weights[bi][r.edge] = -std::log(r.new_p);
        }
        res.result[bi] =
            decode(graphs[bi], weights[bi], syndrome.of(b), jitter_seed[bi], options.decode);
    }
    res.second_pass = true;
    return res;
}

}  // namespace scmatch
