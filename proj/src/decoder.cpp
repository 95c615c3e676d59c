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

#include "scmatch/decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "scmatch/dijkstra.hpp"
#include "scmatch/rng.hpp"

namespace scmatch {

DecodeResult decode(const DetectorGraph& graph, std::span<const double> weights,
                    const std::vector<int32_t>& events, uint64_t jitter_seed,
                    const DecodeOptions& options) {
    DecodeResult result;
    for (int32_t v : events)
        if (v < 0 || v >= graph.n_sites)
            throw std::invalid_argument("decode: event on unknown vertex");
    const int k = static_cast<int>(events.size());
    if (k == 0)
        return result;

    // Per-trial jitter at the detector-edge level; shortest-path sums and
    // matching weights inherit it, so both path and matching degeneracies
    // are sampled uniformly across seeds.
    std::vector<double> jw(weights.begin(), weights.end());
    if (options.jitter_eps > 0.0) {
        Xoshiro256 rng(jitter_seed);
        for (double& w : jw)
            w *= 1.0 + options.jitter_eps * rng.uniform();
    }

    std::vector<ShortestPaths> paths(k);
    for (int i = 0; i < k; ++i)
        paths[i].run(graph, jw, events[i]);

    // Nodes 0..k-1: events; k..2k-1: boundary companions. A companion row
    // costs the event's boundary distance against any event and nothing
    // against other companions, so events may pair to the boundary freely.
    SymMatrix sg(2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j)
            sg.set(i, j, paths[i].dist(events[j]));
        const double db = paths[i].dist(graph.boundary());
        for (int j = k; j < 2 * k; ++j)
            sg.set(i, j, db);
    }

    std::vector<int32_t> mates = mwpm(sg);

    std::vector<int32_t> touched;
    for (int i = 0; i < 2 * k; ++i) {
        const int j = mates[i];
        if (j < i)
            continue;
        MatchedPair pair;
        pair.a = i;
        pair.b = j;
        pair.weight = sg.at(i, j);
        if (i < k) {
            // Event-event or event-boundary: expand along the shortest path.
            paths[i].path_to(j < k ? events[j] : graph.boundary(), pair.path);
            touched.insert(touched.end(), pair.path.begin(), pair.path.end());
        }
        result.matching.total_weight += pair.weight;
        result.matching.pairs.push_back(std::move(pair));
    }

    // XOR-reduce: edges used an even number of times cancel.
    std::sort(touched.begin(), touched.end());
    for (size_t i = 0; i < touched.size();) {
        size_t j = i;
        while (j < touched.size() && touched[j] == touched[i])
            ++j;
        if ((j - i) % 2 != 0) {
            result.correction.push_back(touched[i]);
            result.obs_flip = result.obs_flip != graph.edges[touched[i]].obs_flip;
        }
        i = j;
    }
    return result;
}

std::array<DecodeResult, 2> decode_independent(const std::array<DetectorGraph, 2>& graphs,
                                               const SyndromeInstance& syndrome, uint64_t seed,
                                               const DecodeOptions& options) {
    std::array<DecodeResult, 2> out;
    for (StabBasis b : kBothBases) {
        const size_t bi = basis_index(b);
        const auto w = graphs[bi].base_weights();
        out[bi] = decode(graphs[bi], w, syndrome.of(b), child_seed(seed, bi), options);
    }
    return out;
}

}  // namespace scmatch
