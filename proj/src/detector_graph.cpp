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

#include "scmatch/detector_graph.hpp"

#include <cmath>

namespace scmatch {

std::vector<double> DetectorGraph::base_weights() const {
    std::vector<double> w(edges.size());
    for (size_t e = 0; e < edges.size(); ++e)
        w[e] = edges[e].w;
    return w;
}

void DetectorGraph::build_adjacency() {
    const int32_t nv = num_vertices();
    adj_offsets.assign(nv + 1, 0);
    for (const DetEdge& e : edges) {
        ++adj_offsets[e.a + 1];
        ++adj_offsets[e.b + 1];
    }
    for (int32_t v = 0; v < nv; ++v)
        adj_offsets[v + 1] += adj_offsets[v];
    adj_edges.assign(adj_offsets[nv], 0);
    std::vector<int32_t> cursor(adj_offsets.begin(), adj_offsets.end() - 1);
    for (size_t e = 0; e < edges.size(); ++e) {
        adj_edges[cursor[edges[e].a]++] = static_cast<int32_t>(e);
        adj_edges[cursor[edges[e].b]++] = static_cast<int32_t>(e);
    }
}

}  // namespace scmatch
