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

#include "scmatch/dijkstra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace scmatch {

void ShortestPaths::run(const DetectorGraph& graph, std::span<const double> weights,
                        int32_t source) {
    graph_ = &graph;
    source_ = source;
    const int32_t nv = graph.num_vertices();
    dist_.assign(nv, std::numeric_limits<double>::infinity());
    pred_edge_.assign(nv, -1);
    heap_.clear();

    dist_[source] = 0.0;
    heap_.push_back({0.0, source});
    auto cmp = [](const std::pair<double, int32_t>& a, const std::pair<double, int32_t>& b) {
        return a.first > b.first;
    };

    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp);
        auto [d, v] = heap_.back();
        heap_.pop_back();
        if (d > dist_[v])
            continue;  // stale entry
        for (int32_t i = graph.adj_offsets[v]; i < graph.adj_offsets[v + 1]; ++i) {
            const int32_t e = graph.adj_edges[i];
            const int32_t u = graph.other_endpoint(e, v);
            const double nd = d + weights[e];
            if (nd < dist_[u]) {
                dist_[u] = nd;
                pred_edge_[u] = e;
                heap_.push_back({nd, u});
                std::push_heap(heap_.begin(), heap_.end(), cmp);
            }
        }
    }
}

void ShortestPaths::path_to(int32_t v, std::vector<int32_t>& out) const {
    out.clear();
    if (dist_[v] == std::numeric_limits<double>::infinity())
        throw std::invalid_argument("ShortestPaths::path_to: vertex unreachable");
    while (v != source_) {
        const int32_t e = pred_edge_[v];
        out.push_back(e);
        v = graph_->other_endpoint(e, v);
    }
}

}  // namespace scmatch
