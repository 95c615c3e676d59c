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

#ifndef SCMATCH_DIJKSTRA_HPP
#define SCMATCH_DIJKSTRA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "scmatch/detector_graph.hpp"

namespace scmatch {

/// Exact single-source shortest paths over a detector graph with positive
/// edge weights. Unreachable vertices report an infinite distance. Paths are
/// recovered from edge predecessors.
class ShortestPaths {
  public:
    void run(const DetectorGraph& graph, std::span<const double> weights, int32_t source);

    double dist(int32_t v) const { return dist_[v]; }

    /// Edge ids along the shortest path from the source to v.
    void path_to(int32_t v, std::vector<int32_t>& out) const;

  private:
    const DetectorGraph* graph_ = nullptr;
    int32_t source_ = -1;
    std::vector<double> dist_;
    std::vector<int32_t> pred_edge_;
    std::vector<std::pair<double, int32_t>> heap_;
};

}  // namespace scmatch

#endif
