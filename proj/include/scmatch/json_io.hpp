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

#ifndef SCMATCH_JSON_IO_HPP
#define SCMATCH_JSON_IO_HPP

#include <json.hpp>

#include "scmatch/detector_graph.hpp"
#include "scmatch/layout.hpp"

namespace scmatch {

using ordered_json = nlohmann::ordered_json;

/// Layout document: qubit coordinates, stabilizer adjacency, logical
/// supports, boundary kinds. Stable key order for golden-file tests.
ordered_json layout_to_json(const CodeLayout& layout);

/// Detector-graph document. Edges carry endpoints ("b" is -1 for boundary
/// edges), probability, weight, logical flip flag, source count and mass,
/// and correlation links as [source probability, other-basis edge id]
/// pairs. Round-trippable through import_graph.
ordered_json export_graph(const DetectorGraph& graph);

DetectorGraph import_graph(const ordered_json& doc);

}  // namespace scmatch

#endif
