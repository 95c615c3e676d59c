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

#include "scmatch/json_io.hpp"

#include <stdexcept>

namespace scmatch {

namespace {

const char* basis_name(StabBasis b) { return b == StabBasis::x ? "x" : "z"; }

StabBasis basis_from_name(const std::string& s) {
    if (s == "x")
        return StabBasis::x;
    if (s == "z")
        return StabBasis::z;
    throw std::invalid_argument("unknown basis name: " + s);
}

ordered_json stabilizers_to_json(const std::vector<Stabilizer>& stabs) {
    ordered_json arr = ordered_json::array();
    for (const Stabilizer& s : stabs) {
        ordered_json rec;
        rec["site"] = {s.site.row, s.site.col};
        rec["data"] = s.data;
        arr.push_back(std::move(rec));
    }
    return arr;
}

}  // namespace

ordered_json layout_to_json(const CodeLayout& layout) {
    ordered_json doc;
    doc["d"] = layout.d;
    ordered_json qubits = ordered_json::array();
    for (const Coord& c : layout.data_qubits)
        qubits.push_back({c.row, c.col});
    doc["data_qubits"] = std::move(qubits);
    doc["x_stabilizers"] = stabilizers_to_json(layout.x_stabilizers);
    doc["z_stabilizers"] = stabilizers_to_json(layout.z_stabilizers);
    doc["logical_x_support"] = layout.logical_x_support;
    doc["logical_z_support"] = layout.logical_z_support;
    doc["boundary_kind"] = {{"x", CodeLayout::boundary_kind(StabBasis::x)},
                            {"z", CodeLayout::boundary_kind(StabBasis::z)}};
    return doc;
}

ordered_json export_graph(const DetectorGraph& graph) {
    ordered_json doc;
    doc["basis"] = basis_name(graph.basis);
    doc["rounds"] = graph.rounds;
    doc["n_sites"] = graph.n_sites;

    ordered_json vertices = ordered_json::array();
    for (size_t v = 0; v < graph.vertices.size(); ++v) {
        const DetVertex& dv = graph.vertices[v];
        ordered_json rec;
        rec["id"] = v;
        rec["row"] = dv.row;
        rec["col"] = dv.col;
        rec["layer"] = dv.layer;
        vertices.push_back(std::move(rec));
    }
    doc["vertices"] = std::move(vertices);

    ordered_json edges = ordered_json::array();
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        const DetEdge& de = graph.edges[e];
        ordered_json rec;
        rec["id"] = e;
        rec["a"] = de.a;
        rec["b"] = de.b == graph.boundary() ? -1 : de.b;
        rec["p"] = de.p;
        rec["w"] = de.w;
        rec["flip"] = de.obs_flip;
        rec["n_sources"] = de.sources.size();
        rec["src_mass"] = de.src_mass;
        ordered_json links = ordered_json::array();
        for (const CrossLink& link : de.links)
            links.push_back({link.p, link.other_edge});
        rec["links"] = std::move(links);
        edges.push_back(std::move(rec));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

DetectorGraph import_graph(const ordered_json& doc) {
    DetectorGraph graph;
    graph.basis = basis_from_name(doc.at("basis").get<std::string>());
    graph.rounds = doc.at("rounds").get<int>();
    graph.n_sites = doc.at("n_sites").get<int32_t>();

    for (const auto& rec : doc.at("vertices"))
        graph.vertices.push_back(DetVertex{rec.at("row").get<int16_t>(),
                                           rec.at("col").get<int16_t>(),
                                           rec.at("layer").get<int16_t>()});
    if (static_cast<int32_t>(graph.vertices.size()) != graph.n_sites)
        throw std::invalid_argument("import_graph: vertex count mismatch");

    for (const auto& rec : doc.at("edges")) {
        DetEdge e;
        e.a = rec.at("a").get<int32_t>();
        e.b = rec.at("b").get<int32_t>();
        if (e.b < 0)
            e.b = graph.boundary();
        e.p = rec.at("p").get<double>();
        e.w = rec.at("w").get<double>();
        e.obs_flip = rec.at("flip").get<bool>();
        e.src_mass = rec.at("src_mass").get<double>();
        e.sources.assign(rec.at("n_sources").get<size_t>(), -1);  // counts only
        for (const auto& link : rec.at("links"))
            e.links.push_back(CrossLink{link.at(0).get<double>(), link.at(1).get<int32_t>()});
        graph.edges.push_back(std::move(e));
    }
    graph.build_adjacency();
    return graph;
}

}  // namespace scmatch
