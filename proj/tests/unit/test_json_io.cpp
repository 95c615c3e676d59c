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

#include <doctest.h>

#include "scmatch/correlated.hpp"
#include "scmatch/json_io.hpp"
#include "scmatch/tracer.hpp"

using namespace scmatch;

TEST_CASE("layout export") {
    CodeLayout l = build_layout(3);
    ordered_json doc = layout_to_json(l);
    CHECK(doc["d"] == 3);
    CHECK(doc["data_qubits"].size() == 13);
    CHECK(doc["x_stabilizers"].size() == 6);
    CHECK(doc["z_stabilizers"].size() == 6);
    CHECK(doc["logical_x_support"].size() == 3);
    CHECK(doc["boundary_kind"]["x"] == "top_bottom");
    CHECK(doc["boundary_kind"]["z"] == "left_right");
    // stable key order for golden files
    auto it = doc.begin();
    CHECK(it.key() == "d");
    ++it;
    CHECK(it.key() == "data_qubits");
}

TEST_CASE("graph export and import round trip") {
    CodeLayout l = build_layout(3);
    DetectorModel m = build_model_3d(l, 2e-3, 3);

    for (StabBasis b : kBothBases) {
        const DetectorGraph& g = m.graph(b);
        DetectorGraph back = import_graph(export_graph(g));
        CHECK(back.basis == g.basis);
        CHECK(back.rounds == g.rounds);
        CHECK(back.n_sites == g.n_sites);
        REQUIRE(back.edges.size() == g.edges.size());
        for (size_t e = 0; e < g.edges.size(); ++e) {
            CHECK(back.edges[e].a == g.edges[e].a);
            CHECK(back.edges[e].b == g.edges[e].b);
            CHECK(back.edges[e].p == g.edges[e].p);
            CHECK(back.edges[e].w == g.edges[e].w);
            CHECK(back.edges[e].obs_flip == g.edges[e].obs_flip);
            CHECK(back.edges[e].src_mass == g.edges[e].src_mass);
            CHECK(back.edges[e].sources.size() == g.edges[e].sources.size());
            REQUIRE(back.edges[e].links.size() == g.edges[e].links.size());
            for (size_t k = 0; k < g.edges[e].links.size(); ++k) {
                CHECK(back.edges[e].links[k].p == g.edges[e].links[k].p);
                CHECK(back.edges[e].links[k].other_edge == g.edges[e].links[k].other_edge);
            }
        }
        // export of the re-import is textually identical
        CHECK(export_graph(back).dump() == export_graph(g).dump());
    }
}

TEST_CASE("empty graph exports an empty edge list") {
    CodeLayout l = build_layout(3);
    DetectorModel m = build_model_2d(l, 0.0);
    ordered_json doc = export_graph(m.graph(StabBasis::x));
    CHECK(doc["edges"].empty());
    CHECK(doc["n_sites"] == 6);
}

TEST_CASE("2D graph edge count equals the data qubit count at d=3") {
    // every data qubit contributes exactly one endpoint pair per basis
    CodeLayout l = build_layout(3);
    DetectorModel m = build_model_2d(l, 1e-3);
    ordered_json doc = export_graph(m.graph(StabBasis::z));
    CHECK(doc["edges"].size() == 13);
    int boundary_edges = 0;
    for (const auto& e : doc["edges"])
        boundary_edges += e["b"].get<int>() == -1;
    CHECK(boundary_edges == 6);
}

TEST_CASE("imported graphs decode like the originals") {
    CodeLayout l = build_layout(3);
    DetectorModel m = build_model_2d(l, 3e-3);
    std::array<DetectorGraph, 2> imported{import_graph(export_graph(m.graph(StabBasis::x))),
                                          import_graph(export_graph(m.graph(StabBasis::z)))};

    for (int seed = 0; seed < 100; ++seed) {
        std::vector<int32_t> ids;
        sample_sources(m, 313 + seed, ids);
        SyndromeInstance syn;
        collect_syndrome(m, ids, syn);
        if (syn.empty())
            continue;
        auto a = correlated_decode(m.graphs, m.mode, syn, seed);
        auto b = correlated_decode(imported, m.mode, syn, seed);
        for (size_t i = 0; i < 2; ++i) {
            CHECK(a.result[i].correction == b.result[i].correction);
            CHECK(a.result[i].obs_flip == b.result[i].obs_flip);
        }
    }
}
