# Copyright 2026 scmatch Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import scmatch


def test_layout_counts():
    doc = json.loads(scmatch.layout_json(4))
    assert doc["d"] == 4
    assert len(doc["data_qubits"]) == 25
    assert len(doc["x_stabilizers"]) == 12
    assert len(doc["z_stabilizers"]) == 12
    assert len(doc["logical_x_support"]) == 4


def test_analytics_values():
    assert math.isclose(scmatch.pl_basic(4, 1e-3), 5.333e-6, rel_tol=1e-3)
    assert math.isclose(
        scmatch.pl_basic(4, 1e-3) / scmatch.pl_ideal(4, 1e-3), 4.0, rel_tol=1e-12
    )
    assert scmatch.eq1_ratio(2) == (2, 1)
    assert scmatch.eq1_ratio(100) == (51, 50)


def test_fig4_paths():
    counts = scmatch.fig4_paths()
    assert counts["pair_paths_len7"] == 35
    assert counts["boundary_len6"] == 1
    assert counts["boundary_len7"] == 12
    assert counts["crossover"] == (1, 23)


def test_census_small():
    r = scmatch.census_no_odd_y_chain(2, 1)
    assert r["total"] == 4
    assert r["no_odd_chain"] == 2


def test_detector_graph_roundtrip_fields():
    doc = json.loads(scmatch.detector_graph_json("perfect2d", 3, 1e-3, 0, "z"))
    assert doc["basis"] == "z"
    assert doc["n_sites"] == 6
    assert len(doc["edges"]) == 13
    for edge in doc["edges"]:
        assert 0.0 < edge["p"] < 1.0
        assert edge["w"] > 0.0


def test_run_is_deterministic():
    kwargs = dict(
        mode="fault_tolerant3d",
        decoder="correlated",
        d=3,
        p=2e-3,
        rounds=0,
        trials=20000,
        seed=7,
    )
    a = scmatch.run(workers=1, **kwargs)
    b = scmatch.run(workers=2, **kwargs)
    assert a["failures_x"] == b["failures_x"]
    assert a["failures_z"] == b["failures_z"]
    assert a["rounds"] == 3


def test_decode_events_fig2_scenario():
    # Y at (2,2) plus Z at (2,0) on d=4: the correlated pass always finds the
    # left-running chain; independent matching resolves it at random.
    doc = json.loads(scmatch.detector_graph_json("perfect2d", 4, 3e-3, 0, "x"))
    # the single ambiguous X-stabilizer event sits at grid (2, 3)
    event = next(v["id"] for v in doc["vertices"] if v["row"] == 2 and v["col"] == 3)
    # the Y's two Z-stabilizer events sit at grid (1, 2) and (3, 2)
    zdoc = json.loads(scmatch.detector_graph_json("perfect2d", 4, 3e-3, 0, "z"))
    zev = [v["id"] for v in zdoc["vertices"] if v["col"] == 2 and v["row"] in (1, 3)]
    assert len(zev) == 2

    vertex_col = {v["id"]: v["col"] for v in doc["vertices"]}

    def correction_cols(edge_ids):
        cols = set()
        for e in doc["edges"]:
            if e["id"] in edge_ids:
                cols.add(vertex_col[e["a"]])
                if e["b"] >= 0:
                    cols.add(vertex_col[e["b"]])
        return cols

    for seed in range(200):
        res = scmatch.decode_events(
            "perfect2d", 4, 3e-3, 0, [event], zev, seed, correlated=True
        )
        assert res["second_pass"]
        assert len(res["correction_x"]) == 2
        # the reweighted left-running chain is always chosen
        assert min(correction_cols(res["correction_x"])) == 1


def test_wilson_interval():
    lo, hi = scmatch.wilson_interval(0, 100)
    assert lo == 0.0 and 0 < hi < 0.1
