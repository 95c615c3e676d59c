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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scmatch/analytics.hpp"
#include "scmatch/correlated.hpp"
#include "scmatch/harness.hpp"
#include "scmatch/json_io.hpp"
#include "scmatch/tracer.hpp"

namespace py = pybind11;
using namespace scmatch;

namespace {

SimMode mode_from_name(const std::string& s) {
    if (s == "perfect2d")
        return SimMode::perfect_2d;
    if (s == "fault_tolerant3d")
        return SimMode::fault_tolerant_3d;
    throw std::invalid_argument("mode must be perfect2d or fault_tolerant3d");
}

DecoderKind decoder_from_name(const std::string& s) {
    if (s == "independent")
        return DecoderKind::independent;
    if (s == "correlated")
        return DecoderKind::correlated;
    throw std::invalid_argument("decoder must be independent or correlated");
}

py::dict stats_to_dict(const TrialStats& s) {
    py::dict out;
    out["mode"] = sim_mode_name(s.config.mode);
    out["decoder"] = decoder_kind_name(s.config.decoder);
    out["d"] = s.config.d;
    out["p"] = s.config.p;
    out["rounds"] = s.config.effective_rounds();
    out["trials"] = s.trials_run;
    out["failures_x"] = s.failures_x;
    out["failures_z"] = s.failures_z;
    out["p_l"] = s.p_l;
    out["ci_low"] = s.ci.lo;
    out["ci_high"] = s.ci.hi;
    out["seed"] = s.config.seed;
    out["stopped_early"] = s.stopped_early;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "surface-code matching decoder toolkit";

    m.def("layout_json", [](int d) { return layout_to_json(build_layout(d)).dump(); },
          py::arg("d"), "Code layout as a JSON string.");

    m.def(
        "detector_graph_json",
        [](const std::string& mode, int d, double p, int rounds, const std::string& basis) {
            CodeLayout layout = build_layout(d);
            SimMode sm = mode_from_name(mode);
            DetectorModel model = sm == SimMode::perfect_2d
                                      ? build_model_2d(layout, p)
                                      : build_model_3d(layout, p, rounds > 0 ? rounds : d);
            StabBasis b = basis == "x" ? StabBasis::x : StabBasis::z;
            return export_graph(model.graph(b)).dump();
        },
        py::arg("mode"), py::arg("d"), py::arg("p"), py::arg("rounds") = 0,
        py::arg("basis") = "z", "Detector graph for one basis as a JSON string.");

    m.def(
        "decode_events",
        [](const std::string& mode, int d, double p, int rounds,
           const std::vector<int32_t>& events_x, const std::vector<int32_t>& events_z,
           uint64_t seed, bool correlated) {
            CodeLayout layout = build_layout(d);
            SimMode sm = mode_from_name(mode);
            DetectorModel model = sm == SimMode::perfect_2d
                                      ? build_model_2d(layout, p)
                                      : build_model_3d(layout, p, rounds > 0 ? rounds : d);
            SyndromeInstance syn;
            syn.of(StabBasis::x) = events_x;
            syn.of(StabBasis::z) = events_z;
            py::dict out;
            if (correlated) {
                auto res = correlated_decode(model.graphs, sm, syn, seed);
                out["correction_x"] = res.result[0].correction;
                out["correction_z"] = res.result[1].correction;
                out["flip_x"] = res.result[0].obs_flip;
                out["flip_z"] = res.result[1].obs_flip;
                out["second_pass"] = res.second_pass;
            } else {
                auto res = decode_independent(model.graphs, syn, seed);
                out["correction_x"] = res[0].correction;
                out["correction_z"] = res[1].correction;
                out["flip_x"] = res[0].obs_flip;
                out["flip_z"] = res[1].obs_flip;
            }
            return out;
        },
        py::arg("mode"), py::arg("d"), py::arg("p"), py::arg("rounds"), py::arg("events_x"),
        py::arg("events_z"), py::arg("seed"), py::arg("correlated") = false,
        "Decode one syndrome; event ids are detector-graph vertex ids.");

    m.def(
        "run",
        [](const std::string& mode, const std::string& decoder, int d, double p, int rounds,
           uint64_t trials, uint64_t seed, int workers) {
            TrialConfig c;
            c.mode = mode_from_name(mode);
            c.decoder = decoder_from_name(decoder);
            c.d = d;
            c.p = p;
            c.rounds = rounds;
            c.trials = trials;
            c.seed = seed;
            c.workers = workers;
            TrialStats s;
            {
                py::gil_scoped_release release;
                s = run(c);
            }
            return stats_to_dict(s);
        },
        py::arg("mode"), py::arg("decoder"), py::arg("d"), py::arg("p"), py::arg("rounds"),
        py::arg("trials"), py::arg("seed"), py::arg("workers") = 0,
        "Run one Monte Carlo cell and return its statistics.");

    m.def("pl_basic", &pl_basic, py::arg("d"), py::arg("p"),
          "Leading-order logical X rate of independent matching.");
    m.def("pl_ideal", &pl_ideal, py::arg("d"), py::arg("p"),
          "Leading-order rate with correlations fully exploited.");
    m.def(
        "eq1_ratio",
        [](int n) {
            Rational r = eq1_ratio(n);
            return py::make_tuple(r.num, r.den);
        },
        py::arg("n"), "Adjacent-binomial ratio as an exact (num, den) pair.");
    m.def(
        "census_no_odd_y_chain",
        [](int n, int k, int workers) {
            CensusResult r;
            {
                py::gil_scoped_release release;
                r = census_no_odd_y_chain(n, k, workers > 0 ? workers : 1);
            }
            py::dict out;
            out["total"] = r.total;
            out["no_odd_chain"] = r.no_odd_chain;
            out["fraction"] = r.fraction;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("workers") = 1);
    m.def("fig4_paths", [] {
        Fig4Counts c = count_fig4_paths();
        py::dict out;
        out["pair_paths_len7"] = c.pair_paths_len7;
        out["boundary_len6"] = c.boundary_len6;
        out["boundary_len7"] = c.boundary_len7;
        out["crossover"] = py::make_tuple(c.crossover.num, c.crossover.den);
        return out;
    });
    m.def(
        "wilson_interval",
        [](uint64_t failures, uint64_t trials, double confidence) {
            Interval i = wilson_interval(failures, trials, confidence);
            return py::make_tuple(i.lo, i.hi);
        },
        py::arg("failures"), py::arg("trials"), py::arg("confidence") = 0.95);
}
