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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "scmatch/analytics.hpp"
#include "scmatch/circuit.hpp"
#include "scmatch/harness.hpp"
#include "scmatch/json_io.hpp"
#include "scmatch/tracer.hpp"

namespace {

using namespace scmatch;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

ordered_json stats_to_json(const TrialStats& s) {
    ordered_json doc;
    doc["mode"] = sim_mode_name(s.config.mode);
    doc["decoder"] = decoder_kind_name(s.config.decoder);
    doc["d"] = s.config.d;
    doc["p"] = s.config.p;
    doc["rounds"] = s.config.effective_rounds();
    doc["trials"] = s.trials_run;
    doc["failures_x"] = s.failures_x;
    doc["failures_z"] = s.failures_z;
    doc["p_l"] = s.p_l;
    doc["ci_low"] = s.ci.lo;
    doc["ci_high"] = s.ci.hi;
    doc["seed"] = s.config.seed;
    doc["stopped_early"] = s.stopped_early;
    doc["wall_seconds"] = s.wall_seconds;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface-code matching decoder toolkit"};
    app.require_subcommand(1);

    // ---- layout ----
    auto* layout_cmd = app.add_subcommand("layout", "emit the code layout as JSON");
    int layout_d = 3;
    std::string layout_out;
    layout_cmd->add_option("--distance", layout_d, "code distance")->required();
    layout_cmd->add_option("--out", layout_out, "output path (default stdout)");

    // ---- trace ----
    auto* trace_cmd =
        app.add_subcommand("trace", "build detector graphs and emit them as JSON");
    int trace_d = 3, trace_rounds = 0;
    double trace_p = 1e-3;
    std::string trace_mode = "perfect2d", trace_basis = "both", trace_out;
    bool trace_circuit = false;
    trace_cmd->add_option("--distance", trace_d, "code distance")->required();
    trace_cmd->add_option("--error-rate", trace_p, "depolarizing probability p")->required();
    trace_cmd->add_option("--mode", trace_mode, "perfect2d or fault_tolerant3d")
        ->check(CLI::IsMember({"perfect2d", "fault_tolerant3d"}));
    trace_cmd->add_option("--rounds", trace_rounds, "measurement rounds (default d)");
    trace_cmd->add_option("--basis", trace_basis, "x, z, or both")
        ->check(CLI::IsMember({"x", "z", "both"}));
    trace_cmd->add_flag("--circuit", trace_circuit,
                        "dump the syndrome-extraction circuit as text instead");
    trace_cmd->add_option("--out", trace_out, "output path (default stdout)");

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand("simulate", "run one Monte Carlo cell");
    TrialConfig sim;
    std::string sim_mode = "perfect2d", sim_decoder = "independent", sim_out;
    bool sim_csv = false;
    uint64_t sim_trials = 0, sim_seed = 0;
    sim_cmd->add_option("--mode", sim_mode, "perfect2d or fault_tolerant3d")
        ->check(CLI::IsMember({"perfect2d", "fault_tolerant3d"}));
    sim_cmd->add_option("--decoder", sim_decoder, "independent or correlated")
        ->check(CLI::IsMember({"independent", "correlated"}));
    sim_cmd->add_option("--distance", sim.d, "code distance")->required();
    sim_cmd->add_option("--error-rate", sim.p, "depolarizing probability p")->required();
    sim_cmd->add_option("--rounds", sim.rounds, "measurement rounds (default d)");
    sim_cmd->add_option("--trials", sim_trials, "number of trials")->required();
    sim_cmd->add_option("--seed", sim_seed, "master seed (mandatory, no silent entropy)")
        ->required();
    sim_cmd->add_option("--workers", sim.workers,
                        "worker threads (default SCMATCH_WORKERS or hardware)");
    sim_cmd->add_option("--early-stop-failures", sim.early_stop_failures,
                        "stop a cell once this many X failures accumulate (0 = off)");
    sim_cmd->add_option("--min-trials", sim.min_trials, "trial floor when early stopping");
    sim_cmd->add_flag("--csv", sim_csv, "emit a CSV row instead of JSON");
    sim_cmd->add_option("--out", sim_out, "output path (default stdout)");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "run a (d, p) grid and emit CSV");
    std::vector<int> sweep_d;
    std::vector<double> sweep_p;
    TrialConfig sweep_base;
    std::string sweep_mode = "perfect2d", sweep_decoder = "independent", sweep_out;
    uint64_t sweep_trials = 0, sweep_seed = 0;
    sweep_cmd->add_option("--distances", sweep_d, "code distances")->required();
    sweep_cmd->add_option("--error-rates", sweep_p, "depolarizing probabilities")->required();
    sweep_cmd->add_option("--mode", sweep_mode, "perfect2d or fault_tolerant3d")
        ->check(CLI::IsMember({"perfect2d", "fault_tolerant3d"}));
    sweep_cmd->add_option("--decoder", sweep_decoder, "independent or correlated")
        ->check(CLI::IsMember({"independent", "correlated"}));
    sweep_cmd->add_option("--rounds", sweep_base.rounds, "measurement rounds (default d)");
    sweep_cmd->add_option("--trials", sweep_trials, "trials per cell")->required();
    sweep_cmd->add_option("--seed", sweep_seed, "master seed (mandatory)")->required();
    sweep_cmd->add_option("--workers", sweep_base.workers, "worker threads");
    sweep_cmd->add_option("--early-stop-failures", sweep_base.early_stop_failures,
                          "stop a cell once this many X failures accumulate (0 = off)");
    sweep_cmd->add_option("--min-trials", sweep_base.min_trials, "trial floor when early stopping");
    sweep_cmd->add_option("--out", sweep_out, "output path (default stdout)");

    // ---- analytic ----
    auto* analytic_cmd =
        app.add_subcommand("analytic", "closed-form rates and the binomial-ratio check");
    int an_d = 4, an_ratio_n = 0;
    double an_p = 1e-3;
    analytic_cmd->add_option("--distance", an_d, "code distance (even)");
    analytic_cmd->add_option("--error-rate", an_p, "depolarizing probability p");
    analytic_cmd->add_option("--ratio-n", an_ratio_n,
                             "also report the adjacent-binomial ratio at this path length");

    // ---- census ----
    auto* census_cmd = app.add_subcommand("census", "odd-Y-chain census over error strings");
    int census_n = 20, census_k = 10, census_workers = 0;
    census_cmd->add_option("--path-length", census_n, "path length n (<= 24)")->required();
    census_cmd->add_option("--errors", census_k, "error count k")->required();
    census_cmd->add_option("--workers", census_workers, "worker threads");

    // ---- paths ----
    auto* paths_cmd =
        app.add_subcommand("paths", "two-event path census and matching crossover");

    try {
        app.parse(argc, argv);

        if (*layout_cmd) {
            std::ofstream file;
            std::ostream& out = open_output(layout_out, file);
            out << layout_to_json(build_layout(layout_d)).dump(2) << '\n';
        } else if (*trace_cmd) {
            CodeLayout layout = build_layout(trace_d);
            std::ofstream file;
            std::ostream& out = open_output(trace_out, file);
            if (trace_circuit) {
                if (trace_mode != "fault_tolerant3d")
                    throw CLI::ValidationError("--circuit",
                                               "circuit dump requires fault_tolerant3d");
                dump_circuit(
                    build_cycle_circuit(layout, trace_rounds > 0 ? trace_rounds : trace_d), out);
            } else {
                DetectorModel model =
                    trace_mode == "perfect2d"
                        ? build_model_2d(layout, trace_p)
                        : build_model_3d(layout, trace_p,
                                         trace_rounds > 0 ? trace_rounds : trace_d);
                if (trace_basis == "both") {
                    ordered_json doc;
                    doc["x"] = export_graph(model.graph(StabBasis::x));
                    doc["z"] = export_graph(model.graph(StabBasis::z));
                    out << doc.dump(2) << '\n';
                } else {
                    StabBasis b = trace_basis == "x" ? StabBasis::x : StabBasis::z;
                    out << export_graph(model.graph(b)).dump(2) << '\n';
                }
            }
        } else if (*sim_cmd) {
            sim.mode = sim_mode == "perfect2d" ? SimMode::perfect_2d : SimMode::fault_tolerant_3d;
            sim.decoder =
                sim_decoder == "independent" ? DecoderKind::independent : DecoderKind::correlated;
            sim.trials = sim_trials;
            sim.seed = sim_seed;
            sim.validate();
            TrialStats stats = run(sim);
            std::ofstream file;
            std::ostream& out = open_output(sim_out, file);
            if (sim_csv) {
                write_csv_header(out);
                write_csv_row(out, stats);
            } else {
                out << stats_to_json(stats).dump() << '\n';
            }
        } else if (*sweep_cmd) {
            sweep_base.mode =
                sweep_mode == "perfect2d" ? SimMode::perfect_2d : SimMode::fault_tolerant_3d;
            sweep_base.decoder = sweep_decoder == "independent" ? DecoderKind::independent
                                                                : DecoderKind::correlated;
            sweep_base.trials = sweep_trials;
            sweep_base.seed = sweep_seed;
            sweep_base.validate();
            std::ofstream file;
            std::ostream& out = open_output(sweep_out, file);
            write_csv_header(out);
            for (const TrialStats& stats : sweep(sweep_d, sweep_p, sweep_base)) {
                write_csv_row(out, stats);
                out.flush();
            }
        } else if (*analytic_cmd) {
            ordered_json doc;
            doc["d"] = an_d;
            doc["p"] = an_p;
            doc["pl_basic"] = pl_basic(an_d, an_p);
            doc["pl_ideal"] = pl_ideal(an_d, an_p);
            doc["gain"] = pl_basic(an_d, an_p) / pl_ideal(an_d, an_p);
            if (an_ratio_n > 0) {
                Rational r = eq1_ratio(an_ratio_n);
                doc["eq1_ratio"] = {{"n", an_ratio_n},
                                    {"num", r.num},
                                    {"den", r.den},
                                    {"value", r.value()}};
            }
            std::cout << doc.dump() << '\n';
        } else if (*census_cmd) {
            CensusResult r =
                census_no_odd_y_chain(census_n, census_k, resolve_workers(census_workers));
            ordered_json doc;
            doc["n"] = census_n;
            doc["k"] = census_k;
            doc["total"] = r.total;
            doc["no_odd_chain"] = r.no_odd_chain;
            doc["fraction"] = r.fraction;
            std::cout << doc.dump() << '\n';
        } else if (*paths_cmd) {
            Fig4Counts c = count_fig4_paths();
            ordered_json doc;
            doc["pair_paths_len7"] = c.pair_paths_len7;
            doc["boundary_len6"] = c.boundary_len6;
            doc["boundary_len7"] = c.boundary_len7;
            doc["crossover"] = {{"num", c.crossover.num}, {"den", c.crossover.den}};
            doc["crossover_p"] = c.crossover.value();
            std::cout << doc.dump() << '\n';
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
