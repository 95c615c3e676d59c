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

#include "scmatch/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "scmatch/decoder.hpp"
#include "scmatch/rng.hpp"
#include "scmatch/tracer.hpp"

namespace scmatch {

const char* sim_mode_name(SimMode m) {
    return m == SimMode::perfect_2d ? "perfect2d" : "fault_tolerant3d";
}

const char* decoder_kind_name(DecoderKind k) {
    return k == DecoderKind::independent ? "independent" : "correlated";
}

void TrialConfig::validate() const {
    if (d < 2)
        throw std::invalid_argument("config: d must be >= 2");
    if (!(p >= 0.0 && p < 0.5))
        throw std::invalid_argument("config: p must be in [0, 0.5)");
    if (trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (mode == SimMode::fault_tolerant_3d && rounds < 0)
        throw std::invalid_argument("config: rounds must be >= 1");
}

int resolve_workers(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("SCMATCH_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct WorkerTotals {
    uint64_t failures_x = 0;
    uint64_t failures_z = 0;
};

// Runs trials [lo, hi); the per-trial child seed stream makes the result
// independent of how trials are split across workers.
WorkerTotals run_range(const DetectorModel& model, const TrialConfig& config, uint64_t lo,
                       uint64_t hi) {
    WorkerTotals totals;
    std::vector<int32_t> source_ids;
    SyndromeInstance syndrome;
    const CorrelatedOptions copts;

    for (uint64_t i = lo; i < hi; ++i) {
        const uint64_t tseed = child_seed(config.seed, i);
        sample_sources(model, tseed, source_ids);
        if (source_ids.empty())
            continue;

        const std::array<bool, 2> actual = collect_syndrome(model, source_ids, syndrome);
        std::array<bool, 2> corr{false, false};
        if (!syndrome.empty()) {
            const uint64_t dseed = child_seed(tseed, 0x5eedULL);
            if (config.decoder == DecoderKind::independent) {
                auto res = decode_independent(model.graphs, syndrome, dseed, copts.decode);
                corr = {res[0].obs_flip, res[1].obs_flip};
            } else {
                auto res = correlated_decode(model.graphs, model.mode, syndrome, dseed, copts);
                corr = {res.result[0].obs_flip, res.result[1].obs_flip};
            }
        }
        // The Z-stabilizer graph (index 1) guards the logical X readout.
        if (actual[1] != corr[1])
            ++totals.failures_x;
        if (actual[0] != corr[0])
            ++totals.failures_z;
    }
    return totals;
}

}  // namespace

TrialStats run(const TrialConfig& config, const DetectorModel& model) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    TrialStats stats;
    stats.config = config;
    const int workers = resolve_workers(config.workers);

    const uint64_t wave =
        config.early_stop_failures > 0 ? std::min<uint64_t>(config.trials, 1u << 20) : config.trials;

    uint64_t done = 0;
    while (done < config.trials) {
        const uint64_t batch = std::min<uint64_t>(wave, config.trials - done);
        std::vector<WorkerTotals> partial(workers);
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            const uint64_t lo = done + batch * t / workers;
            const uint64_t hi = done + batch * (t + 1) / workers;
            pool.emplace_back([&, t, lo, hi] { partial[t] = run_range(model, config, lo, hi); });
        }
        for (auto& th : pool)
            th.join();
        for (const auto& p : partial) {
            stats.failures_x += p.failures_x;
            stats.failures_z += p.failures_z;
        }
        done += batch;
        if (config.early_stop_failures > 0 && stats.failures_x >= config.early_stop_failures &&
            done >= config.min_trials && done < config.trials) {
            stats.stopped_early = true;
            break;
        }
    }
    stats.trials_run = done;

    const double per_trial = static_cast<double>(stats.failures_x) / stats.trials_run;
    Interval ci = wilson_interval(stats.failures_x, stats.trials_run);
    if (config.mode == SimMode::fault_tolerant_3d) {
        // Per-round normalization: p_L = 1 - (1 - P_fail)^(1/rounds).
        const double r = config.effective_rounds();
        auto per_round = [r](double x) { return 1.0 - std::pow(1.0 - x, 1.0 / r); };
        stats.p_l = per_round(per_trial);
        stats.ci = Interval{per_round(ci.lo), per_round(ci.hi)};
    } else {
        stats.p_l = per_trial;
        stats.ci = ci;
    }

    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

TrialStats run(const TrialConfig& config) {
    config.validate();
    const CodeLayout layout = build_layout(config.d);
    const DetectorModel model =
        config.mode == SimMode::perfect_2d
            ? build_model_2d(layout, config.p)
            : build_model_3d(layout, config.p, config.effective_rounds());
    return run(config, model);
}

std::vector<TrialStats> sweep(const std::vector<int>& d_list, const std::vector<double>& p_list,
                              const TrialConfig& base) {
    if (d_list.empty() || p_list.empty())
        throw std::invalid_argument("sweep: d and p lists must be nonempty");
    std::vector<TrialStats> out;
    for (int d : d_list) {
        for (double p : p_list) {
            TrialConfig config = base;
            config.d = d;
            config.p = p;
            out.push_back(run(config));
        }
    }
    return out;
}

void write_csv_header(std::ostream& out) {
    out << "mode,decoder,d,p,rounds,trials,failures_x,failures_z,p_l,ci_low,ci_high,seed\n";
}

void write_csv_row(std::ostream& out, const TrialStats& stats) {
    const TrialConfig& c = stats.config;
    out << sim_mode_name(c.mode) << ',' << decoder_kind_name(c.decoder) << ',' << c.d << ',';
    char buf[64];
    snprintf(buf, sizeof buf, "%.9g", c.p);
    out << buf << ',' << c.effective_rounds() << ',' << stats.trials_run << ','
        << stats.failures_x << ',' << stats.failures_z << ',';
    snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g", stats.p_l, stats.ci.lo, stats.ci.hi);
    out << buf << ',' << c.seed << '\n';
}

}  // namespace scmatch
