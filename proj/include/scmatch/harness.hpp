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

#ifndef SCMATCH_HARNESS_HPP
#define SCMATCH_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "scmatch/correlated.hpp"
#include "scmatch/detector_graph.hpp"
#include "scmatch/stats.hpp"

namespace scmatch {

enum class DecoderKind : uint8_t { independent, correlated };

const char* sim_mode_name(SimMode m);
const char* decoder_kind_name(DecoderKind k);

/// Approximate physical error rates below which the leading-order analysis
/// holds, for report captions: perfect measurement and fault tolerant.
inline constexpr double kLeadingOrderCrossover2d = 1e-2;
inline constexpr double kLeadingOrderCrossover3d = 2e-4;

struct TrialConfig {
    SimMode mode = SimMode::perfect_2d;
    DecoderKind decoder = DecoderKind::independent;
    int d = 3;
    double p = 1e-3;
    int rounds = 0;  // fault-tolerant mode; 0 means rounds = d
    uint64_t trials = 1;
    uint64_t seed = 0;   // master seed; child seeds are derived per trial
    int workers = 0;     // 0: SCMATCH_WORKERS env var, else hardware
    uint64_t early_stop_failures = 0;  // 0 disables the early-stop rule
    uint64_t min_trials = 0;           // floor when early stopping

    int effective_rounds() const {
        return mode == SimMode::fault_tolerant_3d ? (rounds > 0 ? rounds : d) : 0;
    }
    void validate() const;
};

struct TrialStats {
    TrialConfig config;
    uint64_t trials_run = 0;
    uint64_t failures_x = 0;  // logical X failures (the reported statistic)
    uint64_t failures_z = 0;
    double p_l = 0.0;  // per trial (2D) or per measurement round (3D)
    Interval ci;       // on the same scale as p_l
    double wall_seconds = 0.0;
    bool stopped_early = false;
};

/// Runs one Monte Carlo cell. Bit-identical totals for identical
/// (config, seed) regardless of worker count.
TrialStats run(const TrialConfig& config);

/// Same, but reusing a prebuilt model (must match mode/d/p/rounds).
TrialStats run(const TrialConfig& config, const DetectorModel& model);

/// One run per (d, p) grid point.
std::vector<TrialStats> sweep(const std::vector<int>& d_list, const std::vector<double>& p_list,
                              const TrialConfig& base);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const TrialStats& stats);

/// Worker count resolution: explicit > SCMATCH_WORKERS env > hardware.
int resolve_workers(int requested);

}  // namespace scmatch

#endif
