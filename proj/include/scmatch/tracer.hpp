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

#ifndef SCMATCH_TRACER_HPP
#define SCMATCH_TRACER_HPP

#include <cstdint>
#include <vector>

#include "scmatch/detector_graph.hpp"
#include "scmatch/rng.hpp"

namespace scmatch {

/// Enumerates every (gate, channel outcome) pair of the circuit, propagates
/// each lone fault, and records where its detection events land and which
/// logical readouts it flips. Complete: one entry per nontrivial outcome of
/// every noisy gate, in execution order. Empty for p = 0.
std::vector<ErrorSource> trace_all_single_faults(const Circuit& circuit, const NoiseModel& noise,
                                                 const CodeLayout& layout);

/// Aggregates a complete source table into the two basis graphs. Edges are
/// keyed by endpoint pair; p_edge combines sources by independent OR; sources
/// with components in both bases become correlation links. Throws if two
/// sources share an endpoint pair but disagree on the logical flip parity
/// (a layout or tracing bug -- note d=2 is genuinely ambiguous and is
/// rejected here).
std::array<DetectorGraph, 2> build_detector_graphs(std::vector<ErrorSource>& sources,
                                                   const CodeLayout& layout, int rounds);

/// Perfect-measurement model: each data qubit suffers X, Y, Z at p/3 and
/// syndromes are read out ideally, so the graphs are 2D with one edge per
/// data qubit.
DetectorModel build_model_2d(const CodeLayout& layout, double p);

/// Fault-tolerant model: builds the cycle circuit, traces all single faults,
/// and assembles the 3D graphs over (rounds + 1) detection layers.
DetectorModel build_model_3d(const CodeLayout& layout, double p, int rounds);

/// Samples one trial's faults directly as source-table rows (the sampling
/// path used by the Monte Carlo harness). Equivalent to sample_noise plus
/// the (gate, outcome) -> source mapping, at a fraction of the cost.
void sample_sources(const DetectorModel& model, uint64_t seed, std::vector<int32_t>& out);

/// XORs the endpoints of the sampled sources into per-basis detection-event
/// lists and returns the per-basis actual logical flips.
std::array<bool, 2> collect_syndrome(const DetectorModel& model,
                                     const std::vector<int32_t>& source_ids,
                                     SyndromeInstance& syndrome);

}  // namespace scmatch

#endif
