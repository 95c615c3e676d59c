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

#ifndef SCMATCH_ANALYTICS_HPP
#define SCMATCH_ANALYTICS_HPP

#include <cstdint>
#include <vector>

namespace scmatch {

struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// C(n, ceil(n/2)) / C(n, ceil(n/2)+1) as an exact reduced rational. The
/// ratio of adjacent binomials collapses to (k+1)/(n-k) with k = ceil(n/2);
/// it exceeds 1 for every finite n and tends to 1, which is why patterns of
/// more than the minimum error count along a path contribute negligibly.
Rational eq1_ratio(int n);

/// Leading-order logical X error rate of basic (independent) matching:
/// (d/2) C(d, d/2) (2p/3)^(d/2). Even d only.
double pl_basic(int d, double p);

/// Leading-order rate when correlations are fully exploited:
/// (d/2) C(d, d/2) (p/3)^(d/2). Even d only; pl_basic / pl_ideal = 2^(d/2).
double pl_ideal(int d, double p);

struct CensusResult {
    uint64_t total = 0;          // C(n,k) * 2^k labeled strings
    uint64_t no_odd_chain = 0;   // strings whose every maximal Y run is even
    double fraction = 0.0;
};

/// Exhaustive census of k-error X/Y strings on an n-site path. A Y chain is
/// a maximal run of Y labels on consecutive path sites; a gap or an X label
/// breaks the chain. Counts the strings with no odd-length Y chain (these
/// are the ones correlation reweighting cannot rescue). n is capped at 24.
CensusResult census_no_odd_y_chain(int n, int k, int workers = 1);

struct Fig4Counts {
    int64_t pair_paths_len7 = 0;  // minimum-length pathways joining the events
    int64_t boundary_len6 = 0;    // boundary pairings of total length 6
    int64_t boundary_len7 = 0;    // boundary pairings of total length 7
    Rational crossover;           // p above which pairing the events wins
};

/// Exhaustive path census for the two-detection-event instance on a
/// distance-9 lattice: events separated by (3,4) with nearest boundary
/// distance 3 on each side, matchable only to the left/right boundaries.
/// The crossover solves pair_count p^7 = p^6 + boundary7 p^7.
Fig4Counts count_fig4_paths();

}  // namespace scmatch

#endif
