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

#ifndef SCMATCH_STATS_HPP
#define SCMATCH_STATS_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace scmatch {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Wilson score interval for a Bernoulli proportion.
Interval wilson_interval(uint64_t failures, uint64_t trials, double confidence = 0.95);

/// Inverse standard normal CDF (Acklam's rational approximation, ~1e-9
/// relative accuracy).
double inverse_normal_cdf(double p);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    bool ok = false;  // false when fewer than 3 usable points
};

/// Least-squares slope of log(y) against log(x) over points with y > 0.
/// Points with zero failures are dropped; fewer than 3 usable points is
/// flagged rather than silently fitted.
SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace scmatch

#endif
