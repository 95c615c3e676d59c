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

#include "scmatch/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace scmatch {

double inverse_normal_cdf(double p) {
    if (p <= 0.0 || p >= 1.0)
        throw std::invalid_argument("inverse_normal_cdf: p must be in (0,1)");

    // Peter Acklam's rational approximation with one Halley refinement step.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;

    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Halley refinement against erfc.
    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

Interval wilson_interval(uint64_t failures, uint64_t trials, double confidence) {
    if (failures > trials)
        throw std::invalid_argument("wilson_interval: failures exceed trials");
    if (trials == 0)
        return Interval{0.0, 1.0};

    const double z = inverse_normal_cdf(0.5 + confidence / 2.0);
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    Interval out{center - half, center + half};
    if (out.lo < 0.0 || failures == 0)
        out.lo = failures == 0 ? 0.0 : std::max(out.lo, 0.0);
    if (out.hi > 1.0 || failures == trials)
        out.hi = failures == trials ? 1.0 : std::min(out.hi, 1.0);
    return out;
}

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points) {
    SlopeFit fit;
    std::vector<std::pair<double, double>> logs;
    for (const auto& [x, y] : points)
        if (x > 0.0 && y > 0.0)
            logs.push_back({std::log(x), std::log(y)});
    if (logs.size() < 3)
        return fit;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [lx, ly] : logs) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(logs.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.ok = true;
    return fit;
}

}  // namespace scmatch
