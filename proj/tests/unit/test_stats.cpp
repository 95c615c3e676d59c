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

#include <cmath>
#include <stdexcept>

#include "scmatch/stats.hpp"

using namespace scmatch;

TEST_CASE("wilson interval") {
    SUBCASE("zero failures anchor the lower bound at 0") {
        Interval i = wilson_interval(0, 100);
        CHECK(i.lo == 0.0);
        CHECK(i.hi > 0.0);
        CHECK(i.hi < 0.1);
    }
    SUBCASE("50/100 is near-symmetric around 0.5 with width about 0.19") {
        Interval i = wilson_interval(50, 100);
        CHECK(i.contains(0.5));
        CHECK(std::abs((i.hi + i.lo) / 2 - 0.5) < 1e-6);
        CHECK(i.hi - i.lo == doctest::Approx(0.19).epsilon(0.02));
    }
    SUBCASE("all failures anchor the upper bound at 1") {
        Interval i = wilson_interval(100, 100);
        CHECK(i.hi == 1.0);
        CHECK(i.lo < 1.0);
    }
    SUBCASE("interval contains the point estimate") {
        for (uint64_t f : {0ull, 1ull, 5ull, 50ull, 99ull, 100ull})
            CHECK(wilson_interval(f, 100).contains(f / 100.0));
    }
    SUBCASE("failures above trials rejected") {
        CHECK_THROWS_AS(wilson_interval(5, 4), std::invalid_argument);
    }
}

TEST_CASE("inverse normal cdf") {
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963985).epsilon(1e-8));
    CHECK(inverse_normal_cdf(0.025) == doctest::Approx(-1.959963985).epsilon(1e-8));
}

TEST_CASE("fit_slope") {
    SUBCASE("exact quadratic data fits slope 2.00") {
        std::vector<std::pair<double, double>> pts;
        for (double p : {1e-3, 2e-3, 4e-3, 8e-3})
            pts.push_back({p, 3.0 * p * p});
        SlopeFit f = fit_slope(pts);
        REQUIRE(f.ok);
        CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("insufficient data is flagged") {
        CHECK_FALSE(fit_slope({{1e-3, 1e-6}, {2e-3, 4e-6}}).ok);
        // zero-failure points are dropped before the count
        CHECK_FALSE(fit_slope({{1e-3, 0.0}, {2e-3, 4e-6}, {3e-3, 9e-6}}).ok);
    }
}
