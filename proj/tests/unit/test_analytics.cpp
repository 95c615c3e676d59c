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

#include "scmatch/analytics.hpp"

using namespace scmatch;

namespace {

// exact binomials up to C(62,31) fit in uint64
uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    uint64_t out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    return out;
}

}  // namespace

TEST_CASE("eq1_ratio") {
    SUBCASE("n=2 gives exactly 2") {
        Rational r = eq1_ratio(2);
        CHECK(r.num == 2);
        CHECK(r.den == 1);
    }
    SUBCASE("n=100 lies in (1, 1.05)") {
        Rational r = eq1_ratio(100);
        CHECK(r.value() > 1.0);
        CHECK(r.value() < 1.05);
    }
    SUBCASE("matches the exact binomial ratio for n <= 60") {
        for (int n = 2; n <= 60; ++n) {
            const int k = (n + 1) / 2;
            Rational r = eq1_ratio(n);
            // cross-multiplied equality with exact binomials
            CHECK(static_cast<uint64_t>(r.num) * binom_u64(n, k + 1) ==
                  static_cast<uint64_t>(r.den) * binom_u64(n, k));
        }
    }
    SUBCASE("strictly decreasing toward 1 over even n <= 200") {
        double prev = eq1_ratio(2).value();
        for (int n = 4; n <= 200; n += 2) {
            double cur = eq1_ratio(n).value();
            CHECK(cur < prev);
            CHECK(cur > 1.0);
            prev = cur;
        }
        CHECK(eq1_ratio(200).value() < 1.02);
    }
}

TEST_CASE("leading-order logical error formulas") {
    SUBCASE("d=4, p=1e-3 gives 5.3e-6") {
        CHECK(std::abs(pl_basic(4, 1e-3) - 5.3e-6) < 0.1e-6);
    }
    SUBCASE("d=6, p=1e-3 gives 1.7e-8") {
        CHECK(std::abs(pl_basic(6, 1e-3) - 1.7e-8) < 0.1e-8);
    }
    SUBCASE("d=4, p=3e-3 gives 4.8e-5") {
        CHECK(pl_basic(4, 3e-3) == doctest::Approx(4.8e-5).epsilon(1e-9));
    }
    SUBCASE("ideal value at d=4, p=1e-3") {
        CHECK(pl_ideal(4, 1e-3) == doctest::Approx(1.33e-6).epsilon(5e-3));
    }
    SUBCASE("p=0 gives 0") {
        CHECK(pl_basic(4, 0.0) == 0.0);
        CHECK(pl_ideal(4, 0.0) == 0.0);
    }
    SUBCASE("basic / ideal = 2^(d/2) exactly") {
        for (int d = 2; d <= 20; d += 2)
            for (double p : {1e-4, 1e-3, 5e-3, 2e-2})
                CHECK(pl_basic(d, p) / pl_ideal(d, p) ==
                      doctest::Approx(std::pow(2.0, d / 2)).epsilon(1e-12));
    }
    SUBCASE("odd d rejected") {
        CHECK_THROWS_AS(pl_basic(5, 1e-3), std::invalid_argument);
        CHECK_THROWS_AS(pl_ideal(3, 1e-3), std::invalid_argument);
    }
}

TEST_CASE("odd-Y-chain census") {
    SUBCASE("n=2, k=1 by hand: only the two all-X strings survive") {
        CensusResult r = census_no_odd_y_chain(2, 1);
        CHECK(r.total == 4);
        CHECK(r.no_odd_chain == 2);
        CHECK(r.fraction == 0.5);
    }
    SUBCASE("n=4, k=2 by hand") {
        // 6 position pairs x 4 labelings; valid strings have zero Y or an
        // adjacent YY pair: 6 all-X plus YY at {0,1},{1,2},{2,3}
        CensusResult r = census_no_odd_y_chain(4, 2);
        CHECK(r.total == 24);
        CHECK(r.no_odd_chain == 9);
    }
    SUBCASE("zero errors count as no odd chain") {
        CensusResult r = census_no_odd_y_chain(5, 0);
        CHECK(r.total == 1);
        CHECK(r.no_odd_chain == 1);
    }
    SUBCASE("worker count does not change the counts") {
        CensusResult a = census_no_odd_y_chain(14, 7, 1);
        CensusResult b = census_no_odd_y_chain(14, 7, 3);
        CHECK(a.total == b.total);
        CHECK(a.no_odd_chain == b.no_odd_chain);
    }
    SUBCASE("fraction is non-increasing in n at k = n/2") {
        double prev = 1.0;
        for (int n : {12, 16, 20}) {
            CensusResult r = census_no_odd_y_chain(n, n / 2, 2);
            CHECK(r.fraction < prev);
            prev = r.fraction;
        }
    }
    SUBCASE("independent transfer-matrix count agrees at n=20, k=10") {
        // DP over (errors used, parity of the trailing Y run); a gap or an X
        // label may close only an even run
        const int n = 20, k = 10;
        std::vector<std::array<uint64_t, 2>> cur(k + 1, {0, 0}), nxt;
        cur[0][0] = 1;
        for (int site = 0; site < n; ++site) {
            nxt.assign(k + 1, {0, 0});
            for (int e = 0; e <= k; ++e) {
                nxt[e][0] += cur[e][0];
                if (e + 1 <= k) {
                    nxt[e + 1][0] += cur[e][0];  // X closes an even run
                    nxt[e + 1][1] += cur[e][0];  // Y opens a run
                    nxt[e + 1][0] += cur[e][1];  // Y extends an odd run
                }
            }
            cur = nxt;
        }
        CensusResult r = census_no_odd_y_chain(20, 10, 2);
        CHECK(r.no_odd_chain == cur[k][0]);
    }
    SUBCASE("n too large for exhaustive mode rejected") {
        CHECK_THROWS_AS(census_no_odd_y_chain(25, 12), std::invalid_argument);
    }
}

TEST_CASE("two-event path analysis") {
    Fig4Counts c = count_fig4_paths();
    CHECK(c.pair_paths_len7 == 35);
    CHECK(c.boundary_len6 == 1);
    CHECK(c.boundary_len7 == 12);
    CHECK(c.crossover.num == 1);
    CHECK(c.crossover.den == 23);
}
