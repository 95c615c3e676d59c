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

#include "scmatch/mwpm.hpp"
#include "scmatch/rng.hpp"

using namespace scmatch;

TEST_CASE("mwpm basics") {
    SUBCASE("two nodes form the single pair") {
        SymMatrix w(2);
        w.set(0, 1, 3.5);
        auto m = mwpm(w);
        CHECK(m[0] == 1);
        CHECK(m[1] == 0);
        CHECK(matching_weight(w, m) == 3.5);
    }
    SUBCASE("four nodes pick the two cheap pairs") {
        SymMatrix w(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                w.set(i, j, 10.0);
        w.set(0, 1, 1.0);
        w.set(2, 3, 1.0);
        auto m = mwpm(w);
        CHECK(m[0] == 1);
        CHECK(m[2] == 3);
        CHECK(matching_weight(w, m) == 2.0);
    }
    SUBCASE("odd node count rejected") {
        CHECK_THROWS_AS(mwpm(SymMatrix(3)), std::invalid_argument);
    }
    SUBCASE("empty instance") { CHECK(mwpm(SymMatrix(0)).empty()); }
}

TEST_CASE("brute force oracle basics") {
    SUBCASE("six nodes on a line pair adjacently") {
        SymMatrix w(6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                w.set(i, j, static_cast<double>(j - i));
        auto m = brute_force_mwpm(w);
        CHECK(matching_weight(w, m) == 3.0);
        CHECK(m[0] == 1);
        CHECK(m[2] == 3);
        CHECK(m[4] == 5);
    }
    SUBCASE("four equal-weight nodes cost 2w under any pairing") {
        SymMatrix w(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                w.set(i, j, 2.5);
        CHECK(matching_weight(w, brute_force_mwpm(w)) == 5.0);
    }
    SUBCASE("too many nodes rejected") {
        CHECK_THROWS_AS(brute_force_mwpm(SymMatrix(14)), std::invalid_argument);
        CHECK_THROWS_AS(brute_force_mwpm(SymMatrix(13)), std::invalid_argument);
    }
}

TEST_CASE("blossom equals the brute-force oracle on random instances") {
    Xoshiro256 rng(20260811);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 * (1 + rng.below(5));  // 2..10 nodes
        SymMatrix w(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double v = trial % 3 == 1 ? static_cast<double>(1 + rng.below(4))
                                          : rng.uniform() * 10.0;
                if (trial % 3 == 2 && rng.below(4) == 0)
                    v = 0.0;
                w.set(i, j, v);
            }
        double opt = matching_weight(w, mwpm(w));
        double oracle = matching_weight(w, brute_force_mwpm(w));
        CHECK(std::abs(opt - oracle) <= 1e-9 * std::max(1.0, oracle));
    }
}
