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
#include <sstream>

#include "scmatch/harness.hpp"
#include "scmatch/tracer.hpp"

using namespace scmatch;

TEST_CASE("p = 0 never fails") {
    TrialConfig c;
    c.mode = SimMode::perfect_2d;
    c.d = 4;
    c.p = 0.0;
    c.trials = 10000;
    c.seed = 1;
    c.workers = 2;
    TrialStats s = run(c);
    CHECK(s.failures_x == 0);
    CHECK(s.failures_z == 0);
    CHECK(s.p_l == 0.0);

    c.mode = SimMode::fault_tolerant_3d;
    c.d = 3;
    c.trials = 200;
    s = run(c);
    CHECK(s.failures_x == 0);
    CHECK(s.failures_z == 0);
}

TEST_CASE("identical seeds give identical totals across worker counts") {
    TrialConfig c;
    c.mode = SimMode::fault_tolerant_3d;
    c.decoder = DecoderKind::correlated;
    c.d = 3;
    c.p = 3e-3;
    c.trials = 20000;
    c.seed = 777;

    c.workers = 1;
    TrialStats a = run(c);
    c.workers = 2;
    TrialStats b = run(c);
    c.workers = 5;
    TrialStats d = run(c);
    CHECK(a.failures_x == b.failures_x);
    CHECK(a.failures_z == b.failures_z);
    CHECK(a.failures_x == d.failures_x);
    CHECK(a.failures_z == d.failures_z);
    CHECK(a.trials_run == d.trials_run);
}

TEST_CASE("X and Z failure counts agree statistically on a symmetric layout") {
    TrialConfig c;
    c.mode = SimMode::perfect_2d;
    c.d = 3;
    c.p = 2e-2;
    c.trials = 200000;
    c.seed = 5;
    TrialStats s = run(c);
    REQUIRE(s.failures_x + s.failures_z > 100);
    const double diff = static_cast<double>(s.failures_x) - static_cast<double>(s.failures_z);
    const double sigma = std::sqrt(static_cast<double>(s.failures_x + s.failures_z));
    CHECK(std::abs(diff) < 5 * sigma);
}

TEST_CASE("correlated beats independent in aggregate (2D, d=4)") {
    TrialConfig c;
    c.mode = SimMode::perfect_2d;
    c.d = 4;
    c.p = 3e-3;
    c.trials = 4'000'000;
    c.seed = 20260811;

    const CodeLayout layout = build_layout(c.d);
    const DetectorModel model = build_model_2d(layout, c.p);

    c.decoder = DecoderKind::independent;
    TrialStats ind = run(c, model);
    c.decoder = DecoderKind::correlated;
    TrialStats cor = run(c, model);

    REQUIRE(ind.failures_x > 50);
    const double diff =
        static_cast<double>(ind.failures_x) - static_cast<double>(cor.failures_x);
    const double sigma = std::sqrt(static_cast<double>(ind.failures_x + cor.failures_x));
    CHECK(diff >= 5 * sigma);
}

TEST_CASE("single-cell sweep equals run") {
    TrialConfig base;
    base.mode = SimMode::perfect_2d;
    base.d = 3;
    base.p = 1e-2;
    base.trials = 50000;
    base.seed = 99;
    auto cells = sweep({3}, {1e-2}, base);
    REQUIRE(cells.size() == 1);
    TrialStats direct = run(base);
    CHECK(cells[0].failures_x == direct.failures_x);
    CHECK(cells[0].failures_z == direct.failures_z);
}

TEST_CASE("early stop rule records fewer trials without touching the estimator's inputs") {
    TrialConfig c;
    c.mode = SimMode::perfect_2d;
    c.d = 3;
    c.p = 5e-2;
    c.trials = 50'000'000;  // would take far too long without early stop
    c.seed = 4;
    c.early_stop_failures = 500;
    c.min_trials = 10000;
    TrialStats s = run(c);
    CHECK(s.stopped_early);
    CHECK(s.trials_run < c.trials);
    CHECK(s.trials_run >= c.min_trials);
    CHECK(s.failures_x >= 500);
    CHECK(s.ci.contains(s.p_l));
}

TEST_CASE("config validation") {
    TrialConfig c;
    c.d = 1;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.d = 3;
    c.p = 0.7;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.p = 1e-3;
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("csv output carries the pinned column set") {
    TrialConfig c;
    c.mode = SimMode::fault_tolerant_3d;
    c.decoder = DecoderKind::correlated;
    c.d = 3;
    c.p = 1e-3;
    c.trials = 10;
    c.seed = 12;
    TrialStats s = run(c);

    std::ostringstream out;
    write_csv_header(out);
    write_csv_row(out, s);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header ==
          "mode,decoder,d,p,rounds,trials,failures_x,failures_z,p_l,ci_low,ci_high,seed");
    size_t commas = 0;
    for (char ch : row)
        commas += ch == ',';
    CHECK(commas == 11);
    CHECK(row.find("fault_tolerant3d,correlated,3,0.001,3,10,") == 0);
}

TEST_CASE("per-round normalization in fault-tolerant mode") {
    TrialConfig c;
    c.mode = SimMode::fault_tolerant_3d;
    c.d = 3;
    c.p = 8e-3;
    c.trials = 20000;
    c.seed = 31;
    TrialStats s = run(c);
    const double per_trial = static_cast<double>(s.failures_x) / s.trials_run;
    CHECK(s.p_l == doctest::Approx(1.0 - std::pow(1.0 - per_trial, 1.0 / 3.0)));
    CHECK(s.ci.contains(s.p_l));
}
