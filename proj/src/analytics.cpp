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

#include "scmatch/analytics.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace scmatch {

Rational eq1_ratio(int n) {
    if (n < 1)
        throw std::invalid_argument("eq1_ratio: n must be >= 1");
    // C(n,k)/C(n,k+1) = (k+1)/(n-k) with k = ceil(n/2).
    const int64_t k = (n + 1) / 2;
    int64_t num = k + 1;
    int64_t den = n - k;
    if (den <= 0)  // n == 1: C(1,1)/C(1,2) is out of range; treat k+1 > n as den 0
        throw std::invalid_argument("eq1_ratio: undefined for n < 2");
    const int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

namespace {

double binomial(int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i)
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return out;
}

double pl_leading_order(int d, double p, double channel_fraction) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("pl formula is stated for even d >= 2");
    if (p < 0.0 || p >= 1.0)
        throw std::invalid_argument("pl formula: need 0 <= p < 1");
    const int half = d / 2;
    return 0.5 * d * binomial(d, half) * std::pow(channel_fraction * p, half);
}

}  // namespace

double pl_basic(int d, double p) { return pl_leading_order(d, p, 2.0 / 3.0); }

double pl_ideal(int d, double p) { return pl_leading_order(d, p, 1.0 / 3.0); }

namespace {

// True iff every maximal run of set bits has even length.
bool all_runs_even(uint32_t y) {
    while (y != 0) {
        const int start = std::countr_zero(y);
        const int len = std::countr_one(y >> start);
        if (len & 1)
            return false;
        y &= ~(((1u << len) - 1u) << start);
    }
    return true;
}

uint64_t count_no_odd_chain(uint32_t position_mask) {
    // Enumerate Y-subsets of the error positions; non-Y positions are X.
    uint64_t count = 0;
    uint32_t y = position_mask;
    while (true) {
        if (all_runs_even(y))
            ++count;
        if (y == 0)
            break;
        y = (y - 1) & position_mask;
    }
    return count;
}

}  // namespace

CensusResult census_no_odd_y_chain(int n, int k, int workers) {
    if (n < 1 || k < 0 || k > n)
        throw std::invalid_argument("census_no_odd_y_chain: need 0 <= k <= n");
    if (n > 24)
        throw std::invalid_argument("census_no_odd_y_chain: n capped at 24 for exhaustive mode");
    if (workers < 1)
        workers = 1;

    const uint32_t limit = 1u << n;
    std::vector<uint64_t> subsets(workers, 0), good(workers, 0);

    auto work = [&](int t) {
        const uint32_t lo = static_cast<uint32_t>((static_cast<uint64_t>(limit) * t) / workers);
        const uint32_t hi =
            static_cast<uint32_t>((static_cast<uint64_t>(limit) * (t + 1)) / workers);
        for (uint32_t mask = lo; mask < hi; ++mask) {
            if (std::popcount(mask) != k)
                continue;
            ++subsets[t];
            good[t] += count_no_odd_chain(mask);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }

    CensusResult out;
    uint64_t n_subsets = 0;
    for (int t = 0; t < workers; ++t) {
        n_subsets += subsets[t];
        out.no_odd_chain += good[t];
    }
    out.total = n_subsets << k;
    out.fraction = static_cast<double>(out.no_odd_chain) / static_cast<double>(out.total);
    return out;
}

namespace {

// The two-event instance: X-stabilizer lattice of a distance-9 code,
// d rows x (d-1) columns, boundary edges off the first and last column.
// Events at lattice (row 2, col 3) and (row 6, col 6), i.e. separated by
// (3,4) with nearest boundary distance 3 on each side.
struct Fig4Lattice {
    static constexpr int rows = 9;
    static constexpr int cols = 8;  // 1-indexed columns 1..8

    static int id(int r, int c) { return r * cols + (c - 1); }

    // Count simple paths from (r,c) of exactly `len` edges ending at the
    // target vertex (or at either boundary when to_boundary is set).
    static int64_t count_paths(int r, int c, int target, bool to_boundary, int len,
                               std::array<uint8_t, rows * cols>& visited) {
        if (len == 0)
            return (!to_boundary && id(r, c) == target) ? 1 : 0;
        if (!to_boundary && id(r, c) == target)
            return 0;  // must not pass through the target early

        int64_t total = 0;
        visited[id(r, c)] = 1;
        if (to_boundary && (c == 1 || c == cols) && len == 1)
            total += 1;  // step off the lattice
        const int dr[4] = {-1, 1, 0, 0};
        const int dc[4] = {0, 0, -1, 1};
        for (int dir = 0; dir < 4; ++dir) {
            const int nr = r + dr[dir];
            const int nc = c + dc[dir];
            if (nr < 0 || nr >= rows || nc < 1 || nc > cols)
                continue;
            if (visited[id(nr, nc)])
                continue;
            total += count_paths(nr, nc, target, to_boundary, len - 1, visited);
        }
        visited[id(r, c)] = 0;
        return total;
    }
};

int64_t paths_between(int r0, int c0, int r1, int c1, int len) {
    std::array<uint8_t, Fig4Lattice::rows * Fig4Lattice::cols> visited{};
    return Fig4Lattice::count_paths(r0, c0, Fig4Lattice::id(r1, c1), false, len, visited);
}

int64_t paths_to_boundary(int r0, int c0, int len) {
    std::array<uint8_t, Fig4Lattice::rows * Fig4Lattice::cols> visited{};
    return Fig4Lattice::count_paths(r0, c0, -1, true, len, visited);
}

}  // namespace

Fig4Counts count_fig4_paths() {
    const int ar = 2, ac = 3;
    const int br = 6, bc = 6;

    Fig4Counts out;
    out.pair_paths_len7 = paths_between(ar, ac, br, bc, 7);

    // Boundary pairings by total length: enumerate both events' boundary
    // path counts by length and convolve.
    std::array<int64_t, 8> a{}, b{};
    for (int len = 1; len <= 7; ++len) {
        a[len] = paths_to_boundary(ar, ac, len);
        b[len] = paths_to_boundary(br, bc, len);
    }
    for (int la = 1; la <= 5; ++la)
        out.boundary_len6 += a[la] * b[6 - la];
    for (int la = 1; la <= 6; ++la)
        out.boundary_len7 += a[la] * b[7 - la];

    // pair p^7 beats boundary p^6 + boundary7 p^7 once
    // (pair - boundary7) p = boundary6.
    const int64_t den = out.pair_paths_len7 - out.boundary_len7;
    if (den <= 0)
        throw std::logic_error("count_fig4_paths: no crossover");
    const int64_t g = std::gcd(out.boundary_len6, den);
    out.crossover = Rational{out.boundary_len6 / g, den / g};
    return out;
}

}  // namespace scmatch
