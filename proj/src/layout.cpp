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

#include "scmatch/layout.hpp"

#include <stdexcept>
#include <string>

namespace scmatch {

int32_t CodeLayout::qubit_at(Coord c) const {
    int side = 2 * d - 1;
    if (c.row < 0 || c.col < 0 || c.row >= side || c.col >= side)
        return -1;
    if ((c.row + c.col) % 2 != 0)
        return -1;
    // Data qubits are laid out row-major over the even-parity sites: each row
    // holds either d (even row) or d-1 (odd row) qubits.
    int full_pairs = c.row / 2;
    int before = full_pairs * (2 * d - 1) + (c.row % 2 ? d : 0);
    return static_cast<int32_t>(before + c.col / 2);
}

CodeLayout build_layout(int d) {
    if (d < 2)
        throw std::invalid_argument("build_layout: d must be >= 2, got " + std::to_string(d));

    CodeLayout layout;
    layout.d = d;
    const int side = 2 * d - 1;

    for (int16_t r = 0; r < side; ++r)
        for (int16_t c = (r % 2 == 0) ? 0 : 1; c < side; c = static_cast<int16_t>(c + 2))
            layout.data_qubits.push_back(Coord{r, c});

    auto collect = [&](Coord site) {
        std::vector<int32_t> members;
        const Coord neighbors[4] = {
            {static_cast<int16_t>(site.row - 1), site.col},  // north
            {site.row, static_cast<int16_t>(site.col - 1)},  // west
            {site.row, static_cast<int16_t>(site.col + 1)},  // east
            {static_cast<int16_t>(site.row + 1), site.col},  // south
        };
        for (const Coord& n : neighbors) {
            int32_t q = layout.qubit_at(n);
            if (q >= 0)
                members.push_back(q);
        }
        return members;
    };

    // X stabilizers at (even row, odd col); Z stabilizers at (odd row, even col).
    for (int16_t r = 0; r < side; r = static_cast<int16_t>(r + 2))
        for (int16_t c = 1; c < side; c = static_cast<int16_t>(c + 2))
            layout.x_stabilizers.push_back(Stabilizer{Coord{r, c}, collect({r, c})});
    for (int16_t r = 1; r < side; r = static_cast<int16_t>(r + 2))
        for (int16_t c = 0; c < side; c = static_cast<int16_t>(c + 2))
            layout.z_stabilizers.push_back(Stabilizer{Coord{r, c}, collect({r, c})});

    // Logical X: the leftmost column of even-row qubits (top to bottom).
    // Logical Z: the top row (left to right). They intersect at qubit (0,0).
    for (int16_t r = 0; r < side; r = static_cast<int16_t>(r + 2))
        layout.logical_x_support.push_back(layout.qubit_at({r, 0}));
    for (int16_t c = 0; c < side; c = static_cast<int16_t>(c + 2))
        layout.logical_z_support.push_back(layout.qubit_at({0, c}));

    for (StabBasis b : kBothBases) {
        auto& table = layout.qubit_to_stabs[basis_index(b)];
        table.assign(layout.num_data(), {});
        const auto& stabs = layout.stabilizers(b);
        for (size_t s = 0; s < stabs.size(); ++s)
            for (int32_t q : stabs[s].data)
                table[q].push_back(static_cast<int32_t>(s));
    }

    layout.in_logical_x.assign(layout.num_data(), 0);
    layout.in_logical_z.assign(layout.num_data(), 0);
    for (int32_t q : layout.logical_x_support)
        layout.in_logical_x[q] = 1;
    for (int32_t q : layout.logical_z_support)
        layout.in_logical_z[q] = 1;

    return layout;
}

SyndromeInstance ideal_syndrome(const PauliFrame& frame, const CodeLayout& layout) {
    if (frame.size() != layout.num_data())
        throw std::invalid_argument("ideal_syndrome: frame size does not match layout");

    SyndromeInstance syndrome;
    for (StabBasis b : kBothBases) {
        const auto& stabs = layout.stabilizers(b);
        // X stabilizers anticommute with Z components, Z stabilizers with X.
        const auto& bits = (b == StabBasis::x) ? frame.z_bits : frame.x_bits;
        for (size_t s = 0; s < stabs.size(); ++s) {
            int parity = 0;
            for (int32_t q : stabs[s].data)
                parity ^= bits[q];
            if (parity)
                syndrome.of(b).push_back(static_cast<int32_t>(s));
        }
    }
    return syndrome;
}

std::pair<bool, bool> logical_failure(const PauliFrame& residual, const CodeLayout& layout) {
    if (!ideal_syndrome(residual, layout).empty())
        throw std::invalid_argument(
            "logical_failure: residual has nonzero syndrome; correction must return to the code space");

    int x_overlap = 0;  // X components against logical Z
    for (int32_t q : layout.logical_z_support)
        x_overlap ^= residual.x_bits[q];
    int z_overlap = 0;  // Z components against logical X
    for (int32_t q : layout.logical_x_support)
        z_overlap ^= residual.z_bits[q];
    return {x_overlap != 0, z_overlap != 0};
}

}  // namespace scmatch
