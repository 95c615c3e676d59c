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

#ifndef SCMATCH_LAYOUT_HPP
#define SCMATCH_LAYOUT_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "scmatch/pauli.hpp"

namespace scmatch {

/// Which stabilizer operator a measurement site checks. An X stabilizer is a
/// product of X on its adjacent data qubits and flags Z/Y components; a Z
/// stabilizer flags X/Y components. Dually, the graph built on X-stabilizer
/// sites carries Z corrections and guards the logical Z readout, and the
/// Z-stabilizer graph guards logical X.
enum class StabBasis : uint8_t { x = 0, z = 1 };

constexpr StabBasis other_basis(StabBasis b) {
    return b == StabBasis::x ? StabBasis::z : StabBasis::x;
}
constexpr size_t basis_index(StabBasis b) { return static_cast<size_t>(b); }
constexpr std::array<StabBasis, 2> kBothBases{StabBasis::x, StabBasis::z};

/// Position on the (2d-1) x (2d-1) integer grid.
struct Coord {
    int16_t row = 0;
    int16_t col = 0;

    bool operator==(const Coord& o) const { return row == o.row && col == o.col; }
};

struct Stabilizer {
    Coord site;
    std::vector<int32_t> data;  // indices into CodeLayout::data_qubits, 2-4 entries
};

/// Observed detection events of one trial. In the perfect-measurement model a
/// site id is simply a stabilizer index; in the fault-tolerant model it is
/// stabilizer index + layer * stabilizer count.
struct SyndromeInstance {
    std::array<std::vector<int32_t>, 2> events;  // indexed by StabBasis

    std::vector<int32_t>& of(StabBasis b) { return events[basis_index(b)]; }
    const std::vector<int32_t>& of(StabBasis b) const { return events[basis_index(b)]; }
    bool empty() const { return events[0].empty() && events[1].empty(); }
};

/// Distance-d planar surface code on a (2d-1) x (2d-1) grid.
///
/// Data qubits sit on sites with even row+col (the even-even and odd-odd
/// sites). Z stabilizers sit at (odd row, even col), X stabilizers at
/// (even row, odd col). The Z-stabilizer lattice is open at the top and
/// bottom, so X error chains (and the d minimum-length logical X operators)
/// run top to bottom; Z error chains and logical Z run left to right.
struct CodeLayout {
    int d = 0;
    std::vector<Coord> data_qubits;
    std::vector<Stabilizer> x_stabilizers;
    std::vector<Stabilizer> z_stabilizers;
    std::vector<int32_t> logical_x_support;  // data indices, a top-to-bottom column
    std::vector<int32_t> logical_z_support;  // data indices, a left-to-right row

    // qubit -> adjacent stabilizer indices, per stabilizer basis (0-2 entries).
    std::array<std::vector<std::vector<int32_t>>, 2> qubit_to_stabs;
    // qubit membership masks of the logical supports.
    std::vector<uint8_t> in_logical_x;
    std::vector<uint8_t> in_logical_z;

    const std::vector<Stabilizer>& stabilizers(StabBasis b) const {
        return b == StabBasis::x ? x_stabilizers : z_stabilizers;
    }
    size_t num_data() const { return data_qubits.size(); }
    size_t num_stabs(StabBasis b) const { return stabilizers(b).size(); }

    /// Index of the data qubit at a grid coordinate, or -1.
    int32_t qubit_at(Coord c) const;

    /// The two open sides per basis: X error chains terminate top/bottom,
    /// Z error chains terminate left/right.
    static const char* boundary_kind(StabBasis b) {
        return b == StabBasis::x ? "top_bottom" : "left_right";
    }
};

/// Builds the layout for a given distance. Deterministic; throws on d < 2.
CodeLayout build_layout(int d);

/// Violated stabilizers of a frame under ideal (noiseless) measurement.
/// An X stabilizer fires iff an odd number of its data qubits carry a Z
/// component, and dually.
SyndromeInstance ideal_syndrome(const PauliFrame& frame, const CodeLayout& layout);

/// Logical failure of a zero-syndrome residual frame, as (X failure,
/// Z failure). X failure means the residual's X components anticommute with
/// logical Z. Throws if the residual has nonzero syndrome.
std::pair<bool, bool> logical_failure(const PauliFrame& residual, const CodeLayout& layout);

}  // namespace scmatch

#endif
