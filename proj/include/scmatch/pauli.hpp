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

#ifndef SCMATCH_PAULI_HPP
#define SCMATCH_PAULI_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scmatch {

/// Single-qubit Pauli error class. Phases are discarded throughout: decoding
/// only depends on which equivalence class an error falls in.
enum class Pauli : uint8_t { i = 0, x = 1, z = 2, y = 3 };

constexpr bool has_x_component(Pauli p) {
    return p == Pauli::x || p == Pauli::y;
}
constexpr bool has_z_component(Pauli p) {
    return p == Pauli::z || p == Pauli::y;
}

constexpr Pauli make_pauli(bool x_bit, bool z_bit) {
    return static_cast<Pauli>((x_bit ? 1 : 0) | (z_bit ? 2 : 0));
}

/// Product of two Paulis, up to phase.
constexpr Pauli operator*(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

inline char pauli_char(Pauli p) {
    constexpr char names[4] = {'I', 'X', 'Z', 'Y'};
    return names[static_cast<uint8_t>(p)];
}

/// Accumulated X/Z error record over a register of qubits. Composition is
/// bitwise XOR of both component vectors, so frames form a group under
/// compose() and every frame is its own inverse.
struct PauliFrame {
    std::vector<uint8_t> x_bits;
    std::vector<uint8_t> z_bits;

    PauliFrame() = default;
    explicit PauliFrame(size_t n) : x_bits(n, 0), z_bits(n, 0) {}

    size_t size() const { return x_bits.size(); }

    Pauli at(size_t q) const { return make_pauli(x_bits[q] != 0, z_bits[q] != 0); }

    void apply(size_t q, Pauli p) {
        x_bits[q] ^= has_x_component(p) ? 1 : 0;
        z_bits[q] ^= has_z_component(p) ? 1 : 0;
    }

    bool is_identity() const {
        for (size_t q = 0; q < size(); ++q)
            if (x_bits[q] || z_bits[q])
                return false;
        return true;
    }

    bool operator==(const PauliFrame& other) const {
        return x_bits == other.x_bits && z_bits == other.z_bits;
    }
};

/// XOR of both bit vectors. Associative and self-inverse.
inline PauliFrame compose(const PauliFrame& a, const PauliFrame& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: frame sizes differ (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    PauliFrame out(a.size());
    for (size_t q = 0; q < a.size(); ++q) {
        out.x_bits[q] = a.x_bits[q] ^ b.x_bits[q];
        out.z_bits[q] = a.z_bits[q] ^ b.z_bits[q];
    }
    return out;
}

}  // namespace scmatch

#endif
