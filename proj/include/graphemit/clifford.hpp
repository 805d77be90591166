// Copyright 2026 The graphemit Authors
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

#ifndef GRAPHEMIT_CLIFFORD_H
#define GRAPHEMIT_CLIFFORD_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphemit/pauli.hpp"

namespace graphemit {

using Mat2 = std::array<std::complex<double>, 4>;  // row-major 2x2

// One of the 24 single-qubit Clifford operations, stored by its conjugation
// action: image_x = C X C^dag, image_z = C Z C^dag. The images anticommute and
// are non-identity; that characterizes the group exactly.
struct SingleQubitClifford {
    uint8_t x_code = PAULI_X;  // 1..3
    bool x_neg = false;
    uint8_t z_code = PAULI_Z;
    bool z_neg = false;

    bool operator==(const SingleQubitClifford &other) const = default;

    static const std::array<SingleQubitClifford, 24> &all();
    uint8_t index() const;

    static SingleQubitClifford identity() { return {}; }
    static SingleQubitClifford hadamard();
    static SingleQubitClifford s_gate();      // diag(1, i)
    static SingleQubitClifford s_dag();
    static SingleQubitClifford pauli(uint8_t code);
    // quarter = +-1: exp(-i quarter * pi/4 * X) resp. Z. quarter = +-2 gives the Pauli.
    static SingleQubitClifford rot_x(int quarter);
    static SingleQubitClifford rot_z(int quarter);

    // Conjugate a signed literal Pauli: i^phase_in * literal(code_in) ->
    // i^phase_out * literal(code_out), exact.
    void conjugate(uint8_t &code, uint8_t &phase) const;

    // Composition: (other . *this), i.e. *this applied first.
    SingleQubitClifford then(const SingleQubitClifford &other) const;
    SingleQubitClifford inverse() const;
    bool is_identity() const { return *this == SingleQubitClifford{}; }
    bool is_diagonal() const;  // commutes with Z (frame of Z-rotations/Paulis)

    // A concrete unitary matrix realizing the conjugation action (global phase
    // canonicalized: first nonzero column-0 entry real positive).
    Mat2 matrix() const;
    // Recognize a matrix as a Clifford (up to global phase); nullopt otherwise.
    static std::optional<SingleQubitClifford> from_matrix(const Mat2 &u, double eps = 1e-9);

    // Shortest word over {rot_x(+-1), rot_z(+-1)} composing to this element,
    // listed in application order.
    struct Rotation {
        char axis;    // 'X' or 'Z'
        int quarter;  // +1 or -1
    };
    std::vector<Rotation> rotation_word() const;

    std::string str() const;
};

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b);
Mat2 mat2_dag(const Mat2 &a);
bool mat2_approx_equal_up_to_phase(const Mat2 &a, const Mat2 &b, double eps = 1e-9);

}  // namespace graphemit

#endif
