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

#ifndef GRAPHEMIT_PAULI_H
#define GRAPHEMIT_PAULI_H

#include <cstdint>
#include <string>
#include <vector>

namespace graphemit {

// Per-qubit Pauli code: bit 0 = x, bit 1 = z.
enum : uint8_t { PAULI_I = 0, PAULI_X = 1, PAULI_Z = 2, PAULI_Y = 3 };

char pauli_letter(uint8_t code);
uint8_t pauli_code_from_letter(char letter);

// Phase exponent k of i^k accumulated when multiplying single-qubit Paulis:
// literal(a) * literal(b) = i^k literal(a ^ b), with Y the literal matrix (Y = iXZ).
// The table is generated once from explicit 2x2 matrices, not hand-entered.
uint8_t pauli_mul_phase(uint8_t a, uint8_t b);

// An n-qubit Pauli operator with phase: i^phase * tensor of literal Paulis.
// Hermitian iff phase is 0 or 2.
struct PauliString {
    size_t n = 0;
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;
    uint8_t phase = 0;  // exponent of i, 0..3

    PauliString() = default;
    explicit PauliString(size_t n_qubits);

    static PauliString identity(size_t n_qubits);
    static PauliString single(size_t n_qubits, size_t q, uint8_t code);
    // Text form: optional sign prefix "+", "-", "+i", "-i" followed by letters, e.g. "-iXIZ".
    static PauliString parse(const std::string &text);

    bool x_bit(size_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    uint8_t code(size_t q) const {
        return static_cast<uint8_t>((x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0));
    }
    void set_code(size_t q, uint8_t c);

    bool is_identity() const;  // all codes I (phase may be anything)
    bool is_hermitian() const { return phase == 0 || phase == 2; }
    // +1 or -1 for a Hermitian string; throws otherwise.
    int sign() const;

    bool commutes_with(const PauliString &other) const;
    size_t weight() const;
    std::vector<size_t> support() const;

    // *this <- *this * rhs with exact phase arithmetic.
    void mul(const PauliString &rhs);

    // Same operator on a larger register (new qubits act as identity).
    PauliString extended(size_t new_n) const;
    // Restriction to a subset of qubits (order given); phase carried over unchanged.
    PauliString restricted(const std::vector<size_t> &qubits) const;

    std::string str() const;
    bool operator==(const PauliString &other) const = default;
};

PauliString pauli_product(const PauliString &a, const PauliString &b);

}  // namespace graphemit

#endif
