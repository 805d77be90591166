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

#include "graphemit/pauli.hpp"

#include <array>
#include <bit>
#include <complex>
#include <cstdlib>

#include "graphemit/errors.hpp"

namespace graphemit {

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;

Mat2 mat_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 literal_pauli(uint8_t code) {
    switch (code) {
        case PAULI_I: return {1, 0, 0, 1};
        case PAULI_X: return {0, 1, 1, 0};
        case PAULI_Z: return {1, 0, 0, -1};
        case PAULI_Y: return {0, cd(0, -1), cd(0, 1), 0};
    }
    std::abort();
}

// i^k such that literal(a) * literal(b) == i^k * literal(a ^ b).
struct MulPhaseTable {
    uint8_t k[4][4];
    MulPhaseTable() {
        for (uint8_t a = 0; a < 4; a++) {
            for (uint8_t b = 0; b < 4; b++) {
                Mat2 prod = mat_mul(literal_pauli(a), literal_pauli(b));
                Mat2 target = literal_pauli(a ^ b);
                uint8_t found = 255;
                for (uint8_t p = 0; p < 4; p++) {
                    cd ph = p == 0 ? cd(1) : p == 1 ? cd(0, 1) : p == 2 ? cd(-1) : cd(0, -1);
                    bool ok = true;
                    for (int e = 0; e < 4; e++) {
                        if (std::abs(prod[e] - ph * target[e]) > 1e-12) ok = false;
                    }
                    if (ok) {
                        found = p;
                        break;
                    }
                }
                if (found == 255) std::abort();
                k[a][b] = found;
            }
        }
    }
};

const MulPhaseTable &mul_table() {
    static const MulPhaseTable table;
    return table;
}

}  // namespace

char pauli_letter(uint8_t code) {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    return letters[code & 3];
}

uint8_t pauli_code_from_letter(char letter) {
    switch (letter) {
        case 'I': case '_': return PAULI_I;
        case 'X': return PAULI_X;
        case 'Y': return PAULI_Y;
        case 'Z': return PAULI_Z;
    }
    throw DimensionError(std::string("not a Pauli letter: ") + letter);
}

uint8_t pauli_mul_phase(uint8_t a, uint8_t b) {
    return mul_table().k[a & 3][b & 3];
}

PauliString::PauliString(size_t n_qubits)
    : n(n_qubits), x((n_qubits + 63) / 64, 0), z((n_qubits + 63) / 64, 0) {}

PauliString PauliString::identity(size_t n_qubits) {
    return PauliString(n_qubits);
}

PauliString PauliString::single(size_t n_qubits, size_t q, uint8_t code) {
    PauliString p(n_qubits);
    if (q >= n_qubits) throw DimensionError("qubit index out of range");
    p.set_code(q, code);
    return p;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) x[q >> 6] |= mask; else x[q >> 6] &= ~mask;
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) z[q >> 6] |= mask; else z[q >> 6] &= ~mask;
}

void PauliString::set_code(size_t q, uint8_t c) {
    set_x(q, c & 1);
    set_z(q, (c >> 1) & 1);
}

bool PauliString::is_identity() const {
    for (uint64_t w : x) if (w) return false;
    for (uint64_t w : z) if (w) return false;
    return true;
}

int PauliString::sign() const {
    if (phase == 0) return 1;
    if (phase == 2) return -1;
    throw DimensionError("Pauli string is not Hermitian");
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (n != other.n) throw DimensionError("Pauli length mismatch");
    // Symplectic form: parity of |{q : operators anticommute at q}|.
    uint64_t acc = 0;
    for (size_t w = 0; w < x.size(); w++) {
        acc ^= (x[w] & other.z[w]) ^ (z[w] & other.x[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < x.size(); w++) {
        total += std::popcount(x[w] | z[w]);
    }
    return total;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if (code(q) != PAULI_I) out.push_back(q);
    }
    return out;
}

void PauliString::mul(const PauliString &rhs) {
    if (n != rhs.n) throw DimensionError("Pauli length mismatch");
    uint8_t k = static_cast<uint8_t>(phase + rhs.phase);
    for (size_t q = 0; q < n; q++) {
        uint8_t a = code(q), b = rhs.code(q);
        if (a && b) k = static_cast<uint8_t>(k + pauli_mul_phase(a, b));
    }
    for (size_t w = 0; w < x.size(); w++) {
        x[w] ^= rhs.x[w];
        z[w] ^= rhs.z[w];
    }
    phase = k & 3;
}

PauliString PauliString::extended(size_t new_n) const {
    if (new_n < n) throw DimensionError("extended() cannot shrink");
    PauliString out(new_n);
    out.phase = phase;
    for (size_t w = 0; w < x.size(); w++) {
        out.x[w] = x[w];
        out.z[w] = z[w];
    }
    return out;
}

PauliString PauliString::restricted(const std::vector<size_t> &qubits) const {
    PauliString out(qubits.size());
    out.phase = phase;
    for (size_t i = 0; i < qubits.size(); i++) {
        out.set_code(i, code(qubits[i]));
    }
    return out;
}

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase & 3];
    for (size_t q = 0; q < n; q++) out += pauli_letter(code(q));
    return out;
}

PauliString PauliString::parse(const std::string &text) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = 2;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = static_cast<uint8_t>((phase + 1) & 3);
        pos++;
    }
    PauliString out(text.size() - pos);
    out.phase = phase;
    for (size_t q = 0; pos < text.size(); q++, pos++) {
        out.set_code(q, pauli_code_from_letter(text[pos]));
    }
    return out;
}

PauliString pauli_product(const PauliString &a, const PauliString &b) {
    PauliString out = a;
    out.mul(b);
    return out;
}

}  // namespace graphemit
