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

#include "graphemit/clifford.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "graphemit/errors.hpp"

namespace graphemit {

namespace {

using cd = std::complex<double>;

Mat2 literal_pauli(uint8_t code) {
    switch (code) {
        case PAULI_I: return {1, 0, 0, 1};
        case PAULI_X: return {0, 1, 1, 0};
        case PAULI_Z: return {1, 0, 0, -1};
        case PAULI_Y: return {0, cd(0, -1), cd(0, 1), 0};
    }
    std::abort();
}

bool anticommute_1q(uint8_t a, uint8_t b) {
    if (a == PAULI_I || b == PAULI_I) return false;
    return a != b;
}

}  // namespace

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_dag(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

bool mat2_approx_equal_up_to_phase(const Mat2 &a, const Mat2 &b, double eps) {
    // align on the largest entry of b
    size_t k = 0;
    for (size_t i = 1; i < 4; i++) {
        if (std::abs(b[i]) > std::abs(b[k])) k = i;
    }
    if (std::abs(b[k]) < eps) return false;
    cd lambda = a[k] / b[k];
    if (std::abs(std::abs(lambda) - 1.0) > eps) return false;
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(a[i] - lambda * b[i]) > eps) return false;
    }
    return true;
}

const std::array<SingleQubitClifford, 24> &SingleQubitClifford::all() {
    static const std::array<SingleQubitClifford, 24> table = [] {
        std::array<SingleQubitClifford, 24> out{};
        size_t idx = 0;
        for (uint8_t xc : {PAULI_X, PAULI_Z, PAULI_Y}) {
            for (bool xn : {false, true}) {
                for (uint8_t zc : {PAULI_X, PAULI_Z, PAULI_Y}) {
                    if (!anticommute_1q(xc, zc)) continue;
                    for (bool zn : {false, true}) {
                        out[idx++] = SingleQubitClifford{xc, xn, zc, zn};
                    }
                }
            }
        }
        if (idx != 24) std::abort();
        return out;
    }();
    return table;
}

uint8_t SingleQubitClifford::index() const {
    const auto &t = all();
    for (uint8_t i = 0; i < 24; i++) {
        if (t[i] == *this) return i;
    }
    std::abort();
}

void SingleQubitClifford::conjugate(uint8_t &code, uint8_t &phase) const {
    switch (code) {
        case PAULI_I:
            return;
        case PAULI_X:
            code = x_code;
            if (x_neg) phase = static_cast<uint8_t>((phase + 2) & 3);
            return;
        case PAULI_Z:
            code = z_code;
            if (z_neg) phase = static_cast<uint8_t>((phase + 2) & 3);
            return;
        case PAULI_Y: {
            // Y = i X Z, so C Y C^dag = i (C X C^dag)(C Z C^dag).
            uint8_t k = 1;
            if (x_neg) k = static_cast<uint8_t>(k + 2);
            if (z_neg) k = static_cast<uint8_t>(k + 2);
            k = static_cast<uint8_t>(k + pauli_mul_phase(x_code, z_code));
            code = x_code ^ z_code;
            phase = static_cast<uint8_t>((phase + k) & 3);
            return;
        }
    }
    std::abort();
}

SingleQubitClifford SingleQubitClifford::then(const SingleQubitClifford &other) const {
    // (other . this): conjugation by (other * this) = other-conjugate of this-images.
    SingleQubitClifford out;
    uint8_t cx = PAULI_X, px = 0;
    conjugate(cx, px);
    other.conjugate(cx, px);
    out.x_code = cx;
    out.x_neg = (px == 2);
    uint8_t cz = PAULI_Z, pz = 0;
    conjugate(cz, pz);
    other.conjugate(cz, pz);
    out.z_code = cz;
    out.z_neg = (pz == 2);
    return out;
}

SingleQubitClifford SingleQubitClifford::inverse() const {
    for (const auto &c : all()) {
        if (c.then(*this).is_identity()) return c;
    }
    std::abort();
}

bool SingleQubitClifford::is_diagonal() const {
    return z_code == PAULI_Z && !z_neg;
}

Mat2 SingleQubitClifford::matrix() const {
    // Column 0 = +1 eigenvector of image_z; column 1 = image_x * column 0.
    Mat2 pz = literal_pauli(z_code);
    if (z_neg) for (auto &e : pz) e = -e;
    // +1 eigenvector of a traceless involution P: (I + P)|v> for any |v> not in kernel.
    cd c0[2] = {1.0 + pz[0], pz[2]};
    double norm = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
    if (norm < 1e-9) {
        c0[0] = pz[1];
        c0[1] = 1.0 + pz[3];
        norm = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
    }
    c0[0] /= norm;
    c0[1] /= norm;
    Mat2 px = literal_pauli(x_code);
    if (x_neg) for (auto &e : px) e = -e;
    cd c1[2] = {px[0] * c0[0] + px[1] * c0[1], px[2] * c0[0] + px[3] * c0[1]};
    Mat2 u = {c0[0], c1[0], c0[1], c1[1]};
    // canonical global phase: first entry of column 0 with significant magnitude real positive
    cd anchor = std::abs(u[0]) > 1e-9 ? u[0] : u[2];
    cd rot = std::abs(anchor) / anchor;
    for (auto &e : u) e *= rot;
    return u;
}

std::optional<SingleQubitClifford> SingleQubitClifford::from_matrix(const Mat2 &u, double eps) {
    // unitarity check
    Mat2 uu = mat2_mul(u, mat2_dag(u));
    Mat2 eye = {1, 0, 0, 1};
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(uu[i] - eye[i]) > 1e-7) return std::nullopt;
    }
    Mat2 ux = mat2_mul(mat2_mul(u, literal_pauli(PAULI_X)), mat2_dag(u));
    Mat2 uz = mat2_mul(mat2_mul(u, literal_pauli(PAULI_Z)), mat2_dag(u));
    SingleQubitClifford out;
    bool found_x = false, found_z = false;
    for (uint8_t code : {PAULI_X, PAULI_Z, PAULI_Y}) {
        Mat2 p = literal_pauli(code);
        Mat2 mp = p;
        for (auto &e : mp) e = -e;
        auto close = [&](const Mat2 &a, const Mat2 &b) {
            for (size_t i = 0; i < 4; i++) {
                if (std::abs(a[i] - b[i]) > eps) return false;
            }
            return true;
        };
        if (close(ux, p)) { out.x_code = code; out.x_neg = false; found_x = true; }
        if (close(ux, mp)) { out.x_code = code; out.x_neg = true; found_x = true; }
        if (close(uz, p)) { out.z_code = code; out.z_neg = false; found_z = true; }
        if (close(uz, mp)) { out.z_code = code; out.z_neg = true; found_z = true; }
    }
    if (!found_x || !found_z) return std::nullopt;
    return out;
}

SingleQubitClifford SingleQubitClifford::hadamard() {
    double s = 1.0 / std::sqrt(2.0);
    return *from_matrix({s, s, s, -s});
}

SingleQubitClifford SingleQubitClifford::s_gate() {
    return *from_matrix({1, 0, 0, cd(0, 1)});
}

SingleQubitClifford SingleQubitClifford::s_dag() {
    return *from_matrix({1, 0, 0, cd(0, -1)});
}

SingleQubitClifford SingleQubitClifford::pauli(uint8_t code) {
    return *from_matrix(literal_pauli(code));
}

SingleQubitClifford SingleQubitClifford::rot_x(int quarter) {
    // exp(-i quarter pi/4 X)
    double theta = quarter * M_PI / 4.0;
    cd c = std::cos(theta), s = cd(0, -1) * std::sin(theta);
    auto r = from_matrix({c, s, s, c});
    if (!r) std::abort();
    return *r;
}

SingleQubitClifford SingleQubitClifford::rot_z(int quarter) {
    double theta = quarter * M_PI / 4.0;
    cd a = std::exp(cd(0, -theta)), b = std::exp(cd(0, theta));
    auto r = from_matrix({a, 0, 0, b});
    if (!r) std::abort();
    return *r;
}

std::vector<SingleQubitClifford::Rotation> SingleQubitClifford::rotation_word() const {
    // BFS over the group once; words listed in application order.
    static const std::array<std::vector<Rotation>, 24> words = [] {
        std::array<std::vector<Rotation>, 24> table;
        std::array<bool, 24> have{};
        table[SingleQubitClifford{}.index()] = {};
        have[SingleQubitClifford{}.index()] = true;
        std::vector<uint8_t> frontier = {SingleQubitClifford{}.index()};
        const std::array<std::pair<Rotation, SingleQubitClifford>, 4> gens = {
            std::pair{Rotation{'X', +1}, rot_x(+1)},
            std::pair{Rotation{'X', -1}, rot_x(-1)},
            std::pair{Rotation{'Z', +1}, rot_z(+1)},
            std::pair{Rotation{'Z', -1}, rot_z(-1)},
        };
        while (!frontier.empty()) {
            std::vector<uint8_t> next;
            for (uint8_t idx : frontier) {
                for (const auto &[rot, gen] : gens) {
                    SingleQubitClifford c = all()[idx].then(gen);
                    uint8_t j = c.index();
                    if (!have[j]) {
                        have[j] = true;
                        table[j] = table[idx];
                        table[j].push_back(rot);
                        next.push_back(j);
                    }
                }
            }
            frontier = std::move(next);
        }
        for (bool h : have) {
            if (!h) std::abort();
        }
        return table;
    }();
    return words[index()];
}

std::string SingleQubitClifford::str() const {
    std::string out = "X->";
    out += x_neg ? '-' : '+';
    out += pauli_letter(x_code);
    out += ",Z->";
    out += z_neg ? '-' : '+';
    out += pauli_letter(z_code);
    return out;
}

}  // namespace graphemit
