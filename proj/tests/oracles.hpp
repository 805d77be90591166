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
//
// Test-only dense linear-algebra oracle. Deliberately independent of the
// library: gates are built from first-principles matrices and applied by
// explicit kron products, so it can serve as the ground truth the fast
// implementations are checked against.

#ifndef GRAPHEMIT_TESTS_ORACLES_H
#define GRAPHEMIT_TESTS_ORACLES_H

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;
using Vec = std::vector<cd>;

inline Mat eye(size_t n) {
    Mat m(n, std::vector<cd>(n, 0));
    for (size_t i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

inline Mat mul(const Mat &a, const Mat &b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat out(n, std::vector<cd>(m, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t t = 0; t < k; t++) {
            if (a[i][t] == cd(0)) continue;
            for (size_t j = 0; j < m; j++) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

inline Vec mul_vec(const Mat &a, const Vec &v) {
    Vec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) out[i] += a[i][j] * v[j];
    }
    return out;
}

inline Mat dagger(const Mat &a) {
    Mat out(a[0].size(), std::vector<cd>(a.size()));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) out[j][i] = std::conj(a[i][j]);
    }
    return out;
}

inline Mat kron(const Mat &a, const Mat &b) {
    size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Mat out(ar * br, std::vector<cd>(ac * bc, 0));
    for (size_t i = 0; i < ar; i++) {
        for (size_t j = 0; j < ac; j++) {
            for (size_t k = 0; k < br; k++) {
                for (size_t l = 0; l < bc; l++) {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline bool approx_equal(const Mat &a, const Mat &b, double eps = 1e-10) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) {
            if (std::abs(a[i][j] - b[i][j]) > eps) return false;
        }
    }
    return true;
}

inline bool approx_equal_up_to_phase(const Mat &a, const Mat &b, double eps = 1e-10) {
    size_t bi = 0, bj = 0;
    double best = 0;
    for (size_t i = 0; i < b.size(); i++) {
        for (size_t j = 0; j < b[0].size(); j++) {
            if (std::abs(b[i][j]) > best) {
                best = std::abs(b[i][j]);
                bi = i;
                bj = j;
            }
        }
    }
    if (best < eps) return approx_equal(a, b, eps);
    cd lambda = a[bi][bj] / b[bi][bj];
    if (std::abs(std::abs(lambda) - 1.0) > eps) return false;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) {
            if (std::abs(a[i][j] - lambda * b[i][j]) > eps) return false;
        }
    }
    return true;
}

inline bool vec_equal_up_to_phase(const Vec &a, const Vec &b, double eps = 1e-10) {
    size_t k = 0;
    for (size_t i = 1; i < a.size(); i++) {
        if (std::abs(a[i]) > std::abs(a[k])) k = i;
    }
    if (std::abs(b[k]) < eps) return false;
    cd lambda = a[k] / b[k];
    if (std::abs(std::abs(lambda) - 1.0) > eps) return false;
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] - lambda * b[i]) > eps) return false;
    }
    return true;
}

inline Mat pauli(char letter) {
    switch (letter) {
        case 'I': return {{1, 0}, {0, 1}};
        case 'X': return {{0, 1}, {1, 0}};
        case 'Y': return {{0, cd(0, -1)}, {cd(0, 1), 0}};
        case 'Z': return {{1, 0}, {0, -1}};
    }
    assert(false);
    return {};
}

inline Mat hadamard() {
    double s = 1.0 / std::sqrt(2.0);
    return {{s, s}, {s, -s}};
}

inline Mat s_gate() { return {{1, 0}, {0, cd(0, 1)}}; }

// exp(-i theta P / 2)
inline Mat rotation(char axis, double theta) {
    Mat p = pauli(axis);
    Mat out = eye(2);
    cd c = std::cos(theta / 2), s = cd(0, -1) * std::sin(theta / 2);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) out[i][j] = c * (i == j ? 1.0 : 0.0) + s * p[i][j];
    }
    return out;
}

inline Mat h_prime(double theta1, double theta2, double phi) {
    double s = 1.0 / std::sqrt(2.0);
    return {{s * std::exp(cd(0, theta1)), s * std::exp(cd(0, theta1 + phi))},
            {s * std::exp(cd(0, theta2 - phi)), -s * std::exp(cd(0, theta2))}};
}

inline Mat cz4() {
    Mat m = eye(4);
    m[3][3] = -1;
    return m;
}

inline Mat cnot4() {
    Mat m = eye(4);
    m[2][2] = m[3][3] = 0;
    m[2][3] = m[3][2] = 1;
    return m;
}

// Pauli string as a full matrix; qubit 0 is the least significant amplitude
// bit, i.e. the LAST kron factor.
inline Mat pauli_string_matrix(size_t n, const std::string &letters, cd phase = 1.0) {
    assert(letters.size() == n);
    Mat out = {{phase}};
    for (size_t q = n; q-- > 0;) {
        // letters[q] for qubit q; higher qubits are more significant
        out = out;
        (void)q;
        break;
    }
    out = {{phase}};
    for (size_t q = n; q-- > 0;) {
        out = kron(out, pauli(letters[n - 1 - q]));
        (void)q;
    }
    // the loop above built kron(phase, P_{n-1}, ..., P_0) with letters listed
    // most-significant first
    return out;
}

// Embed a k-qubit operator on the listed qubits of an n-qubit register
// (amplitude index bit q = qubit q). qubits[0] is the operator's most
// significant input bit.
inline Mat embed(size_t n, const Mat &op, const std::vector<size_t> &qubits) {
    size_t dim = size_t{1} << n;
    size_t k = qubits.size();
    Mat out(dim, std::vector<cd>(dim, 0));
    for (size_t col = 0; col < dim; col++) {
        size_t sub_col = 0;
        for (size_t t = 0; t < k; t++) {
            sub_col = (sub_col << 1) | ((col >> qubits[t]) & 1);
        }
        for (size_t sub_row = 0; sub_row < (size_t{1} << k); sub_row++) {
            if (op[sub_row][sub_col] == cd(0)) continue;
            size_t row = col;
            for (size_t t = 0; t < k; t++) {
                size_t bit = (sub_row >> (k - 1 - t)) & 1;
                row = (row & ~(size_t{1} << qubits[t])) | (bit << qubits[t]);
            }
            out[row][col] += op[sub_row][sub_col];
        }
    }
    return out;
}

inline Vec apply(const Mat &op, const Vec &v) { return mul_vec(op, v); }

// Graph state over n qubits from an edge list (qubit = amplitude bit).
inline Vec graph_state(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    size_t dim = size_t{1} << n;
    Vec v(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0));
    for (auto [a, b] : edges) {
        for (size_t i = 0; i < dim; i++) {
            if (((i >> a) & 1) && ((i >> b) & 1)) v[i] = -v[i];
        }
    }
    return v;
}

}  // namespace oracle

#endif
