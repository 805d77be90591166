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

#include "graphemit/gates.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "graphemit/errors.hpp"

namespace graphemit {

namespace {

using cd = std::complex<double>;

bool near_multiple_of_half_pi(double angle, double eps) {
    double r = std::remainder(angle, M_PI / 2.0);
    return std::abs(r) < eps;
}

// Conjugation table for a fixed 2-qubit Clifford: 16 input codes (a | b<<2) ->
// (output codes, i^k). Generated from the literal 4x4 matrices once.
struct TwoQubitConjTable {
    uint8_t out_code[16];
    uint8_t out_phase[16];
};

using Mat4 = std::array<cd, 16>;

Mat4 mat4_mul(const Mat4 &a, const Mat4 &b) {
    Mat4 out{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            cd acc = 0;
            for (int k = 0; k < 4; k++) acc += a[i * 4 + k] * b[k * 4 + j];
            out[i * 4 + j] = acc;
        }
    }
    return out;
}

Mat4 mat4_dag(const Mat4 &a) {
    Mat4 out{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) out[i * 4 + j] = std::conj(a[j * 4 + i]);
    }
    return out;
}

Mat2 literal_pauli2(uint8_t code) {
    switch (code) {
        case PAULI_I: return {1, 0, 0, 1};
        case PAULI_X: return {0, 1, 1, 0};
        case PAULI_Z: return {1, 0, 0, -1};
        case PAULI_Y: return {0, cd(0, -1), cd(0, 1), 0};
    }
    std::abort();
}

// kron with the first factor on the higher bit.
Mat4 kron22(const Mat2 &a, const Mat2 &b) {
    Mat4 out{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    out[(i * 2 + k) * 4 + (j * 2 + l)] = a[i * 2 + j] * b[k * 2 + l];
                }
            }
        }
    }
    return out;
}

TwoQubitConjTable build_conj_table(const Mat4 &u) {
    TwoQubitConjTable t{};
    Mat4 ud = mat4_dag(u);
    for (uint8_t in = 0; in < 16; in++) {
        uint8_t a = in & 3, b = (in >> 2) & 3;
        Mat4 p = kron22(literal_pauli2(a), literal_pauli2(b));
        Mat4 conj = mat4_mul(mat4_mul(u, p), ud);
        bool found = false;
        for (uint8_t oa = 0; oa < 16 && !found; oa++) {
            Mat4 q = kron22(literal_pauli2(oa & 3), literal_pauli2((oa >> 2) & 3));
            for (uint8_t k = 0; k < 4 && !found; k++) {
                cd ph = k == 0 ? cd(1) : k == 1 ? cd(0, 1) : k == 2 ? cd(-1) : cd(0, -1);
                bool ok = true;
                for (int e = 0; e < 16; e++) {
                    if (std::abs(conj[e] - ph * q[e]) > 1e-9) { ok = false; break; }
                }
                if (ok) {
                    t.out_code[in] = oa;
                    t.out_phase[in] = k;
                    found = true;
                }
            }
        }
        if (!found) std::abort();
    }
    return t;
}

const TwoQubitConjTable &cz_table() {
    static const TwoQubitConjTable t = build_conj_table({1, 0, 0, 0,
                                                         0, 1, 0, 0,
                                                         0, 0, 1, 0,
                                                         0, 0, 0, -1});
    return t;
}

const TwoQubitConjTable &cnot_table() {
    // control on the higher bit (first factor)
    static const TwoQubitConjTable t = build_conj_table({1, 0, 0, 0,
                                                         0, 1, 0, 0,
                                                         0, 0, 0, 1,
                                                         0, 0, 1, 0});
    return t;
}

void conjugate_two_qubit(const TwoQubitConjTable &t, size_t qa, size_t qb, PauliString &p) {
    uint8_t in = static_cast<uint8_t>(p.code(qa) | (p.code(qb) << 2));
    uint8_t out = t.out_code[in];
    p.set_code(qa, out & 3);
    p.set_code(qb, (out >> 2) & 3);
    p.phase = static_cast<uint8_t>((p.phase + t.out_phase[in]) & 3);
}

}  // namespace

bool HPrimeParams::is_hadamard(double eps) const {
    return std::abs(std::remainder(theta1, 2 * M_PI)) < eps &&
           std::abs(std::remainder(theta2, 2 * M_PI)) < eps &&
           std::abs(std::remainder(phi, 2 * M_PI)) < eps;
}

bool HPrimeParams::is_clifford(double eps) const {
    return near_multiple_of_half_pi(theta1, eps) && near_multiple_of_half_pi(theta2, eps) &&
           near_multiple_of_half_pi(phi, eps);
}

Mat2 HPrimeParams::matrix() const {
    double s = 1.0 / std::sqrt(2.0);
    return {s * std::exp(cd(0, theta1)), s * std::exp(cd(0, theta1 + phi)),
            s * std::exp(cd(0, theta2 - phi)), -s * std::exp(cd(0, theta2))};
}

std::optional<SingleQubitClifford> HPrimeParams::clifford(double eps) const {
    if (!is_clifford(eps)) return std::nullopt;
    return SingleQubitClifford::from_matrix(matrix(), 1e-7);
}

const char *step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::HPrime: return "h_prime";
        case StepKind::RotX: return "rot_x";
        case StepKind::RotZ: return "rot_z";
        case StepKind::CZ: return "cz";
        case StepKind::CNOT: return "cnot";
        case StepKind::Pump: return "pump";
        case StepKind::MeasureZ: return "measure_z";
        case StepKind::MeasureY: return "measure_y";
        case StepKind::NewQubit: return "new_qubit";
        case StepKind::PauliFix: return "pauli_fix";
    }
    return "?";
}

GateStep GateStep::h_prime(uint32_t q, HPrimeParams p) {
    GateStep s;
    s.kind = StepKind::HPrime;
    s.q0 = q;
    s.hprime = p;
    return s;
}

GateStep GateStep::rot_x(uint32_t q, int quarter) {
    GateStep s;
    s.kind = StepKind::RotX;
    s.q0 = q;
    s.quarter_turns = static_cast<int8_t>(quarter);
    return s;
}

GateStep GateStep::rot_z(uint32_t q, int quarter) {
    GateStep s;
    s.kind = StepKind::RotZ;
    s.q0 = q;
    s.quarter_turns = static_cast<int8_t>(quarter);
    return s;
}

GateStep GateStep::cz(uint32_t a, uint32_t b) {
    GateStep s;
    s.kind = StepKind::CZ;
    s.q0 = a;
    s.q1 = b;
    return s;
}

GateStep GateStep::cnot(uint32_t control, uint32_t target) {
    GateStep s;
    s.kind = StepKind::CNOT;
    s.q0 = control;
    s.q1 = target;
    return s;
}

GateStep GateStep::pump(uint32_t emitter, uint32_t photon) {
    GateStep s;
    s.kind = StepKind::Pump;
    s.q0 = emitter;
    s.q1 = photon;
    return s;
}

GateStep GateStep::measure_z(uint32_t q) {
    GateStep s;
    s.kind = StepKind::MeasureZ;
    s.q0 = q;
    return s;
}

GateStep GateStep::measure_y(uint32_t q) {
    GateStep s;
    s.kind = StepKind::MeasureY;
    s.q0 = q;
    return s;
}

GateStep GateStep::new_qubit(uint32_t q, bool plus) {
    GateStep s;
    s.kind = StepKind::NewQubit;
    s.q0 = q;
    s.new_plus = plus;
    return s;
}

GateStep GateStep::pauli_fix(PauliString fix, std::optional<uint32_t> condition) {
    GateStep s;
    s.kind = StepKind::PauliFix;
    s.fix = std::move(fix);
    s.condition_step = condition;
    return s;
}

bool GateStep::clifford_representable(double eps) const {
    if (kind == StepKind::HPrime) return hprime.is_clifford(eps);
    return true;
}

PauliString conjugate_pauli(const SingleQubitClifford &c, size_t q, const PauliString &p) {
    PauliString out = p;
    uint8_t code = out.code(q);
    uint8_t phase = out.phase;
    c.conjugate(code, phase);
    out.set_code(q, code);
    out.phase = phase & 3;
    return out;
}

PauliString conjugate_pauli(const GateStep &step, const PauliString &p) {
    switch (step.kind) {
        case StepKind::HPrime: {
            auto c = step.hprime.clifford();
            if (!c) {
                throw UnsupportedGateError("H' phases are not multiples of pi/2");
            }
            if (step.q0 >= p.n) throw DimensionError("operand outside Pauli register");
            return conjugate_pauli(*c, step.q0, p);
        }
        case StepKind::RotX:
            if (step.q0 >= p.n) throw DimensionError("operand outside Pauli register");
            return conjugate_pauli(SingleQubitClifford::rot_x(step.quarter_turns), step.q0, p);
        case StepKind::RotZ:
            if (step.q0 >= p.n) throw DimensionError("operand outside Pauli register");
            return conjugate_pauli(SingleQubitClifford::rot_z(step.quarter_turns), step.q0, p);
        case StepKind::CZ: {
            if (step.q0 >= p.n || step.q1 >= p.n) throw DimensionError("operand outside Pauli register");
            PauliString out = p;
            conjugate_two_qubit(cz_table(), step.q0, step.q1, out);
            return out;
        }
        case StepKind::CNOT:
        case StepKind::Pump: {
            // Pump's unitary part is its emission CNOT.
            if (step.q0 >= p.n || step.q1 >= p.n) throw DimensionError("operand outside Pauli register");
            PauliString out = p;
            // cnot_table has the control on the first (higher) slot = qa.
            conjugate_two_qubit(cnot_table(), step.q1, step.q0, out);
            return out;
        }
        case StepKind::PauliFix: {
            // F P F^dag for Pauli F: sign flip iff they anticommute.
            PauliString out = p;
            size_t m = std::max(p.n, step.fix.n);
            if (!step.fix.extended(m).commutes_with(p.extended(m))) {
                out.phase = static_cast<uint8_t>((out.phase + 2) & 3);
            }
            return out;
        }
        case StepKind::MeasureZ:
        case StepKind::MeasureY:
        case StepKind::NewQubit:
            throw UnsupportedGateError("conjugate_pauli: step has no unitary action");
    }
    std::abort();
}

}  // namespace graphemit
