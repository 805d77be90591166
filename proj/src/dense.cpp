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

#include "graphemit/dense.hpp"

#include <bit>
#include <cmath>

#include "graphemit/errors.hpp"

namespace graphemit {

namespace {
using cd = std::complex<double>;
}

DenseState DenseState::vacuum() {
    DenseState s;
    s.n = 0;
    s.amps = {cd(1, 0)};
    return s;
}

DenseState DenseState::zero_state(size_t n) {
    return basis_state(n, 0);
}

DenseState DenseState::basis_state(size_t n, uint64_t index) {
    DenseState s;
    s.n = n;
    s.amps.assign(uint64_t{1} << n, cd(0, 0));
    s.amps[index] = cd(1, 0);
    return s;
}

void DenseState::append_qubit(bool plus, size_t cap) {
    if (n + 1 > cap) {
        throw ResourceError("dense register would exceed the qubit cap (" + std::to_string(cap) + ")");
    }
    size_t dim = amps.size();
    amps.resize(dim << 1);
    if (plus) {
        double s = 1.0 / std::sqrt(2.0);
        for (size_t i = 0; i < dim; i++) {
            amps[i + dim] = amps[i] * s;
            amps[i] *= s;
        }
    }
    n++;
}

void DenseState::apply_1q(size_t q, const Mat2 &u) {
    if (q >= n) throw DimensionError("apply_1q: qubit out of range");
    size_t stride = size_t{1} << q;
    for (size_t base = 0; base < amps.size(); base += stride << 1) {
        for (size_t i = base; i < base + stride; i++) {
            cd a0 = amps[i], a1 = amps[i + stride];
            amps[i] = u[0] * a0 + u[1] * a1;
            amps[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void DenseState::apply_clifford(size_t q, const SingleQubitClifford &c) {
    apply_1q(q, c.matrix());
}

void DenseState::apply_cz(size_t a, size_t b) {
    if (a >= n || b >= n || a == b) throw DimensionError("apply_cz: bad operands");
    uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == mask) amps[i] = -amps[i];
    }
}

void DenseState::apply_cnot(size_t control, size_t target) {
    if (control >= n || target >= n || control == target) {
        throw DimensionError("apply_cnot: bad operands");
    }
    uint64_t cmask = uint64_t{1} << control;
    uint64_t tmask = uint64_t{1} << target;
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

void DenseState::apply_pauli(const PauliString &p) {
    if (p.n > n) throw DimensionError("apply_pauli: operator larger than register");
    static const cd phases[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    uint64_t xmask = 0, zmask = 0, ymask = 0;
    for (size_t q = 0; q < p.n; q++) {
        if (p.x_bit(q)) xmask |= uint64_t{1} << q;
        if (p.z_bit(q)) zmask |= uint64_t{1} << q;
        if (p.x_bit(q) && p.z_bit(q)) ymask |= uint64_t{1} << q;
    }
    std::vector<cd> out(amps.size());
    for (size_t i = 0; i < amps.size(); i++) {
        size_t j = i ^ xmask;
        int ipow = static_cast<int>(p.phase);
        // Z-only qubits keep their bit; each set bit contributes -1.
        ipow += 2 * std::popcount(i & zmask & ~ymask);
        // literal Y: |0> -> i|1>, |1> -> -i|0>.
        ipow += std::popcount(ymask & ~i);
        ipow += 3 * std::popcount(static_cast<uint64_t>(i) & ymask);
        out[j] = amps[i] * phases[ipow & 3];
    }
    amps = std::move(out);
}

void DenseState::apply(const GateStep &step, size_t cap) {
    switch (step.kind) {
        case StepKind::HPrime:
            apply_1q(step.q0, step.hprime.matrix());
            return;
        case StepKind::RotX:
            apply_1q(step.q0, rot_x_matrix(step.quarter_turns));
            return;
        case StepKind::RotZ:
            apply_1q(step.q0, rot_z_matrix(step.quarter_turns));
            return;
        case StepKind::CZ:
            apply_cz(step.q0, step.q1);
            return;
        case StepKind::CNOT:
            apply_cnot(step.q0, step.q1);
            return;
        case StepKind::Pump: {
            if (step.q0 >= n) throw DimensionError("pump: emitter out of range");
            if (step.q1 != n) throw DimensionError("pump: photon id mismatch");
            append_qubit(false, cap);
            apply_cnot(step.q0, step.q1);
            return;
        }
        case StepKind::NewQubit:
            if (step.q0 != n) throw DimensionError("new_qubit: id mismatch");
            append_qubit(step.new_plus, cap);
            return;
        case StepKind::PauliFix:
            apply_pauli(step.fix);
            return;
        case StepKind::MeasureZ:
        case StepKind::MeasureY:
            throw UnsupportedGateError("measurements need an RNG; use measure()");
    }
}

MeasurementOutcome DenseState::measure(size_t q, StepKind basis, std::mt19937_64 &rng,
                                       std::optional<int> force) {
    if (q >= n) throw DimensionError("measure: qubit out of range");
    // Probability of outcome +1 via the projector (I + B)/2.
    DenseState projected = *this;
    if (basis == StepKind::MeasureZ) {
        uint64_t mask = uint64_t{1} << q;
        for (size_t i = 0; i < projected.amps.size(); i++) {
            if (i & mask) projected.amps[i] = 0;
        }
    } else if (basis == StepKind::MeasureY) {
        PauliString y = PauliString::single(n, q, PAULI_Y);
        DenseState rotated = *this;
        rotated.apply_pauli(y);
        for (size_t i = 0; i < projected.amps.size(); i++) {
            projected.amps[i] = 0.5 * (amps[i] + rotated.amps[i]);
        }
    } else {
        throw UnsupportedGateError("measure: basis must be Z or Y");
    }
    double p_plus = 0;
    for (const cd &a : projected.amps) p_plus += std::norm(a);
    bool deterministic = p_plus > 1.0 - 1e-9 || p_plus < 1e-9;
    int outcome;
    if (force) {
        outcome = *force;
        double p = outcome == 1 ? p_plus : 1.0 - p_plus;
        if (p < 1e-9) {
            throw ForcedOutcomeError("forced outcome has (near-)zero probability");
        }
    } else if (deterministic) {
        outcome = p_plus > 0.5 ? 1 : -1;
    } else {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        outcome = dist(rng) < p_plus ? 1 : -1;
    }
    if (outcome == 1) {
        amps = std::move(projected.amps);
    } else {
        for (size_t i = 0; i < amps.size(); i++) amps[i] -= projected.amps[i];
    }
    renormalize();
    return {outcome, deterministic};
}

double DenseState::norm() const {
    double total = 0;
    for (const cd &a : amps) total += std::norm(a);
    return std::sqrt(total);
}

void DenseState::renormalize() {
    double m = norm();
    if (m < 1e-12) throw DimensionError("state collapsed to zero norm");
    for (cd &a : amps) a /= m;
}

bool equal_up_to_global_phase(const DenseState &a, const DenseState &b, double tol) {
    if (a.n != b.n) throw DimensionError("equal_up_to_global_phase: dimension mismatch");
    size_t k = 0;
    for (size_t i = 1; i < a.amps.size(); i++) {
        if (std::abs(a.amps[i]) > std::abs(a.amps[k])) k = i;
    }
    if (std::abs(b.amps[k]) < tol) return false;
    cd lambda = a.amps[k] / b.amps[k];
    lambda /= std::abs(lambda);
    for (size_t i = 0; i < a.amps.size(); i++) {
        if (std::abs(a.amps[i] - lambda * b.amps[i]) > tol) return false;
    }
    return true;
}

Mat2 rot_x_matrix(int quarter) {
    double theta = quarter * M_PI / 4.0;
    cd c = std::cos(theta), s = cd(0, -1) * std::sin(theta);
    return {c, s, s, c};
}

Mat2 rot_z_matrix(int quarter) {
    double theta = quarter * M_PI / 4.0;
    return {std::exp(cd(0, -theta)), 0, 0, std::exp(cd(0, theta))};
}

}  // namespace graphemit
