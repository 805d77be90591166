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

#include "graphemit/tableau.hpp"

#include <algorithm>

#include "graphemit/errors.hpp"

namespace graphemit {

Tableau::Tableau(size_t n) : n_(0) {
    stab_.reserve(n);
    destab_.reserve(n);
    for (size_t q = 0; q < n; q++) append_qubit(false);
}

size_t Tableau::append_qubit(bool plus) {
    size_t q = n_;
    n_++;
    for (auto &row : stab_) {
        row = row.extended(n_);
    }
    for (auto &row : destab_) {
        row = row.extended(n_);
    }
    // |0>: stabilized by Z, destabilized by X. |+>: the reverse.
    stab_.push_back(PauliString::single(n_, q, plus ? PAULI_X : PAULI_Z));
    destab_.push_back(PauliString::single(n_, q, plus ? PAULI_Z : PAULI_X));
    return q;
}

void Tableau::apply_clifford(size_t q, const SingleQubitClifford &c) {
    if (q >= n_) throw DimensionError("apply_clifford: qubit out of range");
    for (auto &row : stab_) row = conjugate_pauli(c, q, row);
    for (auto &row : destab_) row = conjugate_pauli(c, q, row);
}

void Tableau::apply_cz(size_t a, size_t b) {
    if (a >= n_ || b >= n_ || a == b) throw DimensionError("apply_cz: bad operands");
    GateStep step = GateStep::cz(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
    for (auto &row : stab_) row = conjugate_pauli(step, row);
    for (auto &row : destab_) row = conjugate_pauli(step, row);
}

void Tableau::apply_cnot(size_t control, size_t target) {
    if (control >= n_ || target >= n_ || control == target) {
        throw DimensionError("apply_cnot: bad operands");
    }
    GateStep step = GateStep::cnot(static_cast<uint32_t>(control), static_cast<uint32_t>(target));
    for (auto &row : stab_) row = conjugate_pauli(step, row);
    for (auto &row : destab_) row = conjugate_pauli(step, row);
}

void Tableau::apply_pauli(const PauliString &p) {
    if (p.n > n_) throw DimensionError("apply_pauli: operator larger than register");
    PauliString q = p.n == n_ ? p : p.extended(n_);
    for (auto &row : stab_) {
        if (!row.commutes_with(q)) row.phase = static_cast<uint8_t>((row.phase + 2) & 3);
    }
    for (auto &row : destab_) {
        if (!row.commutes_with(q)) row.phase = static_cast<uint8_t>((row.phase + 2) & 3);
    }
}

void Tableau::apply(const GateStep &step) {
    switch (step.kind) {
        case StepKind::HPrime: {
            auto c = step.hprime.clifford();
            if (!c) throw UnsupportedGateError("H' phases are not multiples of pi/2");
            apply_clifford(step.q0, *c);
            return;
        }
        case StepKind::RotX:
            apply_clifford(step.q0, SingleQubitClifford::rot_x(step.quarter_turns));
            return;
        case StepKind::RotZ:
            apply_clifford(step.q0, SingleQubitClifford::rot_z(step.quarter_turns));
            return;
        case StepKind::CZ:
            apply_cz(step.q0, step.q1);
            return;
        case StepKind::CNOT:
            apply_cnot(step.q0, step.q1);
            return;
        case StepKind::Pump: {
            if (step.q0 >= n_) throw DimensionError("pump: emitter out of range");
            size_t photon = append_qubit(false);
            if (photon != step.q1) throw DimensionError("pump: photon id mismatch");
            apply_cnot(step.q0, photon);
            return;
        }
        case StepKind::NewQubit: {
            size_t q = append_qubit(step.new_plus);
            if (q != step.q0) throw DimensionError("new_qubit: id mismatch");
            return;
        }
        case StepKind::PauliFix:
            apply_pauli(step.fix);
            return;
        case StepKind::MeasureZ:
        case StepKind::MeasureY:
            throw UnsupportedGateError("measurements need an RNG; use measure()");
    }
}

MeasurementOutcome Tableau::measure(size_t q, StepKind basis, std::mt19937_64 &rng,
                                    std::optional<int> force) {
    if (q >= n_) throw DimensionError("measure: qubit out of range");
    uint8_t code = basis == StepKind::MeasureY ? PAULI_Y : PAULI_Z;
    if (basis != StepKind::MeasureY && basis != StepKind::MeasureZ) {
        throw UnsupportedGateError("measure: basis must be Z or Y");
    }
    return measure_observable(PauliString::single(n_, q, code), rng, force);
}

MeasurementOutcome Tableau::measure_observable(const PauliString &obs, std::mt19937_64 &rng,
                                               std::optional<int> force) {
    size_t pivot = n_;
    for (size_t i = 0; i < n_; i++) {
        if (!stab_[i].commutes_with(obs)) {
            pivot = i;
            break;
        }
    }
    if (pivot == n_) {
        // Deterministic: obs (or -obs) lies in the stabilizer group.
        auto value = deterministic_value(obs);
        if (!value) throw DimensionError("measure: observable not resolvable");
        if (force && *force != *value) {
            throw ForcedOutcomeError("forced outcome contradicts deterministic measurement");
        }
        return {*value, true};
    }
    PauliString anchor = stab_[pivot];
    for (size_t i = 0; i < n_; i++) {
        if (i != pivot && !stab_[i].commutes_with(obs)) stab_[i].mul(anchor);
        if (!destab_[i].commutes_with(obs)) destab_[i].mul(anchor);
    }
    // After the row sweeps, make the old anchor the destabilizer of the new row.
    destab_[pivot] = anchor;
    int outcome = force ? *force : (rng() & 1 ? -1 : 1);
    stab_[pivot] = obs;
    if (outcome == -1) stab_[pivot].phase = static_cast<uint8_t>((stab_[pivot].phase + 2) & 3);
    return {outcome, false};
}

std::optional<int> Tableau::deterministic_value(const PauliString &obs) const {
    if (obs.n != n_) throw DimensionError("deterministic_value: size mismatch");
    for (size_t i = 0; i < n_; i++) {
        if (!stab_[i].commutes_with(obs)) return std::nullopt;
    }
    // Express obs as a product of stabilizer rows via the destabilizers.
    PauliString acc = PauliString::identity(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!destab_[i].commutes_with(obs)) acc.mul(stab_[i]);
    }
    if (acc.x != obs.x || acc.z != obs.z) {
        throw DimensionError("deterministic_value: observable outside the group");
    }
    uint8_t rel = static_cast<uint8_t>((acc.phase - obs.phase) & 3);
    if (rel == 0) return 1;
    if (rel == 2) return -1;
    throw DimensionError("deterministic_value: non-Hermitian relation");
}

std::vector<PauliString> Tableau::canonical_stabilizers() const {
    // Reduced row echelon form over GF(2), columns ordered x_0..x_{n-1}, z_0..z_{n-1};
    // unique for a given stabilizer group, phases carried exactly.
    std::vector<PauliString> rows = stab_;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < n_; col++) {
        size_t q = col < n_ ? col : col - n_;
        bool use_x = col < n_;
        auto bit = [&](const PauliString &r) { return use_x ? r.x_bit(q) : r.z_bit(q); };
        size_t found = rows.size();
        for (size_t i = rank; i < rows.size(); i++) {
            if (bit(rows[i])) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[rank], rows[found]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != rank && bit(rows[i])) rows[i].mul(rows[rank]);
        }
        rank++;
    }
    return rows;
}

bool Tableau::same_state(const Tableau &other) const {
    if (n_ != other.n_) return false;
    return canonical_stabilizers() == other.canonical_stabilizers();
}

void Tableau::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        if (!stab_[i].is_hermitian()) throw DimensionError("stabilizer phase not +-1");
        for (size_t j = 0; j < n_; j++) {
            bool commute_ss = stab_[i].commutes_with(stab_[j]);
            if (!commute_ss) throw DimensionError("stabilizers must commute");
            bool commute_ds = destab_[i].commutes_with(stab_[j]);
            if ((i == j) == commute_ds) {
                throw DimensionError("destabilizer pairing violated");
            }
        }
    }
    // Symplectic independence: GF(2) rank of the 2n rows must be 2n.
    std::vector<PauliString> rows = stab_;
    rows.insert(rows.end(), destab_.begin(), destab_.end());
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < rows.size(); col++) {
        size_t q = col >> 1;
        bool use_x = (col & 1) == 0;
        size_t found = rows.size();
        for (size_t i = rank; i < rows.size(); i++) {
            bool bit = use_x ? rows[i].x_bit(q) : rows[i].z_bit(q);
            if (bit) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[rank], rows[found]);
        for (size_t i = rank + 1; i < rows.size(); i++) {
            bool bit = use_x ? rows[i].x_bit(q) : rows[i].z_bit(q);
            if (bit) rows[i].mul(rows[rank]);
        }
        rank++;
    }
    if (rank != 2 * n_) throw DimensionError("tableau rows not symplectically independent");
}

}  // namespace graphemit
