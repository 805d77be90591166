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

#ifndef GRAPHEMIT_DENSE_H
#define GRAPHEMIT_DENSE_H

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "graphemit/clifford.hpp"
#include "graphemit/gates.hpp"
#include "graphemit/tableau.hpp"

namespace graphemit {

// Complex amplitude vector over the computational basis; amplitude index bit q
// corresponds to qubit q. Slow exact oracle for small registers.
struct DenseState {
    size_t n = 0;
    std::vector<std::complex<double>> amps;  // size 2^n

    static DenseState vacuum();  // zero qubits, amplitude 1
    static DenseState zero_state(size_t n);
    static DenseState basis_state(size_t n, uint64_t index);

    void append_qubit(bool plus, size_t cap);
    void apply_1q(size_t q, const Mat2 &u);
    void apply_clifford(size_t q, const SingleQubitClifford &c);
    void apply_cz(size_t a, size_t b);
    void apply_cnot(size_t control, size_t target);
    void apply_pauli(const PauliString &p);
    // Applies any non-measurement step; cap guards allocation growth.
    void apply(const GateStep &step, size_t cap);

    // Exact-probability measurement of Z or Y on q; projects and renormalizes.
    // Forcing an outcome whose probability is below 1e-9 is an error.
    MeasurementOutcome measure(size_t q, StepKind basis, std::mt19937_64 &rng,
                               std::optional<int> force = std::nullopt);

    double norm() const;
    void renormalize();
};

// True iff max_k |a_k - e^{i lambda} b_k| <= tol for the phase aligning the
// largest-magnitude amplitude of a.
bool equal_up_to_global_phase(const DenseState &a, const DenseState &b, double tol = 1e-10);

Mat2 rot_x_matrix(int quarter);
Mat2 rot_z_matrix(int quarter);

}  // namespace graphemit

#endif
