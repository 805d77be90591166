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

#ifndef GRAPHEMIT_GATES_H
#define GRAPHEMIT_GATES_H

#include <cstdint>
#include <optional>
#include <string>

#include "graphemit/clifford.hpp"
#include "graphemit/pauli.hpp"

namespace graphemit {

// Generalized Hadamard phases; the proper Hadamard is all-zero.
struct HPrimeParams {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double phi = 0.0;

    bool is_hadamard(double eps = 1e-9) const;
    // Clifford-compilable iff every angle is a multiple of pi/2.
    bool is_clifford(double eps = 1e-9) const;
    Mat2 matrix() const;
    // The tableau-level operation when Clifford; nullopt otherwise.
    std::optional<SingleQubitClifford> clifford(double eps = 1e-9) const;
};

enum class StepKind : uint8_t {
    HPrime,
    RotX,      // quarter_turns in {+1,-1}: exp(-i quarter pi/4 X)
    RotZ,
    CZ,        // operands q0, q1
    CNOT,      // control q0, target q1
    Pump,      // emitter q0 -> new photon q1 (allocates q1)
    MeasureZ,  // q0
    MeasureY,  // q0
    NewQubit,  // allocates q0 in |0> or |+>
    PauliFix,  // apply `fix`; if condition_step set, only when that measurement was -1
};

const char *step_kind_name(StepKind kind);

struct GateStep {
    StepKind kind = StepKind::HPrime;
    uint32_t q0 = 0;
    uint32_t q1 = 0;
    int8_t quarter_turns = 0;
    HPrimeParams hprime{};
    bool new_plus = false;  // NewQubit: |+> if true, else |0>
    PauliString fix;
    std::optional<uint32_t> condition_step;
    std::string note;  // provenance (macro expansion source)

    static GateStep h_prime(uint32_t q, HPrimeParams p = {});
    static GateStep hadamard(uint32_t q) { return h_prime(q); }
    static GateStep rot_x(uint32_t q, int quarter);
    static GateStep rot_z(uint32_t q, int quarter);
    static GateStep cz(uint32_t a, uint32_t b);
    static GateStep cnot(uint32_t control, uint32_t target);
    static GateStep pump(uint32_t emitter, uint32_t photon);
    static GateStep measure_z(uint32_t q);
    static GateStep measure_y(uint32_t q);
    static GateStep new_qubit(uint32_t q, bool plus);
    static GateStep pauli_fix(PauliString fix, std::optional<uint32_t> condition = {});

    bool is_measurement() const { return kind == StepKind::MeasureZ || kind == StepKind::MeasureY; }
    bool allocates() const { return kind == StepKind::NewQubit || kind == StepKind::Pump; }
    // Clifford-representable on the stabilizer backend.
    bool clifford_representable(double eps = 1e-9) const;
};

// C P C^dag for a unitary Clifford step (measurements and allocation steps are
// rejected; Pump conjugates through its CNOT part only if the register already
// covers the photon). Exact including phase.
PauliString conjugate_pauli(const GateStep &step, const PauliString &p);
PauliString conjugate_pauli(const SingleQubitClifford &c, size_t q, const PauliString &p);

}  // namespace graphemit

#endif
