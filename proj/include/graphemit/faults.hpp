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

#ifndef GRAPHEMIT_FAULTS_H
#define GRAPHEMIT_FAULTS_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphemit/compiler.hpp"
#include "graphemit/schedule.hpp"

namespace graphemit {

// A single Pauli fault inserted after step `step` (before step+1).
struct FaultSpec {
    uint32_t step;   // boundary: fault acts after this step completes
    uint32_t qubit;  // must be allocated at that point
    uint8_t pauli;   // PAULI_X / PAULI_Y / PAULI_Z
};

struct ErrorTrace {
    // Residual conjugated to the end of the schedule; support excludes
    // measured qubits (their corruption is carried by outcome flips).
    PauliString final_residual;
    std::vector<PauliString> per_step;     // residual after each later step
    std::vector<uint32_t> flipped_steps;   // measurement steps with inverted outcome
    std::vector<uint32_t> support;         // qubits of final_residual
    std::vector<uint32_t> photon_support;  // restriction to photon qubits
};

// Conjugate the fault through every subsequent step. Measurements record an
// outcome flip when the residual anticommutes with the observable, and the
// measured qubit is dropped from the residual; conditional fixes fold in when
// their condition flips.
ErrorTrace propagate_fault(const Schedule &s, const FaultSpec &fault);

struct FaultReportEntry {
    FaultSpec fault;
    std::string residual;  // Pauli text
    std::vector<uint32_t> photon_support;
    size_t coupling_degree;  // n in the n+2 bound (light cone)
    size_t bound;
    bool within_bound;
};

struct LocalizationReport {
    std::vector<FaultReportEntry> entries;
    // max photon support seen per emitter qubit
    std::vector<std::pair<uint32_t, size_t>> max_support_per_emitter;
    size_t counterexamples = 0;

    std::string to_json_string() const;
};

// Exhaustive sweep over (step boundary, emitter qubit, Pauli) faults; the
// per-fault bound uses the emitter's degree in the entangling-coupling graph
// over the steps after the fault (light-cone reading).
LocalizationReport localization_bound_check(const Schedule &s, size_t threads = 1);

}  // namespace graphemit

#endif
