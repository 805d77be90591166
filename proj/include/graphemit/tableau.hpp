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

#ifndef GRAPHEMIT_TABLEAU_H
#define GRAPHEMIT_TABLEAU_H

#include <optional>
#include <random>
#include <vector>

#include "graphemit/gates.hpp"
#include "graphemit/pauli.hpp"

namespace graphemit {

struct MeasurementOutcome {
    int value;  // +1 or -1
    bool deterministic;
};

// Stabilizer/destabilizer generating set of an n-qubit stabilizer state.
// Destabilizer row i anticommutes with stabilizer row i and commutes with all
// other rows; they exist purely to make measurement and sign queries O(n^2).
class Tableau {
  public:
    Tableau() = default;
    // |0...0> on n qubits.
    explicit Tableau(size_t n);

    size_t qubit_count() const { return n_; }
    // Appends a fresh qubit in |0> (plus=false) or |+> (plus=true).
    size_t append_qubit(bool plus);

    const PauliString &stabilizer(size_t i) const { return stab_[i]; }
    const PauliString &destabilizer(size_t i) const { return destab_[i]; }

    void apply(const GateStep &step);
    void apply_clifford(size_t q, const SingleQubitClifford &c);
    void apply_cz(size_t a, size_t b);
    void apply_cnot(size_t control, size_t target);
    void apply_pauli(const PauliString &p);

    // Measure the single-qubit observable (Z or Y) on q. If `force` is given
    // the outcome is forced (error when it contradicts a deterministic value).
    MeasurementOutcome measure(size_t q, StepKind basis, std::mt19937_64 &rng,
                               std::optional<int> force = std::nullopt);

    // If obs (a Hermitian Pauli) has a deterministic value on this state,
    // return it; otherwise nullopt.
    std::optional<int> deterministic_value(const PauliString &obs) const;

    // Unique generating set for the stabilizer group (Gaussian elimination
    // with fixed pivot order); equal groups produce identical row lists.
    std::vector<PauliString> canonical_stabilizers() const;
    bool same_state(const Tableau &other) const;

    // Full invariant check: commutation structure, symplectic rank, phases.
    void check_invariants() const;

  private:
    MeasurementOutcome measure_observable(const PauliString &obs, std::mt19937_64 &rng,
                                          std::optional<int> force);

    size_t n_ = 0;
    std::vector<PauliString> stab_;
    std::vector<PauliString> destab_;
};

}  // namespace graphemit

#endif
