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

#ifndef GRAPHEMIT_ENGINES_H
#define GRAPHEMIT_ENGINES_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphemit/dense.hpp"
#include "graphemit/graph.hpp"
#include "graphemit/schedule.hpp"
#include "graphemit/tableau.hpp"

namespace graphemit {

struct MeasurementRecord {
    uint32_t step;
    uint32_t qubit;
    char basis;  // 'Z' or 'Y'
    int outcome;
    bool deterministic;
};

struct RunReport {
    std::string backend;
    uint64_t seed;
    std::vector<MeasurementRecord> measurements;
    std::vector<uint32_t> qubit_map;  // schedule id -> register index

    std::string to_json_string() const;
    // Outcomes in measurement order (for replay on the other backend).
    std::vector<int> outcomes() const;
};

struct StabilizerRun {
    Tableau state;
    RunReport report;
};

struct DenseRun {
    DenseState state;
    RunReport report;
};

// Execute a validated schedule. `forced` (if given) supplies outcomes for the
// measurements in order; shorter lists force only a prefix.
StabilizerRun run_stabilizer(const Schedule &s, uint64_t seed,
                             const std::vector<int> *forced = nullptr);
DenseRun run_dense(const Schedule &s, uint64_t seed, size_t qubit_cap = 14,
                   const std::vector<int> *forced = nullptr);

// Graph-plus-local-Clifford form of a stabilizer state: applying frame[q] to
// qubit q of |graph> reproduces the state exactly.
struct GraphFrame {
    Graph graph;
    std::vector<SingleQubitClifford> frame;
};

// Gaussian elimination over GF(2) with Hadamard pivots on non-invertible
// X-blocks (lowest qubit index first), then S-type diagonal clearing and sign
// fixes; deterministic canonical output.
GraphFrame extract_graph_frame(const Tableau &t);

// Amplitude vector of a stabilizer state (cap-guarded).
DenseState tableau_to_dense(const Tableau &t, size_t cap = 14);

// True iff every graph stabilizer, mapped through `keep` (vertex id -> qubit),
// has deterministic outcome +1 in t.
bool verify_graph_state(const Tableau &t, const Graph &g,
                        const std::vector<std::pair<uint32_t, uint32_t>> &keep);

// Dense matrix of a measurement- and allocation-free schedule restricted to
// `qubits` (first listed = most significant bit). Steps touching other qubits
// are rejected.
std::vector<std::vector<std::complex<double>>> dense_operator(
    const Schedule &s, const std::vector<uint32_t> &qubits);

}  // namespace graphemit

#endif
