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

#ifndef GRAPHEMIT_COMPILER_H
#define GRAPHEMIT_COMPILER_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphemit/engines.hpp"
#include "graphemit/graph.hpp"
#include "graphemit/schedule.hpp"
#include "graphemit/tableau.hpp"

namespace graphemit {

// Which emitter pairs admit the two-emitter entangling macro.
struct EmitterLayout {
    std::string topology;  // "line", "grid", "explicit"
    size_t count = 0;
    size_t grid_w = 0, grid_h = 0;
    std::vector<std::pair<uint32_t, uint32_t>> couplings;  // normalized a < b

    static EmitterLayout line(size_t n);
    static EmitterLayout grid(size_t w, size_t h);
    static EmitterLayout make_explicit(size_t n,
                                       std::vector<std::pair<uint32_t, uint32_t>> pairs);
    static EmitterLayout complete(size_t n);

    bool coupled(uint32_t a, uint32_t b) const;
    // BFS shortest path a..b through couplings; empty when disconnected.
    std::vector<uint32_t> shortest_path(uint32_t a, uint32_t b) const;
};

struct ClusterDims {
    size_t d = 2;
    std::vector<size_t> extents;  // sheet extents first, length last

    static ClusterDims grid2(size_t n, size_t m) { return {2, {n, m}}; }
    static ClusterDims grid3(size_t w, size_t h, size_t m) { return {3, {w, h, m}}; }
};

struct CompilationReport {
    size_t emitters_used = 0;
    size_t g_count = 0;
    size_t swap_count = 0;
    size_t entangling_layers = 0;
    size_t total_layers = 0;
    std::vector<size_t> active_layer_trace;
    size_t peak_active = 0;

    std::string to_json_string() const;
};

struct CompilationResult {
    Schedule schedule;
    CompilationReport report;
    // target vertex id -> photon qubit id
    std::vector<std::pair<uint32_t, uint32_t>> photon_of_vertex;
};

// Incremental schedule construction with exact bookkeeping: a stabilizer
// simulation of the all-plus branch supplies the conditional Pauli fixes that
// make every measurement branch produce the same state, and a mirror graph
// tracks the entanglement structure the macros manipulate.
class ProtocolBuilder {
  public:
    ProtocolBuilder() = default;

    uint32_t add_qubit(QubitRole role, bool plus = true);
    // Pump followed by H on the emitter; returns the new photon id.
    uint32_t pump_cycle(uint32_t emitter);
    // The two-emitter entangling macro: four CZs interleaved with quarter
    // rotations, photon rotations deferred. Toggles the edge between the
    // emitters' attached photons.
    void apply_g(uint32_t a, uint32_t b);
    // State swap via three CNOTs; attachment bookkeeping follows.
    void swap_emitters(uint32_t a, uint32_t b);
    // Z measurement with conditional frame fix; deletes the vertex from the
    // tracked graph (the qubit stays in the register).
    void measure_detach(uint32_t q);
    // Y measurement with conditional fix plus the deterministic neighbor
    // corrections; tracked graph becomes LC(v) minus v.
    void measure_y_graph(uint32_t q);
    // Hadamard re-initialization of a measured-out emitter.
    void reinit(uint32_t emitter);
    // Local complementation realized as rotation steps.
    void local_complement_steps(uint32_t v);

    void nv_pump(uint32_t spin, uint32_t center);
    void nv_g(uint32_t s1, uint32_t s2, uint32_t c1, uint32_t c2);

    void note_next(const std::string &note) { pending_note_ = note; }
    void new_layer() { layer_++; }
    uint32_t layer() const { return layer_; }

    // Emitter's attached photon (pendant invariant), if any.
    std::optional<uint32_t> attached_photon(uint32_t emitter) const;
    bool edge(uint32_t a, uint32_t b) const;
    std::vector<uint32_t> graph_neighbors(uint32_t q) const;
    bool isolated(uint32_t q) const;
    QubitRole role(uint32_t q) const { return schedule_.roles[q]; }
    size_t qubit_count() const { return schedule_.qubit_count(); }
    const Tableau &tableau() const { return sim_; }
    size_t g_count() const { return g_count_; }
    size_t swap_count() const { return swap_count_; }

    // Emit accumulated per-photon rotation fixes (ascending qubit id).
    void flush_photon_fixes();
    void flush_photon_fix(uint32_t photon);

    Schedule finish();

  private:
    void push(GateStep step);
    void apply_to_sim(const GateStep &step);
    void measure_with_fix(uint32_t q, StepKind basis);
    void defer_photon_rotation(uint32_t photon, int z_quarters);

    Schedule schedule_;
    Tableau sim_;
    std::mt19937_64 rng_{0};  // never consulted: outcomes forced to +1
    std::vector<std::vector<bool>> adj_;
    std::vector<int> deferred_z_quarters_;
    std::string pending_note_;
    uint32_t layer_ = 0;
    size_t g_count_ = 0;
    size_t swap_count_ = 0;
};

// Emitter-only gate steps of the entangling macro on qubits (a, b); the
// sequence whose dense 4x4 form is the maximally entangling primitive.
std::vector<GateStep> g_emitter_steps(uint32_t a, uint32_t b);

// Single H' step; callers check clifford_representable() for backend choice.
GateStep compile_hprime(uint32_t emitter, const HPrimeParams &params);

CompilationResult compile_lr_chain(size_t n_photons);
CompilationResult compile_parallel_cluster(const ClusterDims &dims, const EmitterLayout &layout);
CompilationResult compile_general_graph(const Graph &target, const EmitterLayout &layout,
                                        const std::vector<uint32_t> *ordering = nullptr);

}  // namespace graphemit

#endif
