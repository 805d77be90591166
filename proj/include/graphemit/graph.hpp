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

#ifndef GRAPHEMIT_GRAPH_H
#define GRAPHEMIT_GRAPH_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphemit/pauli.hpp"

namespace graphemit {

enum class VertexRole : uint8_t { Photon, Emitter, Nuclear };

const char *vertex_role_name(VertexRole role);
VertexRole vertex_role_from_name(const std::string &name);

// Labeled simple graph over stably-identified vertices. The adjacency is a
// packed symmetric bit-matrix keyed by vertex order; graphs up to 64 vertices
// use one machine word per row.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<uint32_t> ids, std::vector<VertexRole> roles);
    // n photon vertices with ids 0..n-1.
    static Graph with_photons(size_t n);

    static Graph path(size_t n);
    static Graph cycle(size_t n);
    static Graph complete(size_t n);
    // Grid ids: x + w*y (and + w*h*z for 3D); edges between lattice neighbors.
    static Graph grid(size_t w, size_t h);
    static Graph grid3(size_t w, size_t h, size_t d);

    size_t vertex_count() const { return ids_.size(); }
    const std::vector<uint32_t> &ids() const { return ids_; }
    const std::vector<VertexRole> &roles() const { return roles_; }
    VertexRole role(size_t index) const { return roles_[index]; }
    void set_role(size_t index, VertexRole role) { roles_[index] = role; }

    std::optional<size_t> index_of(uint32_t id) const;
    size_t require_index(uint32_t id) const;

    bool has_edge(size_t i, size_t j) const;
    void set_edge(size_t i, size_t j, bool present);
    void toggle_edge(size_t i, size_t j);
    std::vector<size_t> neighbors(size_t i) const;
    size_t degree(size_t i) const;
    // Edges as (i, j) index pairs with i < j, lexicographic.
    std::vector<std::pair<size_t, size_t>> edges() const;
    size_t edge_count() const;

    const std::vector<uint64_t> &adjacency_words() const { return adj_; }
    size_t words_per_row() const { return words_; }

    bool operator==(const Graph &other) const = default;

    std::string to_json_string() const;
    static Graph from_json_string(const std::string &text);
    std::string to_dot() const;

  private:
    std::vector<uint32_t> ids_;
    std::vector<VertexRole> roles_;
    size_t words_ = 0;
    std::vector<uint64_t> adj_;
};

// Toggle every edge among the neighbors of vertex `id`; the rest unchanged.
Graph local_complement(const Graph &g, uint32_t id);

// One generator per vertex: X there, Z on each neighbor, phase +1, qubit order
// = vertex order.
std::vector<PauliString> stabilizer_generators(const Graph &g);

// Subgraph decomposition along a bipartition of the vertex set.
struct AdjacencyPartition {
    std::vector<uint32_t> part0;  // vertex ids
    std::vector<uint32_t> part1;
    // Bit matrices, row-major by position within each part.
    std::vector<std::vector<bool>> n0;   // |part0| x |part0|
    std::vector<std::vector<bool>> n1;   // |part1| x |part1|
    std::vector<std::vector<bool>> n01;  // |part0| x |part1|
};

AdjacencyPartition partition_adjacency(const Graph &g, const std::vector<uint32_t> &part0_ids);
// Rebuild the full graph from a partition (for round-trip checks).
Graph reassemble(const Graph &reference, const AdjacencyPartition &p);

}  // namespace graphemit

#endif
