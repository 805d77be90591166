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

#ifndef GRAPHEMIT_EQUIVALENCE_H
#define GRAPHEMIT_EQUIVALENCE_H

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphemit/graph.hpp"

namespace graphemit {

// Adjacency bit-matrix packed row-major with fixed vertex order; supports up
// to 16 vertices.
struct OrbitKey {
    std::array<uint64_t, 4> words{};
    bool operator==(const OrbitKey &other) const = default;
    std::string hex() const;
};

struct OrbitKeyHash {
    size_t operator()(const OrbitKey &k) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : k.words) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

OrbitKey orbit_key_of(const Graph &g);

struct OrbitMove {
    enum class Kind : uint8_t { LocalComplement, ControlCZ, ControlSwap };
    Kind kind;
    uint32_t vertex = 0;  // LC target (vertex id)

    std::string str() const;
};

// Two designated control vertices (the emitters of the coarsened relation).
struct ControlManifold {
    uint32_t a;
    uint32_t b;
};

struct MoveLogEntry {
    OrbitKey parent;
    OrbitMove move;
};

struct OrbitSet {
    std::vector<uint32_t> vertex_ids;  // fixed order shared by all keys
    OrbitKey seed;
    std::unordered_map<OrbitKey, MoveLogEntry, OrbitKeyHash> elements;  // seed maps to itself

    bool contains(const OrbitKey &k) const { return elements.count(k) > 0; }
    size_t size() const { return elements.size(); }
    // Moves from the seed to `k` (must be a member).
    std::vector<OrbitMove> path_to(const OrbitKey &k) const;
    // Newline-delimited hex keys, sorted (deterministic dump).
    std::string dump_keys() const;
    std::string move_log_json() const;
};

struct EquivalenceCertificate {
    bool equivalent;
    std::vector<OrbitMove> moves;  // set iff equivalent
    size_t orbit_size;
    OrbitKey absent_key;  // set iff inequivalent

    std::string to_json_string() const;
};

// BFS closure under local complementation at every vertex (labeled graphs).
OrbitSet lc_orbit(const Graph &g, size_t max_vertices = 16, size_t max_keys = 10000000);
// Additionally closed under CZ-edge toggle between the two controls and the
// control label swap; generates all two-qubit Cliffords on the controls
// modulo local Cliffords.
OrbitSet luc_orbit(const Graph &g, const ControlManifold &controls, size_t max_vertices = 16,
                   size_t max_keys = 10000000);

EquivalenceCertificate lc_equivalent(const Graph &g1, const Graph &g2, size_t max_vertices = 16,
                                     size_t max_keys = 10000000);
EquivalenceCertificate luc_equivalent(const Graph &g1, const Graph &g2,
                                      const ControlManifold &controls, size_t max_vertices = 16,
                                      size_t max_keys = 10000000);

// Replay moves from a seed graph (for machine-checking certificates).
Graph replay_moves(const Graph &seed, const std::vector<OrbitMove> &moves,
                   const ControlManifold *controls = nullptr);

}  // namespace graphemit

#endif
