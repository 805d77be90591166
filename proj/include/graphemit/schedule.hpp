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

#ifndef GRAPHEMIT_SCHEDULE_H
#define GRAPHEMIT_SCHEDULE_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphemit/gates.hpp"
#include "graphemit/graph.hpp"

namespace graphemit {

enum class QubitRole : uint8_t { Emitter, Photon, Nuclear };

const char *qubit_role_name(QubitRole role);

// Span of steps realizing one two-emitter entangling macro; kept as metadata
// for fault localization.
struct GBlock {
    uint32_t first_step;
    uint32_t last_step;
    uint32_t emitter_a;
    uint32_t emitter_b;
};

// Ordered sequence of physical primitives plus allocation records. Qubit ids
// are assigned densely in allocation order.
struct Schedule {
    std::vector<GateStep> steps;
    std::vector<QubitRole> roles;                            // per qubit id
    std::vector<std::pair<uint32_t, uint32_t>> photon_births;  // (step, photon)
    std::vector<uint32_t> layer_of_step;                     // parallel layer annotation
    std::vector<GBlock> g_blocks;

    size_t qubit_count() const { return roles.size(); }
    size_t measurement_count() const;
    // Indices of measurement steps, in order.
    std::vector<uint32_t> measurement_steps() const;

    // Structural validation: operands allocated, allocation ids sequential,
    // photons receive local operations only, fix conditions reference earlier
    // measurement steps. Throws ValidationError.
    void validate() const;

    std::string to_json_string() const;
    static Schedule from_json_string(const std::string &text);
};

// NewQubit(|+>) per vertex then one CZ per edge (a<b order). Qubit q = vertex
// order position.
Schedule preparation_circuit(const Graph &g);

}  // namespace graphemit

#endif
