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

#ifndef GRAPHEMIT_ERRORS_H
#define GRAPHEMIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace graphemit {

// Mismatched register sizes, unknown vertices, bad operands.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string &msg) : std::runtime_error(msg) {}
};

// Gate not representable on the requested backend (e.g. non-Clifford H' on the tableau).
struct UnsupportedGateError : std::runtime_error {
    explicit UnsupportedGateError(const std::string &msg) : std::runtime_error(msg) {}
};

// Schedule fails structural validation; carries the offending step index.
struct ValidationError : std::runtime_error {
    ValidationError(size_t step, const std::string &msg)
        : std::runtime_error("step " + std::to_string(step) + ": " + msg), step_index(step) {}
    size_t step_index;
};

// Configured caps exceeded (dense qubit cap, orbit key cap).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

// Emitter layout cannot support the requested operation.
struct LayoutError : std::runtime_error {
    explicit LayoutError(const std::string &msg) : std::runtime_error(msg) {}
};

// Active layer outgrew the available emitters; names the violating step.
struct CapacityError : std::runtime_error {
    CapacityError(size_t step, const std::string &msg)
        : std::runtime_error("step " + std::to_string(step) + ": " + msg), step_index(step) {}
    size_t step_index;
};

// A forced measurement outcome contradicts the state.
struct ForcedOutcomeError : std::runtime_error {
    explicit ForcedOutcomeError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace graphemit

#endif
