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

#include "graphemit/schedule.hpp"

#include <json.hpp>

#include "graphemit/errors.hpp"

namespace graphemit {

using ordered_json = nlohmann::ordered_json;

const char *qubit_role_name(QubitRole role) {
    switch (role) {
        case QubitRole::Emitter: return "emitter";
        case QubitRole::Photon: return "photon";
        case QubitRole::Nuclear: return "nuclear";
    }
    return "?";
}

namespace {

QubitRole qubit_role_from_name(const std::string &name) {
    if (name == "emitter") return QubitRole::Emitter;
    if (name == "photon") return QubitRole::Photon;
    if (name == "nuclear") return QubitRole::Nuclear;
    throw DimensionError("unknown qubit role: " + name);
}

}  // namespace

size_t Schedule::measurement_count() const {
    size_t count = 0;
    for (const auto &s : steps) count += s.is_measurement() ? 1 : 0;
    return count;
}

std::vector<uint32_t> Schedule::measurement_steps() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < steps.size(); i++) {
        if (steps[i].is_measurement()) out.push_back(i);
    }
    return out;
}

void Schedule::validate() const {
    size_t allocated = 0;
    std::vector<bool> is_photon;
    std::vector<bool> was_measured_step;  // per step: measurement flag
    auto check_allocated = [&](size_t step, uint32_t q) {
        if (q >= allocated) {
            throw ValidationError(step, "qubit " + std::to_string(q) + " used before allocation");
        }
    };
    auto photon_allowed_local_only = [&](size_t step, uint32_t q, bool two_qubit) {
        if (two_qubit && q < is_photon.size() && is_photon[q]) {
            throw ValidationError(step, "photon " + std::to_string(q) +
                                            " may only receive local operations");
        }
    };
    for (size_t i = 0; i < steps.size(); i++) {
        const GateStep &s = steps[i];
        switch (s.kind) {
            case StepKind::NewQubit:
                if (s.q0 != allocated) {
                    throw ValidationError(i, "allocation ids must be sequential");
                }
                allocated++;
                is_photon.push_back(false);
                break;
            case StepKind::Pump:
                check_allocated(i, s.q0);
                photon_allowed_local_only(i, s.q0, true);
                if (s.q1 != allocated) {
                    throw ValidationError(i, "allocation ids must be sequential");
                }
                allocated++;
                is_photon.push_back(true);
                break;
            case StepKind::CZ:
            case StepKind::CNOT:
                check_allocated(i, s.q0);
                check_allocated(i, s.q1);
                if (s.q0 == s.q1) throw ValidationError(i, "operands must be distinct");
                photon_allowed_local_only(i, s.q0, true);
                photon_allowed_local_only(i, s.q1, true);
                break;
            case StepKind::HPrime:
            case StepKind::RotX:
            case StepKind::RotZ:
            case StepKind::MeasureZ:
            case StepKind::MeasureY:
                check_allocated(i, s.q0);
                if ((s.kind == StepKind::RotX || s.kind == StepKind::RotZ) &&
                    s.quarter_turns != 1 && s.quarter_turns != -1) {
                    throw ValidationError(i, "rotations are restricted to +-pi/2");
                }
                break;
            case StepKind::PauliFix:
                if (s.fix.n > allocated) {
                    throw ValidationError(i, "fix operator larger than allocated register");
                }
                if (s.condition_step) {
                    if (*s.condition_step >= i) {
                        throw ValidationError(i, "fix condition must reference an earlier step");
                    }
                    if (!steps[*s.condition_step].is_measurement()) {
                        throw ValidationError(i, "fix condition must reference a measurement");
                    }
                }
                break;
        }
    }
    if (allocated != roles.size()) {
        throw ValidationError(steps.size(), "allocation count disagrees with role table");
    }
    for (const auto &[step, photon] : photon_births) {
        if (step >= steps.size() || steps[step].kind != StepKind::Pump ||
            steps[step].q1 != photon) {
            throw ValidationError(step, "photon birth record does not match a pump step");
        }
    }
    if (!layer_of_step.empty() && layer_of_step.size() != steps.size()) {
        throw ValidationError(steps.size(), "layer annotation size mismatch");
    }
    (void)was_measured_step;
}

Schedule preparation_circuit(const Graph &g) {
    Schedule s;
    size_t n = g.vertex_count();
    for (size_t q = 0; q < n; q++) {
        s.steps.push_back(GateStep::new_qubit(static_cast<uint32_t>(q), true));
        s.roles.push_back(QubitRole::Photon);
    }
    for (auto [i, j] : g.edges()) {
        s.steps.push_back(GateStep::cz(static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
    }
    return s;
}

namespace {

ordered_json step_to_json(const GateStep &s) {
    ordered_json j;
    j["kind"] = step_kind_name(s.kind);
    switch (s.kind) {
        case StepKind::HPrime:
            j["target"] = s.q0;
            j["theta1"] = s.hprime.theta1;
            j["theta2"] = s.hprime.theta2;
            j["phi"] = s.hprime.phi;
            break;
        case StepKind::RotX:
        case StepKind::RotZ:
            j["target"] = s.q0;
            j["quarter_turns"] = s.quarter_turns;
            break;
        case StepKind::CZ:
            j["a"] = s.q0;
            j["b"] = s.q1;
            break;
        case StepKind::CNOT:
            j["control"] = s.q0;
            j["target"] = s.q1;
            break;
        case StepKind::Pump:
            j["emitter"] = s.q0;
            j["photon"] = s.q1;
            break;
        case StepKind::MeasureZ:
        case StepKind::MeasureY:
            j["target"] = s.q0;
            break;
        case StepKind::NewQubit:
            j["target"] = s.q0;
            j["state"] = s.new_plus ? "plus" : "zero";
            break;
        case StepKind::PauliFix:
            j["pauli"] = s.fix.str();
            if (s.condition_step) j["if_minus_at_step"] = *s.condition_step;
            break;
    }
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

GateStep step_from_json(const ordered_json &j) {
    std::string kind = j.at("kind").get<std::string>();
    GateStep s;
    if (kind == "h_prime") {
        s = GateStep::h_prime(j.at("target").get<uint32_t>(),
                              HPrimeParams{j.at("theta1").get<double>(),
                                           j.at("theta2").get<double>(),
                                           j.at("phi").get<double>()});
    } else if (kind == "rot_x") {
        s = GateStep::rot_x(j.at("target").get<uint32_t>(), j.at("quarter_turns").get<int>());
    } else if (kind == "rot_z") {
        s = GateStep::rot_z(j.at("target").get<uint32_t>(), j.at("quarter_turns").get<int>());
    } else if (kind == "cz") {
        s = GateStep::cz(j.at("a").get<uint32_t>(), j.at("b").get<uint32_t>());
    } else if (kind == "cnot") {
        s = GateStep::cnot(j.at("control").get<uint32_t>(), j.at("target").get<uint32_t>());
    } else if (kind == "pump") {
        s = GateStep::pump(j.at("emitter").get<uint32_t>(), j.at("photon").get<uint32_t>());
    } else if (kind == "measure_z") {
        s = GateStep::measure_z(j.at("target").get<uint32_t>());
    } else if (kind == "measure_y") {
        s = GateStep::measure_y(j.at("target").get<uint32_t>());
    } else if (kind == "new_qubit") {
        s = GateStep::new_qubit(j.at("target").get<uint32_t>(),
                                j.at("state").get<std::string>() == "plus");
    } else if (kind == "pauli_fix") {
        std::optional<uint32_t> cond;
        if (j.contains("if_minus_at_step")) cond = j.at("if_minus_at_step").get<uint32_t>();
        s = GateStep::pauli_fix(PauliString::parse(j.at("pauli").get<std::string>()), cond);
    } else {
        throw DimensionError("unknown step kind: " + kind);
    }
    if (j.contains("note")) s.note = j.at("note").get<std::string>();
    return s;
}

}  // namespace

std::string Schedule::to_json_string() const {
    ordered_json j;
    j["steps"] = ordered_json::array();
    for (const auto &s : steps) j["steps"].push_back(step_to_json(s));
    j["qubits"] = ordered_json::array();
    for (size_t q = 0; q < roles.size(); q++) {
        j["qubits"].push_back({{"id", q}, {"role", qubit_role_name(roles[q])}});
    }
    j["photon_births"] = ordered_json::array();
    for (const auto &[step, photon] : photon_births) {
        j["photon_births"].push_back({{"step", step}, {"photon", photon}});
    }
    j["layers"] = layer_of_step;
    j["g_blocks"] = ordered_json::array();
    for (const auto &b : g_blocks) {
        j["g_blocks"].push_back({{"first_step", b.first_step},
                                 {"last_step", b.last_step},
                                 {"emitter_a", b.emitter_a},
                                 {"emitter_b", b.emitter_b}});
    }
    return j.dump(2) + "\n";
}

Schedule Schedule::from_json_string(const std::string &text) {
    ordered_json j = ordered_json::parse(text);
    Schedule s;
    for (const auto &step : j.at("steps")) s.steps.push_back(step_from_json(step));
    for (const auto &q : j.at("qubits")) {
        if (q.at("id").get<size_t>() != s.roles.size()) {
            throw DimensionError("qubit ids must be dense and ordered");
        }
        s.roles.push_back(qubit_role_from_name(q.at("role").get<std::string>()));
    }
    if (j.contains("photon_births")) {
        for (const auto &b : j.at("photon_births")) {
            s.photon_births.emplace_back(b.at("step").get<uint32_t>(), b.at("photon").get<uint32_t>());
        }
    }
    if (j.contains("layers")) s.layer_of_step = j.at("layers").get<std::vector<uint32_t>>();
    if (j.contains("g_blocks")) {
        for (const auto &b : j.at("g_blocks")) {
            s.g_blocks.push_back({b.at("first_step").get<uint32_t>(), b.at("last_step").get<uint32_t>(),
                                  b.at("emitter_a").get<uint32_t>(), b.at("emitter_b").get<uint32_t>()});
        }
    }
    return s;
}

}  // namespace graphemit
