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

#include "graphemit/engines.hpp"

#include <algorithm>
#include <json.hpp>

#include "graphemit/errors.hpp"

namespace graphemit {

using ordered_json = nlohmann::ordered_json;

std::string RunReport::to_json_string() const {
    ordered_json j;
    j["backend"] = backend;
    j["seed"] = seed;
    j["measurements"] = ordered_json::array();
    for (const auto &m : measurements) {
        j["measurements"].push_back({{"step", m.step},
                                     {"qubit", m.qubit},
                                     {"basis", std::string(1, m.basis)},
                                     {"outcome", m.outcome},
                                     {"deterministic", m.deterministic}});
    }
    j["qubit_map"] = qubit_map;
    return j.dump(2) + "\n";
}

std::vector<int> RunReport::outcomes() const {
    std::vector<int> out;
    out.reserve(measurements.size());
    for (const auto &m : measurements) out.push_back(m.outcome);
    return out;
}

namespace {

// Shared driver: walks steps, resolves conditional fixes against recorded
// outcomes, dispatches measurements.
template <typename State, typename ApplyFn, typename MeasureFn>
RunReport run_schedule(const Schedule &s, uint64_t seed, const std::vector<int> *forced,
                       const char *backend, State &state, ApplyFn &&apply, MeasureFn &&measure) {
    s.validate();
    RunReport report;
    report.backend = backend;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::vector<int> outcome_of_step(s.steps.size(), 0);
    size_t measure_index = 0;
    for (size_t i = 0; i < s.steps.size(); i++) {
        const GateStep &step = s.steps[i];
        if (step.is_measurement()) {
            std::optional<int> force;
            if (forced && measure_index < forced->size()) force = (*forced)[measure_index];
            MeasurementOutcome out = measure(state, step, rng, force);
            outcome_of_step[i] = out.value;
            report.measurements.push_back({static_cast<uint32_t>(i), step.q0,
                                           step.kind == StepKind::MeasureY ? 'Y' : 'Z', out.value,
                                           out.deterministic});
            measure_index++;
        } else if (step.kind == StepKind::PauliFix && step.condition_step) {
            if (outcome_of_step[*step.condition_step] == -1) {
                apply(state, GateStep::pauli_fix(step.fix));
            }
        } else {
            apply(state, step);
        }
    }
    report.qubit_map.resize(s.qubit_count());
    for (uint32_t q = 0; q < report.qubit_map.size(); q++) report.qubit_map[q] = q;
    return report;
}

}  // namespace

StabilizerRun run_stabilizer(const Schedule &s, uint64_t seed, const std::vector<int> *forced) {
    for (size_t i = 0; i < s.steps.size(); i++) {
        if (!s.steps[i].clifford_representable()) {
            throw UnsupportedGateError("step " + std::to_string(i) +
                                       ": not Clifford-representable on the stabilizer backend");
        }
    }
    StabilizerRun run;
    run.report = run_schedule(
        s, seed, forced, "stabilizer", run.state,
        [](Tableau &t, const GateStep &g) { t.apply(g); },
        [](Tableau &t, const GateStep &g, std::mt19937_64 &rng, std::optional<int> force) {
            return t.measure(g.q0, g.kind, rng, force);
        });
    return run;
}

DenseRun run_dense(const Schedule &s, uint64_t seed, size_t qubit_cap,
                   const std::vector<int> *forced) {
    DenseRun run;
    run.state = DenseState::vacuum();
    run.report = run_schedule(
        s, seed, forced, "dense", run.state,
        [qubit_cap](DenseState &d, const GateStep &g) { d.apply(g, qubit_cap); },
        [](DenseState &d, const GateStep &g, std::mt19937_64 &rng, std::optional<int> force) {
            return d.measure(g.q0, g.kind, rng, force);
        });
    return run;
}

GraphFrame extract_graph_frame(const Tableau &t) {
    size_t n = t.qubit_count();
    std::vector<PauliString> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; i++) rows.push_back(t.stabilizer(i));
    // Inverse frame gates applied to reach graph form, recorded per qubit.
    std::vector<SingleQubitClifford> applied(n, SingleQubitClifford::identity());
    auto conj_all = [&](size_t q, const SingleQubitClifford &c) {
        for (auto &row : rows) row = conjugate_pauli(c, q, row);
        applied[q] = applied[q].then(c);
    };

    // Stage 1: make the X block invertible, using H on columns without pivots
    // (lowest qubit index first). Row multiplications can re-populate earlier
    // columns of unpivoted rows, so sweep until the rank saturates.
    size_t rank = 0;
    std::vector<bool> is_pivot_col(n, false);
    while (rank < n) {
        size_t rank_before = rank;
        for (size_t q = 0; q < n && rank < n; q++) {
            if (is_pivot_col[q]) continue;
            size_t found = n;
            for (size_t i = rank; i < n; i++) {
                if (rows[i].x_bit(q)) {
                    found = i;
                    break;
                }
            }
            if (found == n) {
                bool any_z = false;
                for (size_t i = rank; i < n && !any_z; i++) any_z = rows[i].z_bit(q);
                if (any_z) {
                    conj_all(q, SingleQubitClifford::hadamard());
                    for (size_t i = rank; i < n; i++) {
                        if (rows[i].x_bit(q)) {
                            found = i;
                            break;
                        }
                    }
                }
            }
            if (found == n) continue;
            std::swap(rows[rank], rows[found]);
            for (size_t i = 0; i < n; i++) {
                if (i != rank && rows[i].x_bit(q)) rows[i].mul(rows[rank]);
            }
            is_pivot_col[q] = true;
            rank++;
        }
        if (rank == rank_before) {
            throw DimensionError("extract_graph_frame: X block rank deficiency");
        }
    }
    // Rows are ordered so row q has X exactly at q. Sort rows by pivot.
    std::vector<PauliString> ordered(n, PauliString::identity(n));
    for (auto &row : rows) {
        size_t pivot = n;
        for (size_t q = 0; q < n; q++) {
            if (row.x_bit(q)) {
                pivot = q;
                break;
            }
        }
        ordered[pivot] = row;
    }
    rows = std::move(ordered);

    // Stage 2: clear the Z diagonal with S^dag (Y at pivot -> X).
    for (size_t q = 0; q < n; q++) {
        if (rows[q].z_bit(q)) conj_all(q, SingleQubitClifford::s_dag());
    }
    // Stage 3: fix signs with Z.
    for (size_t q = 0; q < n; q++) {
        if (rows[q].sign() < 0) conj_all(q, SingleQubitClifford::pauli(PAULI_Z));
    }

    GraphFrame out{Graph::with_photons(n), {}};
    for (size_t q = 0; q < n; q++) {
        if (rows[q].phase != 0 || !rows[q].x_bit(q)) {
            throw DimensionError("extract_graph_frame: reduction failed");
        }
        for (size_t b = 0; b < n; b++) {
            if (b != q && rows[q].z_bit(b)) out.graph.set_edge(q, b, true);
        }
    }
    out.frame.resize(n);
    for (size_t q = 0; q < n; q++) out.frame[q] = applied[q].inverse();
    return out;
}

DenseState tableau_to_dense(const Tableau &t, size_t cap) {
    size_t n = t.qubit_count();
    if (n > cap) throw ResourceError("tableau_to_dense: register exceeds dense cap");
    // Project (I + S_i)/2 onto a basis state with nonzero overlap.
    for (uint64_t start = 0; start < (uint64_t{1} << n); start++) {
        DenseState candidate = DenseState::basis_state(n, start);
        for (size_t i = 0; i < n; i++) {
            DenseState shifted = candidate;
            shifted.apply_pauli(t.stabilizer(i));
            for (size_t k = 0; k < candidate.amps.size(); k++) {
                candidate.amps[k] = 0.5 * (candidate.amps[k] + shifted.amps[k]);
            }
        }
        if (candidate.norm() > 1e-9) {
            candidate.renormalize();
            return candidate;
        }
    }
    throw DimensionError("tableau_to_dense: no overlap found (invalid tableau)");
}

bool verify_graph_state(const Tableau &t, const Graph &g,
                        const std::vector<std::pair<uint32_t, uint32_t>> &keep) {
    size_t n = t.qubit_count();
    std::vector<uint32_t> qubit_of_vertex(g.vertex_count(), UINT32_MAX);
    std::vector<bool> used(n, false);
    for (const auto &[vertex, qubit] : keep) {
        size_t vi = g.require_index(vertex);
        if (qubit >= n) throw DimensionError("verify_graph_state: qubit out of range");
        if (qubit_of_vertex[vi] != UINT32_MAX || used[qubit]) {
            throw DimensionError("verify_graph_state: keep map not injective");
        }
        qubit_of_vertex[vi] = qubit;
        used[qubit] = true;
    }
    for (size_t vi = 0; vi < g.vertex_count(); vi++) {
        if (qubit_of_vertex[vi] == UINT32_MAX) {
            throw DimensionError("verify_graph_state: vertex missing from keep map");
        }
    }
    for (const PauliString &gen : stabilizer_generators(g)) {
        PauliString mapped(n);
        for (size_t vi = 0; vi < g.vertex_count(); vi++) {
            mapped.set_code(qubit_of_vertex[vi], gen.code(vi));
        }
        mapped.phase = gen.phase;
        auto value = t.deterministic_value(mapped);
        if (!value || *value != 1) return false;
    }
    return true;
}

std::vector<std::vector<std::complex<double>>> dense_operator(
    const Schedule &s, const std::vector<uint32_t> &qubits) {
    size_t k = qubits.size();
    // Map schedule qubit -> little-endian bit (first listed = most significant).
    std::vector<uint32_t> bit_of_qubit;
    uint32_t max_q = 0;
    for (uint32_t q : qubits) max_q = std::max(max_q, q);
    bit_of_qubit.assign(max_q + 1, UINT32_MAX);
    for (size_t i = 0; i < k; i++) {
        bit_of_qubit[qubits[i]] = static_cast<uint32_t>(k - 1 - i);
    }
    auto mapped_step = [&](GateStep step) {
        auto map_q = [&](uint32_t q) {
            if (q >= bit_of_qubit.size() || bit_of_qubit[q] == UINT32_MAX) {
                throw DimensionError("dense_operator: schedule touches a qubit outside the list");
            }
            return bit_of_qubit[q];
        };
        switch (step.kind) {
            case StepKind::MeasureZ:
            case StepKind::MeasureY:
            case StepKind::NewQubit:
            case StepKind::Pump:
                throw DimensionError("dense_operator: schedule must be unitary on a fixed register");
            case StepKind::PauliFix: {
                PauliString mapped(k);
                mapped.phase = step.fix.phase;
                for (size_t q = 0; q < step.fix.n; q++) {
                    if (step.fix.code(q) != PAULI_I) {
                        mapped.set_code(map_q(static_cast<uint32_t>(q)), step.fix.code(q));
                    }
                }
                step.fix = mapped;
                return step;
            }
            default:
                step.q0 = map_q(step.q0);
                if (step.kind == StepKind::CZ || step.kind == StepKind::CNOT) {
                    step.q1 = map_q(step.q1);
                }
                return step;
        }
    };
    size_t dim = size_t{1} << k;
    std::vector<std::vector<std::complex<double>>> m(dim, std::vector<std::complex<double>>(dim));
    for (size_t col = 0; col < dim; col++) {
        DenseState st = DenseState::basis_state(k, col);
        for (const GateStep &step : s.steps) {
            st.apply(mapped_step(step), k);
        }
        for (size_t row = 0; row < dim; row++) m[row][col] = st.amps[row];
    }
    return m;
}

}  // namespace graphemit
