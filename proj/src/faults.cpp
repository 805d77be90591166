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

#include "graphemit/faults.hpp"

#include <algorithm>
#include <thread>

#include <json.hpp>

#include "graphemit/errors.hpp"

namespace graphemit {

using ordered_json = nlohmann::ordered_json;

namespace {

size_t allocated_after(const Schedule &s, uint32_t step) {
    size_t count = 0;
    for (uint32_t i = 0; i <= step && i < s.steps.size(); i++) {
        if (s.steps[i].allocates()) count++;
    }
    return count;
}

}  // namespace

ErrorTrace propagate_fault(const Schedule &s, const FaultSpec &fault) {
    s.validate();
    for (const auto &step : s.steps) {
        if (!step.clifford_representable()) {
            throw UnsupportedGateError("propagate_fault: schedule must be Clifford-only");
        }
    }
    if (fault.step >= s.steps.size()) throw DimensionError("fault step out of range");
    size_t live = allocated_after(s, fault.step);
    if (fault.qubit >= live) throw DimensionError("fault on unallocated qubit");
    if (fault.pauli != PAULI_X && fault.pauli != PAULI_Y && fault.pauli != PAULI_Z) {
        throw DimensionError("fault Pauli must be X, Y or Z");
    }

    ErrorTrace trace;
    PauliString residual = PauliString::single(live, fault.qubit, fault.pauli);
    std::vector<bool> flipped_of_step(s.steps.size(), false);
    for (uint32_t i = fault.step + 1; i < s.steps.size(); i++) {
        const GateStep &step = s.steps[i];
        switch (step.kind) {
            case StepKind::NewQubit:
                residual = residual.extended(residual.n + 1);
                break;
            case StepKind::Pump:
                residual = residual.extended(residual.n + 1);
                residual = conjugate_pauli(step, residual);
                break;
            case StepKind::MeasureZ:
            case StepKind::MeasureY: {
                // A residual anticommuting with the observable flips the
                // recorded outcome; the operator itself passes through (the
                // faulty run is compared at the flipped outcomes, and the
                // conditional fixes then cancel measured-qubit components).
                uint8_t obs_code = step.kind == StepKind::MeasureY ? PAULI_Y : PAULI_Z;
                PauliString obs = PauliString::single(residual.n, step.q0, obs_code);
                if (!residual.commutes_with(obs)) {
                    flipped_of_step[i] = true;
                    trace.flipped_steps.push_back(i);
                }
                break;
            }
            case StepKind::PauliFix: {
                if (step.condition_step) {
                    // Fix fires in exactly one of (clean, faulty) when the
                    // condition outcome flipped.
                    if (flipped_of_step[*step.condition_step]) {
                        PauliString f = step.fix.extended(residual.n);
                        f.mul(residual);
                        residual = f;
                    }
                } else {
                    residual = conjugate_pauli(step, residual);
                }
                break;
            }
            default:
                residual = conjugate_pauli(step, residual);
                break;
        }
        trace.per_step.push_back(residual);
    }
    trace.final_residual = residual;
    for (size_t q : residual.support()) {
        trace.support.push_back(static_cast<uint32_t>(q));
        if (s.roles[q] == QubitRole::Photon) {
            trace.photon_support.push_back(static_cast<uint32_t>(q));
        }
    }
    return trace;
}

std::string LocalizationReport::to_json_string() const {
    ordered_json j;
    j["faults"] = ordered_json::array();
    for (const auto &e : entries) {
        ordered_json f;
        f["step"] = e.fault.step;
        f["qubit"] = e.fault.qubit;
        f["pauli"] = std::string(1, pauli_letter(e.fault.pauli));
        f["residual"] = e.residual;
        f["photon_support"] = e.photon_support;
        f["coupling_degree"] = e.coupling_degree;
        f["bound"] = e.bound;
        f["verdict"] = e.within_bound ? "within-bound" : "counterexample";
        j["faults"].push_back(f);
    }
    j["max_support_per_emitter"] = ordered_json::array();
    for (const auto &[q, m] : max_support_per_emitter) {
        j["max_support_per_emitter"].push_back({{"emitter", q}, {"max_photon_support", m}});
    }
    j["counterexamples"] = counterexamples;
    return j.dump(2) + "\n";
}

LocalizationReport localization_bound_check(const Schedule &s, size_t threads) {
    s.validate();
    LocalizationReport report;
    std::vector<uint32_t> emitters;
    for (uint32_t q = 0; q < s.qubit_count(); q++) {
        if (s.roles[q] != QubitRole::Photon) emitters.push_back(q);
    }
    // Allocation step of each qubit, to skip faults before a qubit exists.
    std::vector<uint32_t> born_at(s.qubit_count(), 0);
    {
        uint32_t next = 0;
        for (uint32_t i = 0; i < s.steps.size(); i++) {
            if (s.steps[i].allocates()) born_at[next++] = i;
        }
    }
    struct Job {
        FaultSpec fault;
    };
    std::vector<Job> jobs;
    for (uint32_t step = 0; step + 1 < s.steps.size(); step++) {
        for (uint32_t e : emitters) {
            if (born_at[e] > step) continue;
            for (uint8_t p : {PAULI_X, PAULI_Y, PAULI_Z}) {
                jobs.push_back({FaultSpec{step, e, p}});
            }
        }
    }
    std::vector<FaultReportEntry> entries(jobs.size());
    auto worker = [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            const FaultSpec &fault = jobs[k].fault;
            ErrorTrace trace = propagate_fault(s, fault);
            // Light-cone coupling degree: distinct partners of this emitter in
            // entangling blocks that start after the fault.
            std::vector<uint32_t> partners;
            for (const GBlock &blk : s.g_blocks) {
                if (blk.first_step <= fault.step) continue;
                uint32_t other = UINT32_MAX;
                if (blk.emitter_a == fault.qubit) other = blk.emitter_b;
                if (blk.emitter_b == fault.qubit) other = blk.emitter_a;
                if (other != UINT32_MAX &&
                    std::find(partners.begin(), partners.end(), other) == partners.end()) {
                    partners.push_back(other);
                }
            }
            FaultReportEntry entry;
            entry.fault = fault;
            entry.residual = trace.final_residual.str();
            entry.photon_support = trace.photon_support;
            entry.coupling_degree = partners.size();
            entry.bound = partners.size() + 2;
            entry.within_bound = trace.photon_support.size() <= entry.bound;
            entries[k] = std::move(entry);
        }
    };
    if (threads <= 1 || jobs.size() < 2) {
        worker(0, jobs.size());
    } else {
        size_t nthreads = std::min(threads, jobs.size());
        std::vector<std::thread> pool;
        size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
        for (size_t t = 0; t < nthreads; t++) {
            size_t begin = t * chunk;
            size_t end = std::min(jobs.size(), begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto &th : pool) th.join();
    }
    std::vector<size_t> max_support(s.qubit_count(), 0);
    for (const auto &entry : entries) {
        max_support[entry.fault.qubit] =
            std::max(max_support[entry.fault.qubit], entry.photon_support.size());
        if (!entry.within_bound) report.counterexamples++;
    }
    for (uint32_t e : emitters) {
        report.max_support_per_emitter.emplace_back(e, max_support[e]);
    }
    report.entries = std::move(entries);
    return report;
}

}  // namespace graphemit
