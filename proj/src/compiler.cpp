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

#include "graphemit/compiler.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "graphemit/errors.hpp"

namespace graphemit {

using ordered_json = nlohmann::ordered_json;

EmitterLayout EmitterLayout::line(size_t n) {
    EmitterLayout l;
    l.topology = "line";
    l.count = n;
    for (uint32_t i = 0; i + 1 < n; i++) l.couplings.emplace_back(i, i + 1);
    return l;
}

EmitterLayout EmitterLayout::grid(size_t w, size_t h) {
    EmitterLayout l;
    l.topology = "grid";
    l.count = w * h;
    l.grid_w = w;
    l.grid_h = h;
    for (uint32_t y = 0; y < h; y++) {
        for (uint32_t x = 0; x < w; x++) {
            uint32_t v = x + static_cast<uint32_t>(w) * y;
            if (x + 1 < w) l.couplings.emplace_back(v, v + 1);
            if (y + 1 < h) l.couplings.emplace_back(v, v + static_cast<uint32_t>(w));
        }
    }
    return l;
}

EmitterLayout EmitterLayout::make_explicit(size_t n,
                                           std::vector<std::pair<uint32_t, uint32_t>> pairs) {
    EmitterLayout l;
    l.topology = "explicit";
    l.count = n;
    for (auto [a, b] : pairs) {
        if (a == b || a >= n || b >= n) throw LayoutError("bad coupling pair");
        if (a > b) std::swap(a, b);
        l.couplings.emplace_back(a, b);
    }
    std::sort(l.couplings.begin(), l.couplings.end());
    l.couplings.erase(std::unique(l.couplings.begin(), l.couplings.end()), l.couplings.end());
    return l;
}

EmitterLayout EmitterLayout::complete(size_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) pairs.emplace_back(i, j);
    }
    EmitterLayout l = make_explicit(n, pairs);
    l.topology = "complete";
    return l;
}

bool EmitterLayout::coupled(uint32_t a, uint32_t b) const {
    if (a > b) std::swap(a, b);
    return std::find(couplings.begin(), couplings.end(), std::make_pair(a, b)) != couplings.end();
}

std::vector<uint32_t> EmitterLayout::shortest_path(uint32_t a, uint32_t b) const {
    std::vector<std::vector<uint32_t>> adj(count);
    for (auto [x, y] : couplings) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<int32_t> parent(count, -2);
    std::deque<uint32_t> queue{a};
    parent[a] = -1;
    while (!queue.empty()) {
        uint32_t cur = queue.front();
        queue.pop_front();
        if (cur == b) break;
        for (uint32_t nxt : adj[cur]) {
            if (parent[nxt] == -2) {
                parent[nxt] = static_cast<int32_t>(cur);
                queue.push_back(nxt);
            }
        }
    }
    if (parent[b] == -2) return {};
    std::vector<uint32_t> path;
    for (int32_t cur = static_cast<int32_t>(b); cur != -1; cur = parent[cur]) {
        path.push_back(static_cast<uint32_t>(cur));
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::string CompilationReport::to_json_string() const {
    ordered_json j;
    j["emitters_used"] = emitters_used;
    j["g_count"] = g_count;
    j["swap_count"] = swap_count;
    j["entangling_layers"] = entangling_layers;
    j["total_layers"] = total_layers;
    j["active_layer_trace"] = active_layer_trace;
    j["peak_active"] = peak_active;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// ProtocolBuilder

void ProtocolBuilder::push(GateStep step) {
    if (!pending_note_.empty()) {
        step.note = pending_note_;
        pending_note_.clear();
    }
    schedule_.steps.push_back(step);
    schedule_.layer_of_step.push_back(layer_);
    apply_to_sim(schedule_.steps.back());
}

void ProtocolBuilder::apply_to_sim(const GateStep &step) {
    if (step.is_measurement()) return;  // handled by measure_with_fix
    if (step.kind == StepKind::PauliFix && step.condition_step) return;  // clean branch: +1
    sim_.apply(step);
}

uint32_t ProtocolBuilder::add_qubit(QubitRole role, bool plus) {
    uint32_t q = static_cast<uint32_t>(schedule_.qubit_count());
    schedule_.roles.push_back(role);
    adj_.emplace_back();
    for (auto &row : adj_) row.resize(schedule_.qubit_count(), false);
    deferred_z_quarters_.push_back(0);
    push(GateStep::new_qubit(q, plus));
    return q;
}

uint32_t ProtocolBuilder::pump_cycle(uint32_t emitter) {
    if (emitter >= qubit_count() || role(emitter) == QubitRole::Photon) {
        throw DimensionError("pump_cycle: operand is not an emitter-side qubit");
    }
    uint32_t photon = static_cast<uint32_t>(schedule_.qubit_count());
    schedule_.roles.push_back(QubitRole::Photon);
    adj_.emplace_back();
    for (auto &row : adj_) row.resize(schedule_.qubit_count(), false);
    deferred_z_quarters_.push_back(0);
    schedule_.photon_births.emplace_back(static_cast<uint32_t>(schedule_.steps.size()), photon);
    push(GateStep::pump(emitter, photon));
    push(GateStep::h_prime(emitter));
    // Insertion: the photon takes the emitter's neighborhood, the emitter ends
    // pendant on the photon.
    for (uint32_t b = 0; b < photon; b++) {
        if (adj_[emitter][b]) {
            adj_[photon][b] = adj_[b][photon] = true;
            adj_[emitter][b] = adj_[b][emitter] = false;
        }
    }
    adj_[emitter][photon] = adj_[photon][emitter] = true;
    return photon;
}

std::vector<GateStep> g_emitter_steps(uint32_t a, uint32_t b) {
    return {
        GateStep::cz(a, b),
        GateStep::rot_x(a, +1),
        GateStep::rot_z(b, +1),
        GateStep::cz(a, b),
        GateStep::rot_x(b, +1),
        GateStep::cz(a, b),
        GateStep::rot_z(b, +1),
        GateStep::rot_x(a, +1),
        GateStep::cz(a, b),
    };
}

void ProtocolBuilder::apply_g(uint32_t a, uint32_t b) {
    auto pa = attached_photon(a);
    auto pb = attached_photon(b);
    if (!pa || !pb) {
        throw DimensionError("apply_g: both emitters must be pendant on an attached photon");
    }
    uint32_t first = static_cast<uint32_t>(schedule_.steps.size());
    for (GateStep step : g_emitter_steps(a, b)) push(step);
    uint32_t last = static_cast<uint32_t>(schedule_.steps.size()) - 1;
    schedule_.g_blocks.push_back({first, last, a, b});
    defer_photon_rotation(*pa, 3);
    defer_photon_rotation(*pb, 1);
    adj_[*pa][*pb] = adj_[*pb][*pa] = !adj_[*pa][*pb];
    g_count_++;
}

void ProtocolBuilder::swap_emitters(uint32_t a, uint32_t b) {
    if (role(a) == QubitRole::Photon || role(b) == QubitRole::Photon) {
        throw DimensionError("swap_emitters: photons cannot be swapped");
    }
    push(GateStep::cnot(a, b));
    push(GateStep::cnot(b, a));
    push(GateStep::cnot(a, b));
    for (uint32_t q = 0; q < qubit_count(); q++) {
        if (q == a || q == b) continue;
        std::swap(adj_[a][q], adj_[b][q]);
        std::swap(adj_[q][a], adj_[q][b]);
    }
    bool ab = adj_[a][b];
    adj_[a][b] = adj_[b][a] = ab;  // symmetric edge unchanged by relabel
    swap_count_++;
}

void ProtocolBuilder::measure_with_fix(uint32_t q, StepKind basis) {
    PauliString obs = PauliString::single(sim_.qubit_count(), q,
                                          basis == StepKind::MeasureY ? PAULI_Y : PAULI_Z);
    // Conditional fix: the first canonical stabilizer anticommuting with the
    // observable maps the -1 branch onto the +1 branch exactly.
    std::optional<PauliString> fix;
    for (const PauliString &row : sim_.canonical_stabilizers()) {
        if (!row.commutes_with(obs)) {
            fix = row;
            break;
        }
    }
    uint32_t step_index = static_cast<uint32_t>(schedule_.steps.size());
    push(basis == StepKind::MeasureY ? GateStep::measure_y(q) : GateStep::measure_z(q));
    MeasurementOutcome out = sim_.measure(q, basis, rng_, fix ? std::optional<int>(1) : std::nullopt);
    if (!fix && out.value != 1) {
        throw DimensionError("measure_with_fix: deterministic -1 outcome in a compiled macro");
    }
    if (fix) {
        push(GateStep::pauli_fix(*fix, step_index));
    }
}

void ProtocolBuilder::measure_detach(uint32_t q) {
    if (q >= qubit_count()) throw DimensionError("measure_detach: qubit out of range");
    measure_with_fix(q, StepKind::MeasureZ);
    for (uint32_t b = 0; b < qubit_count(); b++) {
        adj_[q][b] = adj_[b][q] = false;
    }
}

void ProtocolBuilder::measure_y_graph(uint32_t q) {
    if (q >= qubit_count()) throw DimensionError("measure_y_graph: qubit out of range");
    std::vector<uint32_t> nbrs = graph_neighbors(q);
    measure_with_fix(q, StepKind::MeasureY);
    // +1 branch leaves S on every neighbor; undo it.
    for (uint32_t b : nbrs) {
        push(GateStep::rot_z(b, -1));
    }
    // Tracked graph: local complementation at q, then delete q.
    for (size_t i = 0; i < nbrs.size(); i++) {
        for (size_t j = i + 1; j < nbrs.size(); j++) {
            adj_[nbrs[i]][nbrs[j]] = adj_[nbrs[j]][nbrs[i]] = !adj_[nbrs[i]][nbrs[j]];
        }
    }
    for (uint32_t b = 0; b < qubit_count(); b++) {
        adj_[q][b] = adj_[b][q] = false;
    }
}

void ProtocolBuilder::reinit(uint32_t emitter) {
    if (role(emitter) == QubitRole::Photon) throw DimensionError("reinit: photons are not reusable");
    if (!isolated(emitter)) throw DimensionError("reinit: emitter still attached");
    push(GateStep::h_prime(emitter));
}

void ProtocolBuilder::local_complement_steps(uint32_t v) {
    if (role(v) == QubitRole::Photon) flush_photon_fix(v);
    std::vector<uint32_t> nbrs = graph_neighbors(v);
    push(GateStep::rot_x(v, +1));
    for (uint32_t b : nbrs) push(GateStep::rot_z(b, -1));
    for (size_t i = 0; i < nbrs.size(); i++) {
        for (size_t j = i + 1; j < nbrs.size(); j++) {
            adj_[nbrs[i]][nbrs[j]] = adj_[nbrs[j]][nbrs[i]] = !adj_[nbrs[i]][nbrs[j]];
        }
    }
}

std::optional<uint32_t> ProtocolBuilder::attached_photon(uint32_t emitter) const {
    std::optional<uint32_t> out;
    for (uint32_t b = 0; b < qubit_count(); b++) {
        if (adj_[emitter][b]) {
            if (out) return std::nullopt;  // not pendant
            out = b;
        }
    }
    if (out && role(*out) != QubitRole::Photon) return std::nullopt;
    return out;
}

bool ProtocolBuilder::edge(uint32_t a, uint32_t b) const {
    return adj_[a][b];
}

std::vector<uint32_t> ProtocolBuilder::graph_neighbors(uint32_t q) const {
    std::vector<uint32_t> out;
    for (uint32_t b = 0; b < qubit_count(); b++) {
        if (adj_[q][b]) out.push_back(b);
    }
    return out;
}

bool ProtocolBuilder::isolated(uint32_t q) const {
    return graph_neighbors(q).empty();
}

void ProtocolBuilder::defer_photon_rotation(uint32_t photon, int z_quarters) {
    deferred_z_quarters_[photon] = (deferred_z_quarters_[photon] + z_quarters) % 4;
}

void ProtocolBuilder::flush_photon_fix(uint32_t photon) {
    int q = deferred_z_quarters_[photon];
    if (q == 0) return;
    deferred_z_quarters_[photon] = 0;
    // Accumulated exp(-i q pi Z/4): q=1 -> one +quarter, q=3 -> one -quarter,
    // q=2 -> Pauli Z.
    note_next("photon-frame-fix");
    if (q == 1) {
        push(GateStep::rot_z(photon, +1));
    } else if (q == 3) {
        push(GateStep::rot_z(photon, -1));
    } else {
        push(GateStep::pauli_fix(PauliString::single(qubit_count(), photon, PAULI_Z)));
    }
}

void ProtocolBuilder::flush_photon_fixes() {
    for (uint32_t q = 0; q < qubit_count(); q++) flush_photon_fix(q);
}

void ProtocolBuilder::nv_pump(uint32_t spin, uint32_t center) {
    if (role(spin) != QubitRole::Nuclear) throw DimensionError("nv_pump: spin must be nuclear");
    if (role(center) != QubitRole::Emitter) throw DimensionError("nv_pump: center must be an emitter");
    if (!isolated(center)) throw DimensionError("nv_pump: center must start detached");
    push(GateStep::cz(spin, center));
    adj_[spin][center] = adj_[center][spin] = true;
    uint32_t ph1 = pump_cycle(center);
    uint32_t ph2 = pump_cycle(center);
    measure_detach(ph2);
    local_complement_steps(spin);
    local_complement_steps(ph1);
}

void ProtocolBuilder::nv_g(uint32_t s1, uint32_t s2, uint32_t c1, uint32_t c2) {
    if (role(s1) != QubitRole::Nuclear || role(s2) != QubitRole::Nuclear) {
        throw DimensionError("nv_g: spins must be nuclear");
    }
    if (role(c1) != QubitRole::Emitter || role(c2) != QubitRole::Emitter) {
        throw DimensionError("nv_g: centers must be emitters");
    }
    if (!isolated(c1) || !isolated(c2)) throw DimensionError("nv_g: centers must start detached");
    auto p1 = attached_photon(s1);
    auto p2 = attached_photon(s2);
    if (!p1 || !p2) throw DimensionError("nv_g: each spin must be pendant on its photon");
    // One heralded bond realizes exactly one entangling primitive; the photons
    // must not carry entanglement outside the quartet.
    for (uint32_t b : graph_neighbors(*p1)) {
        if (b != s1 && b != *p2) throw DimensionError("nv_g: photon entangled outside the quartet");
    }
    for (uint32_t b : graph_neighbors(*p2)) {
        if (b != s2 && b != *p1) throw DimensionError("nv_g: photon entangled outside the quartet");
    }
    flush_photon_fix(*p1);
    flush_photon_fix(*p2);
    bool target_edge = !adj_[*p1][*p2];

    note_next("heralded-bond (retry point)");
    push(GateStep::cz(c1, c2));
    adj_[c1][c2] = adj_[c2][c1] = true;
    push(GateStep::cz(c1, s1));
    adj_[c1][s1] = adj_[s1][c1] = true;
    push(GateStep::cz(c2, s2));
    adj_[c2][s2] = adj_[s2][c2] = true;
    uint32_t a1 = pump_cycle(c1);
    uint32_t a2 = pump_cycle(c2);
    uint32_t b1 = pump_cycle(c1);
    uint32_t b2 = pump_cycle(c2);
    measure_detach(b1);
    measure_detach(b2);
    measure_y_graph(a1);
    measure_y_graph(a2);

    // Route the quartet to the target by local complementations (BFS over the
    // 4-vertex subgraph; every quartet vertex is ambient-free here).
    std::array<uint32_t, 4> quartet = {s1, s2, *p1, *p2};
    auto quartet_key = [&]() {
        uint8_t key = 0;
        int bit = 0;
        for (size_t i = 0; i < 4; i++) {
            for (size_t j = i + 1; j < 4; j++, bit++) {
                if (adj_[quartet[i]][quartet[j]]) key |= uint8_t{1} << bit;
            }
        }
        return key;
    };
    uint8_t start = quartet_key();
    uint8_t target = 0;
    {
        auto set_bit = [&](size_t i, size_t j) {
            int bit = 0;
            for (size_t a = 0; a < 4; a++) {
                for (size_t b = a + 1; b < 4; b++, bit++) {
                    if ((a == i && b == j) || (a == j && b == i)) target |= uint8_t{1} << bit;
                }
            }
        };
        set_bit(0, 2);  // s1 - p1
        set_bit(1, 3);  // s2 - p2
        if (target_edge) set_bit(2, 3);  // p1 - p2
    }
    // BFS over 6-bit graphs with LC moves at the four quartet positions.
    std::array<int16_t, 64> parent_move;
    parent_move.fill(-1);
    std::array<int16_t, 64> parent_key;
    parent_key.fill(-1);
    auto lc_on_key = [&](uint8_t key, size_t v) {
        auto bit_index = [](size_t a, size_t b) {
            if (a > b) std::swap(a, b);
            int bit = 0;
            for (size_t i = 0; i < 4; i++) {
                for (size_t j = i + 1; j < 4; j++, bit++) {
                    if (i == a && j == b) return bit;
                }
            }
            return -1;
        };
        std::vector<size_t> nbrs;
        for (size_t u = 0; u < 4; u++) {
            if (u != v && (key >> bit_index(u, v)) & 1) nbrs.push_back(u);
        }
        for (size_t i = 0; i < nbrs.size(); i++) {
            for (size_t j = i + 1; j < nbrs.size(); j++) {
                key = static_cast<uint8_t>(key ^ (uint8_t{1} << bit_index(nbrs[i], nbrs[j])));
            }
        }
        return key;
    };
    std::deque<uint8_t> queue{start};
    parent_key[start] = start;
    while (!queue.empty() && parent_key[target] == -1) {
        uint8_t cur = queue.front();
        queue.pop_front();
        for (size_t v = 0; v < 4; v++) {
            uint8_t nxt = lc_on_key(cur, v);
            if (parent_key[nxt] == -1) {
                parent_key[nxt] = cur;
                parent_move[nxt] = static_cast<int16_t>(v);
                queue.push_back(nxt);
            }
        }
    }
    if (parent_key[target] == -1) {
        throw DimensionError("nv_g: no local route to the entangled target");
    }
    std::vector<size_t> moves;
    for (uint8_t cur = target; cur != start; cur = static_cast<uint8_t>(parent_key[cur])) {
        moves.push_back(static_cast<size_t>(parent_move[cur]));
    }
    std::reverse(moves.begin(), moves.end());
    for (size_t v : moves) local_complement_steps(quartet[v]);
}

Schedule ProtocolBuilder::finish() {
    flush_photon_fixes();
    return schedule_;
}

// ---------------------------------------------------------------------------
// Compilers

GateStep compile_hprime(uint32_t emitter, const HPrimeParams &params) {
    return GateStep::h_prime(emitter, params);
}

CompilationResult compile_lr_chain(size_t n_photons) {
    if (n_photons < 1) throw DimensionError("compile_lr_chain: need at least one photon");
    ProtocolBuilder b;
    uint32_t e = b.add_qubit(QubitRole::Emitter, true);
    CompilationResult result;
    for (size_t i = 0; i < n_photons; i++) {
        b.new_layer();
        uint32_t p = b.pump_cycle(e);
        result.photon_of_vertex.emplace_back(static_cast<uint32_t>(i), p);
        result.report.active_layer_trace.push_back(1);
    }
    b.new_layer();
    b.measure_detach(e);
    result.schedule = b.finish();
    result.report.emitters_used = 1;
    result.report.g_count = 0;
    result.report.entangling_layers = 0;
    result.report.total_layers = b.layer() + 1;
    result.report.peak_active = 1;
    return result;
}

CompilationResult compile_parallel_cluster(const ClusterDims &dims, const EmitterLayout &layout) {
    if (dims.extents.size() != dims.d || dims.d < 2) {
        throw DimensionError("compile_parallel_cluster: extents must match dimension");
    }
    for (size_t e : dims.extents) {
        if (e < 1) throw DimensionError("compile_parallel_cluster: extents must be >= 1");
    }
    size_t sheet_w = dims.extents[0];
    size_t sheet_h = dims.d == 3 ? dims.extents[1] : 1;
    size_t length = dims.extents[dims.d == 3 ? 2 : 1];
    size_t sheet_size = sheet_w * sheet_h;
    if (dims.d > 3) throw DimensionError("compile_parallel_cluster: d <= 3 supported");
    if (layout.count < sheet_size) {
        throw LayoutError("layout provides " + std::to_string(layout.count) + " emitters, need " +
                          std::to_string(sheet_size));
    }
    auto eid = [&](size_t x, size_t y) { return static_cast<uint32_t>(x + sheet_w * y); };
    // Required nearest-neighbor couplings.
    for (size_t y = 0; y < sheet_h; y++) {
        for (size_t x = 0; x < sheet_w; x++) {
            if (x + 1 < sheet_w && !layout.coupled(eid(x, y), eid(x + 1, y))) {
                throw LayoutError("missing coupling in sheet row");
            }
            if (y + 1 < sheet_h && !layout.coupled(eid(x, y), eid(x, y + 1))) {
                throw LayoutError("missing coupling in sheet column");
            }
        }
    }

    ProtocolBuilder b;
    std::vector<uint32_t> emitters;
    for (size_t i = 0; i < sheet_size; i++) emitters.push_back(b.add_qubit(QubitRole::Emitter, true));
    CompilationResult result;
    std::vector<uint32_t> photon_at(sheet_size);

    auto g_phase = [&](size_t direction, size_t parity) {
        // direction 0: x pairs, direction 1: y pairs; parity 0 = odd pairs
        // (first, third, ...), parity 1 = even pairs.
        bool any = false;
        for (size_t y = 0; y < sheet_h; y++) {
            for (size_t x = 0; x < sheet_w; x++) {
                if (direction == 0) {
                    if (x + 1 >= sheet_w || (x & 1) != parity) continue;
                    any = true;
                    b.apply_g(emitters[eid(x, y)], emitters[eid(x + 1, y)]);
                } else {
                    if (y + 1 >= sheet_h || (y & 1) != parity) continue;
                    any = true;
                    b.apply_g(emitters[eid(x, y)], emitters[eid(x, y + 1)]);
                }
            }
        }
        return any;
    };

    for (size_t column = 0; column < length; column++) {
        b.new_layer();
        for (size_t i = 0; i < sheet_size; i++) {
            photon_at[i] = b.pump_cycle(emitters[i]);
            uint32_t vertex = static_cast<uint32_t>(i + sheet_size * column);
            result.photon_of_vertex.emplace_back(vertex, photon_at[i]);
        }
        result.report.active_layer_trace.push_back(sheet_size);
        size_t directions = dims.d - 1;
        for (size_t dir = 0; dir < directions; dir++) {
            for (size_t parity = 0; parity < 2; parity++) {
                b.new_layer();
                if (g_phase(dir, parity)) result.report.entangling_layers++;
            }
        }
    }
    b.new_layer();
    for (uint32_t e : emitters) b.measure_detach(e);
    result.schedule = b.finish();
    result.report.emitters_used = sheet_size;
    result.report.g_count = b.g_count();
    result.report.total_layers = b.layer() + 1;
    result.report.peak_active = sheet_size;
    return result;
}

namespace {

std::vector<uint32_t> greedy_ordering(const Graph &target) {
    size_t n = target.vertex_count();
    std::vector<bool> chosen(n, false);
    std::vector<uint32_t> order;
    for (size_t step = 0; step < n; step++) {
        size_t best = n;
        long best_completed = -1;
        long best_new_pending = 0;
        for (size_t v = 0; v < n; v++) {
            if (chosen[v]) continue;
            long completed = 0, fresh = 0;
            for (size_t u : target.neighbors(v)) {
                if (chosen[u]) completed++; else fresh++;
            }
            if (best == n || completed > best_completed ||
                (completed == best_completed && fresh < best_new_pending)) {
                best = v;
                best_completed = completed;
                best_new_pending = fresh;
            }
        }
        chosen[best] = true;
        order.push_back(target.ids()[best]);
    }
    return order;
}

}  // namespace

CompilationResult compile_general_graph(const Graph &target, const EmitterLayout &layout,
                                        const std::vector<uint32_t> *ordering) {
    size_t n = target.vertex_count();
    for (size_t i = 0; i < n; i++) {
        if (target.role(i) != VertexRole::Photon) {
            throw DimensionError("compile_general_graph: target vertices must be photons");
        }
    }
    std::vector<uint32_t> order;
    if (ordering) {
        order = *ordering;
        std::vector<uint32_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<uint32_t> expect = target.ids();
        std::sort(expect.begin(), expect.end());
        if (sorted != expect) {
            throw DimensionError("compile_general_graph: ordering must be a permutation of vertices");
        }
    } else {
        order = greedy_ordering(target);
    }
    if (layout.count == 0) throw LayoutError("layout has no emitters");

    ProtocolBuilder b;
    std::vector<uint32_t> emitters;
    for (size_t i = 0; i < layout.count; i++) emitters.push_back(b.add_qubit(QubitRole::Emitter, true));

    CompilationResult result;
    // Compiler-side state, by vertex index of `target`.
    std::vector<bool> emitted(n, false);
    std::vector<uint32_t> photon_of(n, 0);
    std::vector<size_t> emitter_of(n, SIZE_MAX);  // layout position
    std::vector<size_t> pending(n, 0);
    for (size_t v = 0; v < n; v++) pending[v] = target.degree(v);
    // Per layout position: which vertex occupies it (SIZE_MAX = none), whether
    // the emitter has been measured (needs H before reuse), whether ever used.
    std::vector<size_t> occupant(layout.count, SIZE_MAX);
    std::vector<bool> needs_reinit(layout.count, false);
    std::vector<bool> ever_pumped(layout.count, false);

    auto route_distance = [&](uint32_t from, uint32_t to) -> long {
        auto path = layout.shortest_path(from, to);
        return path.empty() ? -1 : static_cast<long>(path.size()) - 1;
    };

    for (uint32_t vid : order) {
        size_t v = target.require_index(vid);
        b.new_layer();
        std::vector<size_t> past;
        for (size_t u : target.neighbors(v)) {
            if (emitted[u]) past.push_back(u);
        }
        // A past partner must still be attached; otherwise its edge to v could
        // never be built (ordering bug, not a layout property).
        for (size_t u : past) {
            if (emitter_of[u] == SIZE_MAX) {
                throw CapacityError(b.layer(), "photon " + std::to_string(target.ids()[u]) +
                                                   " was detached before its edges completed");
            }
        }
        // Option A: chain from a done-except-this-edge partner.
        size_t chain_from = SIZE_MAX;
        for (size_t u : past) {
            if (pending[u] == 1 && (chain_from == SIZE_MAX || emitter_of[u] < emitter_of[chain_from])) {
                chain_from = u;
            }
        }
        size_t home;
        if (chain_from != SIZE_MAX) {
            home = emitter_of[chain_from];
        } else {
            // Option B/C: a free or retirable emitter, nearest to the partners.
            long best_cost = 0;
            size_t best = SIZE_MAX;
            bool best_retire = false;
            for (size_t e = 0; e < layout.count; e++) {
                bool retire = false;
                if (occupant[e] != SIZE_MAX) {
                    if (pending[occupant[e]] != 0) continue;
                    retire = true;
                }
                long cost = 0;
                bool reachable = true;
                for (size_t u : past) {
                    long d = route_distance(static_cast<uint32_t>(e),
                                            static_cast<uint32_t>(emitter_of[u]));
                    if (d < 0) {
                        reachable = false;
                        break;
                    }
                    cost += d;
                }
                if (!reachable) continue;
                if (best == SIZE_MAX || cost < best_cost ||
                    (cost == best_cost && retire < best_retire)) {
                    best = e;
                    best_cost = cost;
                    best_retire = retire;
                }
            }
            if (best == SIZE_MAX) {
                bool any_free = false;
                for (size_t e = 0; e < layout.count; e++) {
                    if (occupant[e] == SIZE_MAX || pending[occupant[e]] == 0) any_free = true;
                }
                if (!any_free) {
                    throw CapacityError(result.schedule.steps.size(),
                                        "active layer exceeds the emitter count at photon " +
                                            std::to_string(vid));
                }
                throw LayoutError("no emitter can reach the partners of photon " +
                                  std::to_string(vid));
            }
            home = best;
            if (occupant[home] != SIZE_MAX) {
                size_t u = occupant[home];
                b.measure_detach(emitters[home]);
                emitter_of[u] = SIZE_MAX;
                occupant[home] = SIZE_MAX;
                needs_reinit[home] = true;
            }
            if (needs_reinit[home]) {
                b.reinit(emitters[home]);
                needs_reinit[home] = false;
            }
        }
        // Emit the photon.
        uint32_t p = b.pump_cycle(emitters[home]);
        ever_pumped[home] = true;
        emitted[v] = true;
        photon_of[v] = p;
        if (chain_from != SIZE_MAX) {
            size_t u = chain_from;
            pending[u]--;
            pending[v]--;
            emitter_of[u] = SIZE_MAX;
            occupant[home] = SIZE_MAX;  // chained photon replaces it below
        }
        emitter_of[v] = home;
        occupant[home] = v;
        result.photon_of_vertex.emplace_back(vid, p);
        // Remaining past edges via the entangling macro, routing when needed.
        for (size_t u : past) {
            if (chain_from != SIZE_MAX && u == chain_from) continue;
            size_t eu = emitter_of[u];
            size_t ev = emitter_of[v];
            if (layout.coupled(static_cast<uint32_t>(ev), static_cast<uint32_t>(eu))) {
                b.apply_g(emitters[ev], emitters[eu]);
            } else {
                auto path = layout.shortest_path(static_cast<uint32_t>(ev),
                                                 static_cast<uint32_t>(eu));
                if (path.size() < 2) {
                    throw LayoutError("emitters " + std::to_string(ev) + " and " +
                                      std::to_string(eu) + " are not connected in the layout");
                }
                // Walk v's emitter state next to u's, entangle, walk back.
                for (size_t i = 0; i + 2 < path.size(); i++) {
                    b.swap_emitters(emitters[path[i]], emitters[path[i + 1]]);
                }
                b.apply_g(emitters[path[path.size() - 2]], emitters[path.back()]);
                for (size_t i = path.size() - 2; i-- > 0;) {
                    b.swap_emitters(emitters[path[i]], emitters[path[i + 1]]);
                }
            }
            pending[u]--;
            pending[v]--;
        }
        size_t active = 0;
        for (size_t w = 0; w < n; w++) {
            if (emitted[w] && emitter_of[w] != SIZE_MAX && pending[w] > 0) active++;
        }
        result.report.active_layer_trace.push_back(active);
    }
    b.new_layer();
    for (size_t e = 0; e < layout.count; e++) {
        if (occupant[e] != SIZE_MAX) {
            b.measure_detach(emitters[e]);
            emitter_of[occupant[e]] = SIZE_MAX;
            occupant[e] = SIZE_MAX;
        }
    }
    result.schedule = b.finish();
    result.report.emitters_used = static_cast<size_t>(
        std::count(ever_pumped.begin(), ever_pumped.end(), true));
    result.report.g_count = b.g_count();
    result.report.swap_count = b.swap_count();
    result.report.entangling_layers = b.g_count();
    result.report.total_layers = b.layer() + 1;
    result.report.peak_active = 0;
    for (size_t a : result.report.active_layer_trace) {
        result.report.peak_active = std::max(result.report.peak_active, a);
    }
    return result;
}

}  // namespace graphemit
