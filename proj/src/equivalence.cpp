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

#include "graphemit/equivalence.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "graphemit/errors.hpp"

namespace graphemit {

using ordered_json = nlohmann::ordered_json;

std::string OrbitKey::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (uint64_t w : words) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            out += digits[(w >> shift) & 0xf];
        }
    }
    return out;
}

OrbitKey orbit_key_of(const Graph &g) {
    size_t n = g.vertex_count();
    if (n > 16) throw ResourceError("orbit keys support at most 16 vertices");
    OrbitKey key;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (g.has_edge(i, j)) {
                size_t bit = i * n + j;
                key.words[bit >> 6] |= uint64_t{1} << (bit & 63);
            }
        }
    }
    return key;
}

std::string OrbitMove::str() const {
    switch (kind) {
        case Kind::LocalComplement: return "lc(" + std::to_string(vertex) + ")";
        case Kind::ControlCZ: return "control_cz";
        case Kind::ControlSwap: return "control_swap";
    }
    return "?";
}

namespace {

// Internal dense representation for the BFS: n<=16, adjacency as rows of
// 16-bit masks.
struct SmallGraph {
    size_t n;
    std::array<uint16_t, 16> rows{};

    OrbitKey key() const {
        OrbitKey k;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                if ((rows[i] >> j) & 1) {
                    size_t bit = i * n + j;
                    k.words[bit >> 6] |= uint64_t{1} << (bit & 63);
                }
            }
        }
        return k;
    }

    void local_complement(size_t v) {
        uint16_t nbrs = rows[v];
        for (size_t i = 0; i < n; i++) {
            if ((nbrs >> i) & 1) {
                rows[i] ^= nbrs;
                rows[i] &= static_cast<uint16_t>(~(uint16_t{1} << i));  // no self loops
            }
        }
    }

    void toggle(size_t a, size_t b) {
        rows[a] ^= static_cast<uint16_t>(uint16_t{1} << b);
        rows[b] ^= static_cast<uint16_t>(uint16_t{1} << a);
    }

    void swap_labels(size_t a, size_t b) {
        for (size_t i = 0; i < n; i++) {
            bool bit_a = (rows[i] >> a) & 1;
            bool bit_b = (rows[i] >> b) & 1;
            if (bit_a != bit_b) {
                rows[i] ^= static_cast<uint16_t>((uint16_t{1} << a) | (uint16_t{1} << b));
            }
        }
        std::swap(rows[a], rows[b]);
    }
};

SmallGraph small_of(const Graph &g) {
    SmallGraph s{g.vertex_count(), {}};
    for (auto [i, j] : g.edges()) {
        s.rows[i] |= static_cast<uint16_t>(uint16_t{1} << j);
        s.rows[j] |= static_cast<uint16_t>(uint16_t{1} << i);
    }
    return s;
}

OrbitSet orbit_bfs(const Graph &g, const ControlManifold *controls, size_t max_vertices,
                   size_t max_keys) {
    size_t n = g.vertex_count();
    if (n > max_vertices) {
        throw ResourceError("orbit search capped at " + std::to_string(max_vertices) + " vertices");
    }
    size_t ci = 0, cj = 0;
    if (controls) {
        ci = g.require_index(controls->a);
        cj = g.require_index(controls->b);
        if (ci == cj) throw DimensionError("control manifold must be two distinct vertices");
    }
    OrbitSet orbit;
    orbit.vertex_ids = g.ids();
    SmallGraph seed = small_of(g);
    orbit.seed = seed.key();
    orbit.elements.emplace(orbit.seed,
                           MoveLogEntry{orbit.seed, {OrbitMove::Kind::LocalComplement, 0}});
    std::deque<SmallGraph> frontier{seed};
    auto visit = [&](const SmallGraph &next, const OrbitKey &parent, OrbitMove move) {
        OrbitKey k = next.key();
        if (orbit.elements.emplace(k, MoveLogEntry{parent, move}).second) {
            if (orbit.elements.size() > max_keys) {
                throw ResourceError("orbit exceeded the key cap (" + std::to_string(max_keys) + ")");
            }
            frontier.push_back(next);
        }
    };
    while (!frontier.empty()) {
        SmallGraph cur = frontier.front();
        frontier.pop_front();
        OrbitKey parent = cur.key();
        for (size_t v = 0; v < n; v++) {
            SmallGraph next = cur;
            next.local_complement(v);
            visit(next, parent,
                  {OrbitMove::Kind::LocalComplement, g.ids()[v]});
        }
        if (controls) {
            {
                SmallGraph next = cur;
                next.toggle(ci, cj);
                visit(next, parent, {OrbitMove::Kind::ControlCZ, 0});
            }
            {
                SmallGraph next = cur;
                next.swap_labels(ci, cj);
                visit(next, parent, {OrbitMove::Kind::ControlSwap, 0});
            }
        }
    }
    return orbit;
}

}  // namespace

std::vector<OrbitMove> OrbitSet::path_to(const OrbitKey &k) const {
    if (!contains(k)) throw DimensionError("path_to: key not in orbit");
    std::vector<OrbitMove> moves;
    OrbitKey cur = k;
    while (!(cur == seed)) {
        const MoveLogEntry &entry = elements.at(cur);
        moves.push_back(entry.move);
        cur = entry.parent;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
}

std::string OrbitSet::dump_keys() const {
    std::vector<std::string> lines;
    lines.reserve(elements.size());
    for (const auto &[k, entry] : elements) lines.push_back(k.hex());
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto &line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string OrbitSet::move_log_json() const {
    std::vector<std::pair<std::string, const MoveLogEntry *>> rows;
    rows.reserve(elements.size());
    for (const auto &[k, entry] : elements) rows.emplace_back(k.hex(), &entry);
    std::sort(rows.begin(), rows.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    ordered_json j;
    j["seed"] = seed.hex();
    j["vertices"] = vertex_ids;
    j["elements"] = ordered_json::array();
    for (const auto &[hex, entry] : rows) {
        ordered_json e;
        e["key"] = hex;
        e["parent"] = entry->parent.hex();
        e["move"] = entry->move.str();
        j["elements"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string EquivalenceCertificate::to_json_string() const {
    ordered_json j;
    j["verdict"] = equivalent ? "equivalent" : "inequivalent";
    j["clifford_restricted"] = true;
    if (equivalent) {
        j["moves"] = ordered_json::array();
        for (const auto &m : moves) {
            ordered_json e;
            e["kind"] = m.kind == OrbitMove::Kind::LocalComplement ? "lc"
                        : m.kind == OrbitMove::Kind::ControlCZ    ? "control_cz"
                                                                  : "control_swap";
            if (m.kind == OrbitMove::Kind::LocalComplement) e["vertex"] = m.vertex;
            j["moves"].push_back(e);
        }
    } else {
        j["orbit_size"] = orbit_size;
        j["absent_key"] = absent_key.hex();
    }
    return j.dump(2) + "\n";
}

OrbitSet lc_orbit(const Graph &g, size_t max_vertices, size_t max_keys) {
    return orbit_bfs(g, nullptr, max_vertices, max_keys);
}

OrbitSet luc_orbit(const Graph &g, const ControlManifold &controls, size_t max_vertices,
                   size_t max_keys) {
    return orbit_bfs(g, &controls, max_vertices, max_keys);
}

Graph replay_moves(const Graph &seed, const std::vector<OrbitMove> &moves,
                   const ControlManifold *controls) {
    Graph g = seed;
    for (const OrbitMove &m : moves) {
        switch (m.kind) {
            case OrbitMove::Kind::LocalComplement:
                g = local_complement(g, m.vertex);
                break;
            case OrbitMove::Kind::ControlCZ: {
                if (!controls) throw DimensionError("replay: control move without manifold");
                g.toggle_edge(g.require_index(controls->a), g.require_index(controls->b));
                break;
            }
            case OrbitMove::Kind::ControlSwap: {
                if (!controls) throw DimensionError("replay: control move without manifold");
                size_t a = g.require_index(controls->a);
                size_t b = g.require_index(controls->b);
                Graph h = g;
                for (size_t q = 0; q < g.vertex_count(); q++) {
                    if (q == a || q == b) continue;
                    h.set_edge(a, q, g.has_edge(b, q));
                    h.set_edge(b, q, g.has_edge(a, q));
                }
                g = h;
                break;
            }
        }
    }
    return g;
}

namespace {

void require_same_vertex_set(const Graph &g1, const Graph &g2) {
    if (g1.ids() != g2.ids()) {
        throw DimensionError("equivalence check requires the same labeled vertex set");
    }
}

EquivalenceCertificate certify(const OrbitSet &orbit, const Graph &seed, const Graph &target,
                               const ControlManifold *controls) {
    EquivalenceCertificate cert{};
    OrbitKey key = orbit_key_of(target);
    cert.orbit_size = orbit.size();
    if (orbit.contains(key)) {
        cert.equivalent = true;
        cert.moves = orbit.path_to(key);
        // Machine-check on emission: the replayed moves must map seed to target.
        Graph replayed = replay_moves(seed, cert.moves, controls);
        if (!(orbit_key_of(replayed) == key)) {
            throw DimensionError("certificate replay failed");
        }
    } else {
        cert.equivalent = false;
        cert.absent_key = key;
    }
    return cert;
}

}  // namespace

EquivalenceCertificate lc_equivalent(const Graph &g1, const Graph &g2, size_t max_vertices,
                                     size_t max_keys) {
    require_same_vertex_set(g1, g2);
    OrbitSet orbit = lc_orbit(g1, max_vertices, max_keys);
    return certify(orbit, g1, g2, nullptr);
}

EquivalenceCertificate luc_equivalent(const Graph &g1, const Graph &g2,
                                      const ControlManifold &controls, size_t max_vertices,
                                      size_t max_keys) {
    require_same_vertex_set(g1, g2);
    OrbitSet orbit = luc_orbit(g1, controls, max_vertices, max_keys);
    return certify(orbit, g1, g2, &controls);
}

}  // namespace graphemit
