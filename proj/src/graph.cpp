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

#include "graphemit/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "graphemit/errors.hpp"

namespace graphemit {

using ordered_json = nlohmann::ordered_json;

const char *vertex_role_name(VertexRole role) {
    switch (role) {
        case VertexRole::Photon: return "photon";
        case VertexRole::Emitter: return "emitter";
        case VertexRole::Nuclear: return "nuclear";
    }
    return "?";
}

VertexRole vertex_role_from_name(const std::string &name) {
    if (name == "photon") return VertexRole::Photon;
    if (name == "emitter") return VertexRole::Emitter;
    if (name == "nuclear") return VertexRole::Nuclear;
    throw DimensionError("unknown vertex role: " + name);
}

Graph::Graph(std::vector<uint32_t> ids, std::vector<VertexRole> roles)
    : ids_(std::move(ids)), roles_(std::move(roles)) {
    if (ids_.size() != roles_.size()) throw DimensionError("ids/roles size mismatch");
    for (size_t i = 0; i < ids_.size(); i++) {
        for (size_t j = i + 1; j < ids_.size(); j++) {
            if (ids_[i] == ids_[j]) throw DimensionError("duplicate vertex id");
        }
    }
    words_ = (ids_.size() + 63) / 64;
    adj_.assign(ids_.size() * words_, 0);
}

Graph Graph::with_photons(size_t n) {
    std::vector<uint32_t> ids(n);
    for (size_t i = 0; i < n; i++) ids[i] = static_cast<uint32_t>(i);
    return Graph(ids, std::vector<VertexRole>(n, VertexRole::Photon));
}

Graph Graph::path(size_t n) {
    Graph g = with_photons(n);
    for (size_t i = 0; i + 1 < n; i++) g.set_edge(i, i + 1, true);
    return g;
}

Graph Graph::cycle(size_t n) {
    Graph g = path(n);
    if (n > 2) g.set_edge(n - 1, 0, true);
    return g;
}

Graph Graph::complete(size_t n) {
    Graph g = with_photons(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) g.set_edge(i, j, true);
    }
    return g;
}

Graph Graph::grid(size_t w, size_t h) {
    Graph g = with_photons(w * h);
    for (size_t y = 0; y < h; y++) {
        for (size_t x = 0; x < w; x++) {
            size_t v = x + w * y;
            if (x + 1 < w) g.set_edge(v, v + 1, true);
            if (y + 1 < h) g.set_edge(v, v + w, true);
        }
    }
    return g;
}

Graph Graph::grid3(size_t w, size_t h, size_t d) {
    Graph g = with_photons(w * h * d);
    for (size_t z = 0; z < d; z++) {
        for (size_t y = 0; y < h; y++) {
            for (size_t x = 0; x < w; x++) {
                size_t v = x + w * (y + h * z);
                if (x + 1 < w) g.set_edge(v, v + 1, true);
                if (y + 1 < h) g.set_edge(v, v + w, true);
                if (z + 1 < d) g.set_edge(v, v + w * h, true);
            }
        }
    }
    return g;
}

std::optional<size_t> Graph::index_of(uint32_t id) const {
    for (size_t i = 0; i < ids_.size(); i++) {
        if (ids_[i] == id) return i;
    }
    return std::nullopt;
}

size_t Graph::require_index(uint32_t id) const {
    auto idx = index_of(id);
    if (!idx) throw DimensionError("unknown vertex id " + std::to_string(id));
    return *idx;
}

bool Graph::has_edge(size_t i, size_t j) const {
    return (adj_[i * words_ + (j >> 6)] >> (j & 63)) & 1;
}

void Graph::set_edge(size_t i, size_t j, bool present) {
    if (i == j) throw DimensionError("self edge rejected");
    if (i >= vertex_count() || j >= vertex_count()) throw DimensionError("edge index out of range");
    uint64_t mi = uint64_t{1} << (j & 63);
    uint64_t mj = uint64_t{1} << (i & 63);
    if (present) {
        adj_[i * words_ + (j >> 6)] |= mi;
        adj_[j * words_ + (i >> 6)] |= mj;
    } else {
        adj_[i * words_ + (j >> 6)] &= ~mi;
        adj_[j * words_ + (i >> 6)] &= ~mj;
    }
}

void Graph::toggle_edge(size_t i, size_t j) {
    set_edge(i, j, !has_edge(i, j));
}

std::vector<size_t> Graph::neighbors(size_t i) const {
    std::vector<size_t> out;
    for (size_t j = 0; j < vertex_count(); j++) {
        if (has_edge(i, j)) out.push_back(j);
    }
    return out;
}

size_t Graph::degree(size_t i) const {
    size_t d = 0;
    for (size_t w = 0; w < words_; w++) d += std::popcount(adj_[i * words_ + w]);
    return d;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < vertex_count(); i++) {
        for (size_t j = i + 1; j < vertex_count(); j++) {
            if (has_edge(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

size_t Graph::edge_count() const {
    size_t total = 0;
    for (uint64_t w : adj_) total += std::popcount(w);
    return total / 2;
}

Graph local_complement(const Graph &g, uint32_t id) {
    size_t v = g.require_index(id);
    Graph out = g;
    std::vector<size_t> nbrs = g.neighbors(v);
    for (size_t a = 0; a < nbrs.size(); a++) {
        for (size_t b = a + 1; b < nbrs.size(); b++) {
            out.toggle_edge(nbrs[a], nbrs[b]);
        }
    }
    return out;
}

std::vector<PauliString> stabilizer_generators(const Graph &g) {
    size_t n = g.vertex_count();
    std::vector<PauliString> out;
    out.reserve(n);
    for (size_t a = 0; a < n; a++) {
        PauliString k(n);
        k.set_code(a, PAULI_X);
        for (size_t b : g.neighbors(a)) k.set_code(b, PAULI_Z);
        out.push_back(std::move(k));
    }
    return out;
}

AdjacencyPartition partition_adjacency(const Graph &g, const std::vector<uint32_t> &part0_ids) {
    AdjacencyPartition p;
    std::vector<size_t> idx0;
    for (uint32_t id : part0_ids) idx0.push_back(g.require_index(id));
    std::vector<bool> in0(g.vertex_count(), false);
    for (size_t i : idx0) {
        if (in0[i]) throw DimensionError("duplicate vertex in partition");
        in0[i] = true;
    }
    std::vector<size_t> idx1;
    for (size_t i = 0; i < g.vertex_count(); i++) {
        if (!in0[i]) idx1.push_back(i);
    }
    for (size_t i : idx0) p.part0.push_back(g.ids()[i]);
    for (size_t i : idx1) p.part1.push_back(g.ids()[i]);
    auto restrict_matrix = [&](const std::vector<size_t> &rows, const std::vector<size_t> &cols) {
        std::vector<std::vector<bool>> m(rows.size(), std::vector<bool>(cols.size(), false));
        for (size_t r = 0; r < rows.size(); r++) {
            for (size_t c = 0; c < cols.size(); c++) {
                if (rows[r] != cols[c]) m[r][c] = g.has_edge(rows[r], cols[c]);
            }
        }
        return m;
    };
    p.n0 = restrict_matrix(idx0, idx0);
    p.n1 = restrict_matrix(idx1, idx1);
    p.n01 = restrict_matrix(idx0, idx1);
    return p;
}

Graph reassemble(const Graph &reference, const AdjacencyPartition &p) {
    Graph out(reference.ids(), reference.roles());
    auto put = [&](const std::vector<uint32_t> &rows, const std::vector<uint32_t> &cols,
                   const std::vector<std::vector<bool>> &m) {
        for (size_t r = 0; r < rows.size(); r++) {
            for (size_t c = 0; c < cols.size(); c++) {
                if (m[r][c]) out.set_edge(out.require_index(rows[r]), out.require_index(cols[c]), true);
            }
        }
    };
    put(p.part0, p.part0, p.n0);
    put(p.part1, p.part1, p.n1);
    put(p.part0, p.part1, p.n01);
    return out;
}

std::string Graph::to_json_string() const {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (size_t i = 0; i < vertex_count(); i++) {
        j["vertices"].push_back({{"id", ids_[i]}, {"role", vertex_role_name(roles_[i])}});
    }
    j["edges"] = ordered_json::array();
    for (auto [i, k] : edges()) {
        uint32_t a = ids_[i], b = ids_[k];
        if (a > b) std::swap(a, b);
        j["edges"].push_back({a, b});
    }
    return j.dump(2) + "\n";
}

Graph Graph::from_json_string(const std::string &text) {
    ordered_json j = ordered_json::parse(text);
    std::vector<uint32_t> ids;
    std::vector<VertexRole> roles;
    for (const auto &v : j.at("vertices")) {
        ids.push_back(v.at("id").get<uint32_t>());
        roles.push_back(v.contains("role") ? vertex_role_from_name(v.at("role").get<std::string>())
                                           : VertexRole::Photon);
    }
    Graph g(std::move(ids), std::move(roles));
    if (j.contains("edges")) {
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw DimensionError("edge must be a pair");
            uint32_t a = e[0].get<uint32_t>(), b = e[1].get<uint32_t>();
            if (a >= b) throw DimensionError("edges must be listed with a < b");
            size_t i = g.require_index(a), k = g.require_index(b);
            if (g.has_edge(i, k)) throw DimensionError("duplicate edge");
            g.set_edge(i, k, true);
        }
    }
    return g;
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph G {\n";
    for (size_t i = 0; i < vertex_count(); i++) {
        const char *shape = roles_[i] == VertexRole::Photon ? "circle"
                          : roles_[i] == VertexRole::Emitter ? "doublecircle" : "diamond";
        os << "  " << ids_[i] << " [shape=" << shape << ", label=\"" << ids_[i] << "\"];\n";
    }
    for (auto [i, j] : edges()) {
        uint32_t a = ids_[i], b = ids_[j];
        if (a > b) std::swap(a, b);
        os << "  " << a << " -- " << b << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace graphemit
