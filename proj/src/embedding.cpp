#include "autgenus/embedding.hpp"

#include <algorithm>
#include <numeric>

#include "autgenus/error.hpp"

namespace autgenus {

std::vector<std::size_t> MultiGraph::degrees() const {
    std::vector<std::size_t> deg(vertex_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<Dart>> MultiGraph::incident_darts() const {
    std::vector<std::vector<Dart>> out(vertex_count);
    for (Dart d = 0; d < dart_count(); ++d) out[vertex_of(d)].push_back(d);
    return out;
}

bool MultiGraph::connected() const {
    if (vertex_count == 0) return false;
    std::vector<Vertex> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertex_count;
    for (const auto& [u, v] : edges) {
        auto a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

bool MultiGraph::has_loops() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

bool MultiGraph::simple() const {
    std::vector<std::pair<Vertex, Vertex>> norm;
    for (const auto& [u, v] : edges) {
        if (u == v) return false;
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    return std::adjacent_find(norm.begin(), norm.end()) == norm.end();
}

void MultiGraph::validate() const {
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].first >= vertex_count || edges[e].second >= vertex_count) {
            throw Error("edge " + std::to_string(e) + " has an endpoint out of range");
        }
    }
}

UnderlyingGraph underlying_graph(const Nfa& nfa) {
    UnderlyingGraph ug;
    ug.graph.vertex_count = nfa.states;
    for (const auto& t : nfa.transitions) {
        ug.graph.edges.emplace_back(t.src, t.dst);
        ug.edge_transition.push_back(t);
    }
    return ug;
}

UnderlyingGraph underlying_graph(const Dfa& dfa) {
    UnderlyingGraph ug;
    ug.graph.vertex_count = dfa.size();
    for (const auto& t : dfa.transitions()) {
        ug.graph.edges.emplace_back(t.src, t.dst);
        ug.edge_transition.push_back(t);
    }
    return ug;
}

// ---------------------------------------------------------------------------

RotationSystem::RotationSystem(MultiGraph graph, std::vector<std::vector<Dart>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)), succ_(graph_.dart_count(), 0) {
    graph_.validate();
    if (rotation_.size() != graph_.vertex_count) throw Error("rotation system must list every vertex");
    std::vector<std::uint8_t> seen(graph_.dart_count(), 0);
    for (Vertex v = 0; v < rotation_.size(); ++v) {
        const auto& cyc = rotation_[v];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Dart d = cyc[i];
            if (d >= graph_.dart_count()) throw Error("rotation at vertex " + std::to_string(v) + ": dart out of range");
            if (graph_.vertex_of(d) != v) throw Error("rotation at vertex " + std::to_string(v) + ": dart " + std::to_string(d) + " belongs elsewhere");
            if (seen[d]++) throw Error("dart " + std::to_string(d) + " appears twice in the rotation");
            succ_[d] = cyc[(i + 1) % cyc.size()];
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw Error("rotation system does not cover every dart");
}

RotationSystem RotationSystem::identity(MultiGraph graph) {
    auto rot = graph.incident_darts();
    return RotationSystem(std::move(graph), std::move(rot));
}

std::int64_t FaceProfile::faces() const {
    std::int64_t s = 0;
    for (const auto& [k, f] : counts) s += f;
    return s;
}

std::int64_t FaceProfile::weighted() const {
    std::int64_t s = 0;
    for (const auto& [k, f] : counts) s += k * f;
    return s;
}

std::vector<std::vector<Dart>> face_orbits(const RotationSystem& rs) {
    const auto n = rs.graph().dart_count();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::vector<Dart>> out;
    for (Dart d = 0; d < n; ++d) {
        if (seen[d]) continue;
        std::vector<Dart> orbit;
        for (Dart x = d; !seen[x]; x = rs.face_next(x)) {
            seen[x] = 1;
            orbit.push_back(x);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

FaceProfile trace_faces(const RotationSystem& rs) {
    if (!rs.graph().connected()) throw Error("trace_faces: graph is not connected");
    FaceProfile p;
    if (rs.graph().edge_count() == 0) {
        p.counts[0] = 1;
        return p;
    }
    for (const auto& orbit : face_orbits(rs)) ++p.counts[static_cast<int>(orbit.size())];
    return p;
}

EmbeddingStats euler_genus(const RotationSystem& rs) {
    const auto profile = trace_faces(rs);
    EmbeddingStats s;
    s.e0 = static_cast<std::int64_t>(rs.graph().vertex_count);
    s.e1 = static_cast<std::int64_t>(rs.graph().edge_count());
    s.e2 = profile.faces();
    s.chi = s.e0 - s.e1 + s.e2;
    s.genus = (2 - s.chi) / 2;
    return s;
}

std::int64_t genus_by_component(const RotationSystem& rs) {
    const auto& g = rs.graph();
    std::vector<Vertex> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);

    std::map<Vertex, std::int64_t> chi;
    for (Vertex v = 0; v < g.vertex_count; ++v) chi[find(v)] += 1;
    for (const auto& [u, v] : g.edges) chi[find(u)] -= 1;
    for (const auto& orbit : face_orbits(rs)) chi[find(g.vertex_of(orbit.front()))] += 1;
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        if (rs.at(v).empty()) chi[find(v)] += 1;  // isolated vertex: one face
    }
    std::int64_t genus = 0;
    for (const auto& [root, c] : chi) genus += (2 - c) / 2;
    return genus;
}

MultiGraph remove_loops(const MultiGraph& g) {
    MultiGraph out;
    out.vertex_count = g.vertex_count;
    for (const auto& e : g.edges) {
        if (e.first != e.second) out.edges.push_back(e);
    }
    return out;
}

RotationSystem reinsert_loops(const MultiGraph& full, const RotationSystem& stripped, std::span<const EdgeId> kept_edges) {
    std::vector<std::vector<Dart>> rot(full.vertex_count);
    for (Vertex v = 0; v < full.vertex_count; ++v) {
        for (Dart d : stripped.at(v)) rot[v].push_back(dart_of(kept_edges[edge_of(d)], d & 1u));
    }
    for (EdgeId e = 0; e < full.edge_count(); ++e) {
        if (!full.is_loop(e)) continue;
        auto& r = rot[full.edges[e].first];
        r.push_back(dart_of(e, 0));
        r.push_back(dart_of(e, 1));
    }
    return RotationSystem(full, std::move(rot));
}

}  // namespace autgenus
