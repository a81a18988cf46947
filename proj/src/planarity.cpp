#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "autgenus/embedding.hpp"
#include "autgenus/error.hpp"

namespace autgenus {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

// Planarity is decided on the simple graph underneath: loops and parallel
// edges never affect it. The planar embedding found there is expanded back:
// parallel copies become nested arcs, loops become 1-gons.
PlanarityResult is_planar(const MultiGraph& g) {
    g.validate();
    if (g.vertex_count == 0) return {true, RotationSystem(g, {})};

    // group parallel edges by unordered endpoint pair
    std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> groups;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edges[e];
        if (u != v) groups[{std::min(u, v), std::max(u, v)}].push_back(e);
    }

    BoostGraph bg(g.vertex_count);
    std::vector<std::pair<Vertex, Vertex>> simple_edges;
    for (const auto& [key, members] : groups) {
        boost::add_edge(key.first, key.second, static_cast<int>(simple_edges.size()), bg);
        simple_edges.push_back(key);
    }

    using Embedding = std::vector<std::vector<BoostEdge>>;
    Embedding embedding(g.vertex_count);
    const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                            boost::boyer_myrvold_params::embedding = &embedding[0]);
    PlanarityResult result;
    result.planar = planar;
    if (!planar) return result;

    auto edge_index = boost::get(boost::edge_index, bg);
    std::vector<std::vector<Dart>> rot(g.vertex_count);
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        for (const auto& be : embedding[v]) {
            const auto& key = simple_edges[static_cast<std::size_t>(boost::get(edge_index, be))];
            const auto& members = groups.at(key);
            // at the lower endpoint copies run forwards, at the other end
            // backwards, so consecutive copies bound 2-faces
            auto emit = [&](EdgeId e) {
                const unsigned side = g.edges[e].first == v ? 0u : 1u;
                rot[v].push_back(dart_of(e, side));
            };
            if (v == key.first) {
                std::for_each(members.begin(), members.end(), emit);
            } else {
                std::for_each(members.rbegin(), members.rend(), emit);
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!g.is_loop(e)) continue;
        rot[g.edges[e].first].push_back(dart_of(e, 0));
        rot[g.edges[e].first].push_back(dart_of(e, 1));
    }
    RotationSystem rs(g, std::move(rot));
    if (genus_by_component(rs) != 0) throw std::logic_error("planar embedding expansion lost genus 0");
    result.witness = std::move(rs);
    return result;
}

}  // namespace autgenus
