#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "autgenus/automata.hpp"

namespace autgenus {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// A dart is one end of an edge: dart 2e sits at edges[e].first, dart 2e+1 at
/// edges[e].second. A loop contributes both darts to the same vertex.
using Dart = std::uint32_t;

constexpr Dart dart_of(EdgeId e, unsigned side) { return 2 * e + side; }
constexpr EdgeId edge_of(Dart d) { return d / 2; }
constexpr Dart twin(Dart d) { return d ^ 1u; }

struct MultiGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    std::size_t edge_count() const { return edges.size(); }
    std::size_t dart_count() const { return 2 * edges.size(); }
    Vertex vertex_of(Dart d) const { return d & 1u ? edges[edge_of(d)].second : edges[edge_of(d)].first; }
    bool is_loop(EdgeId e) const { return edges[e].first == edges[e].second; }

    /// Loops count twice.
    std::vector<std::size_t> degrees() const;
    /// Darts at each vertex in increasing id order.
    std::vector<std::vector<Dart>> incident_darts() const;
    bool connected() const;
    bool has_loops() const;
    bool simple() const;

    /// Throws Error on endpoints out of range.
    void validate() const;
};

/// Underlying graph of an automaton plus the transition behind each edge.
struct UnderlyingGraph {
    MultiGraph graph;
    std::vector<Transition> edge_transition;
};

UnderlyingGraph underlying_graph(const Nfa& nfa);
/// Edge ids follow Dfa::transitions() order.
UnderlyingGraph underlying_graph(const Dfa& dfa);

/// Cyclic order of darts around every vertex; encodes a cellular embedding in
/// a closed orientable surface.
class RotationSystem {
public:
    RotationSystem() = default;
    /// Throws Error unless every dart appears exactly once, at its own vertex.
    RotationSystem(MultiGraph graph, std::vector<std::vector<Dart>> rotation);

    /// Rotation given by incident darts in id order.
    static RotationSystem identity(MultiGraph graph);

    const MultiGraph& graph() const { return graph_; }
    const std::vector<std::vector<Dart>>& rotation() const { return rotation_; }
    const std::vector<Dart>& at(Vertex v) const { return rotation_[v]; }

    Dart successor(Dart d) const { return succ_[d]; }
    /// Next dart along the face to the left of d.
    Dart face_next(Dart d) const { return succ_[twin(d)]; }

    bool operator==(const RotationSystem& o) const { return rotation_ == o.rotation_ && graph_.edges == o.graph_.edges; }

private:
    MultiGraph graph_;
    std::vector<std::vector<Dart>> rotation_;
    std::vector<Dart> succ_;
};

/// counts[k] = number of k-faces. The single-vertex edgeless graph has one
/// face of degree 0.
struct FaceProfile {
    std::map<int, std::int64_t> counts;

    std::int64_t faces() const;
    /// Sum of k * f_k.
    std::int64_t weighted() const;

    auto operator<=>(const FaceProfile&) const = default;
};

struct EmbeddingStats {
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    std::int64_t chi = 0;
    std::int64_t genus = 0;
};

enum class LowerProof { Exhausted, BranchBoundClosed, Bracket };

struct GenusResult {
    std::int64_t genus = 0;  // best genus found (upper end of the bracket)
    std::int64_t lower = 0;  // equals genus unless proof == Bracket
    LowerProof proof = LowerProof::Exhausted;
    RotationSystem witness;
    std::uint64_t explored = 0;  // complete rotation systems evaluated
    std::uint64_t nodes = 0;     // search nodes, counted against the budget

    bool exact() const { return proof != LowerProof::Bracket; }
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000;
    /// Force exhaustive enumeration even if over budget.
    bool exhaustive = false;
    /// Loops are deleted before the search and reinserted as 1-gons.
    bool strip_loops = true;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Face orbits of the face permutation, each starting at its smallest dart.
std::vector<std::vector<Dart>> face_orbits(const RotationSystem& rs);

/// Throws Error on disconnected graphs.
FaceProfile trace_faces(const RotationSystem& rs);
EmbeddingStats euler_genus(const RotationSystem& rs);
/// Sum of genera of the connected components.
std::int64_t genus_by_component(const RotationSystem& rs);

/// Product over vertices of (deg - 1)!, saturating at UINT64_MAX.
std::uint64_t search_space(const MultiGraph& g);

GenusResult min_genus(const MultiGraph& g, const SearchOptions& options = {});
MultiGraph remove_loops(const MultiGraph& g);

/// Calls visit on every rotation system, or on one of each mirror pair when
/// up_to_mirror is set; stops early when visit returns false. Throws Error if
/// the space exceeds the budget.
void for_each_rotation(const MultiGraph& g, std::uint64_t budget, const std::function<bool(const RotationSystem&)>& visit,
                       bool up_to_mirror = true);

/// Face profiles of all minimum-genus rotation systems. Throws Error when the
/// exhaustive space exceeds the budget.
std::set<FaceProfile> minimal_profiles(const MultiGraph& g, std::uint64_t budget = kDefaultBudget);

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationSystem> witness;  // genus-0 rotation when planar
};

PlanarityResult is_planar(const MultiGraph& g);

/// Lifts a rotation of remove_loops(full) back to `full`: kept_edges[i] is
/// the id in `full` of stripped edge i; every loop becomes a 1-gon (its two
/// darts consecutive).
RotationSystem reinsert_loops(const MultiGraph& full, const RotationSystem& stripped, std::span<const EdgeId> kept_edges);

}  // namespace autgenus
