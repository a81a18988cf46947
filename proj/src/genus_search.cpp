#include <algorithm>
#include <limits>
#include <numeric>

#include "autgenus/embedding.hpp"
#include "autgenus/error.hpp"

namespace autgenus {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f = saturating_mul(f, i);
    return f;
}

std::int64_t ceil_half(std::int64_t x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

/// Depth-first enumeration of rotation systems, vertex by vertex. Each vertex
/// keeps its smallest dart first and permutes the rest lexicographically.
class RotationSearch {
public:
    RotationSearch(const MultiGraph& g, bool up_to_mirror) : g_(g), darts_(g.incident_darts()) {
        const auto deg = g.degrees();
        order_.resize(g.vertex_count);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
        mirror_ = up_to_mirror && !order_.empty() && darts_[order_.front()].size() >= 3;
        succ_.assign(g.dart_count(), 0);
        assigned_.assign(g.vertex_count, 0);
        rotation_.assign(g.vertex_count, {});
        unassigned_darts_ = static_cast<std::int64_t>(g.dart_count());
        // A face of length 1 needs a loop; length 2 needs parallel edges or K2.
        if (g.has_loops()) {
            min_face_ = 1;
        } else if (!g.simple() || g.edge_count() <= 1) {
            min_face_ = 2;
        } else {
            min_face_ = 3;
        }
    }

    std::uint64_t leaves_estimate() const {
        std::uint64_t total = 1;
        for (const auto& ds : darts_) total = saturating_mul(total, factorial(ds.empty() ? 0 : ds.size() - 1));
        if (mirror_ && total != kSaturated) total /= 2;
        return total;
    }

    /// Upper bound on the number of faces of any completion of the current
    /// partial rotation, turned into a genus lower bound via Euler.
    std::int64_t genus_lower_bound() {
        const auto n = g_.dart_count();
        if (n == 0) return 0;
        visited_.assign(n, 0);
        std::int64_t closed = 0, closed_darts = 0;
        for (Dart d = 0; d < n; ++d) {
            if (visited_[d]) continue;
            Dart x = d;
            std::int64_t len = 0;
            visited_[x] = 1;
            ++len;
            while (determined(x)) {
                x = succ_[twin(x)];
                if (x == d) {
                    ++closed;
                    closed_darts += len;
                    break;
                }
                if (visited_[x]) break;
                visited_[x] = 1;
                ++len;
            }
        }
        const std::int64_t remaining = static_cast<std::int64_t>(n) - closed_darts;
        const std::int64_t open = std::min<std::int64_t>(unassigned_darts_, remaining / min_face_);
        const std::int64_t faces = closed + open;
        const auto v = static_cast<std::int64_t>(g_.vertex_count), e = static_cast<std::int64_t>(g_.edge_count());
        return std::max<std::int64_t>(0, ceil_half(2 - v + e - faces));
    }

    std::int64_t exact_genus() {
        if (g_.dart_count() == 0) return 0;
        visited_.assign(g_.dart_count(), 0);
        std::int64_t faces = 0;
        for (Dart d = 0; d < g_.dart_count(); ++d) {
            if (visited_[d]) continue;
            ++faces;
            for (Dart x = d; !visited_[x]; x = succ_[twin(x)]) visited_[x] = 1;
        }
        const auto v = static_cast<std::int64_t>(g_.vertex_count), e = static_cast<std::int64_t>(g_.edge_count());
        return (2 - (v - e + faces)) / 2;
    }

    RotationSystem snapshot() const { return RotationSystem(g_, rotation_); }

    /// visit(depth_done) is called after each vertex assignment with the
    /// number of vertices assigned; returning Prune skips the subtree,
    /// Stop aborts the whole search.
    enum class Action { Descend, Prune, Stop };

    template <class OnNode, class OnLeaf>
    bool run(OnNode&& on_node, OnLeaf&& on_leaf) {
        return descend(0, on_node, on_leaf);
    }

private:
    bool determined(Dart d) const { return assigned_[g_.vertex_of(twin(d))] != 0; }

    void assign(Vertex v, const std::vector<Dart>& cyc) {
        rotation_[v] = cyc;
        for (std::size_t i = 0; i < cyc.size(); ++i) succ_[cyc[i]] = cyc[(i + 1) % cyc.size()];
        if (!assigned_[v]) unassigned_darts_ -= static_cast<std::int64_t>(cyc.size());
        assigned_[v] = 1;
    }

    void unassign(Vertex v) {
        assigned_[v] = 0;
        unassigned_darts_ += static_cast<std::int64_t>(darts_[v].size());
    }

    template <class OnNode, class OnLeaf>
    bool descend(std::size_t depth, OnNode& on_node, OnLeaf& on_leaf) {
        if (depth == order_.size()) return on_leaf();
        const Vertex v = order_[depth];
        const auto& ds = darts_[v];
        std::vector<Dart> rest(ds.begin() + (ds.empty() ? 0 : 1), ds.end());
        std::vector<Dart> cyc(ds.size());
        do {
            if (depth == 0 && mirror_ && rest.front() > rest.back()) continue;
            if (!ds.empty()) {
                cyc[0] = ds[0];
                std::copy(rest.begin(), rest.end(), cyc.begin() + 1);
            }
            assign(v, cyc);
            const Action act = on_node(depth + 1);
            bool keep_going = true;
            if (act == Action::Stop) {
                keep_going = false;
            } else if (act == Action::Descend) {
                keep_going = descend(depth + 1, on_node, on_leaf);
            }
            unassign(v);
            if (!keep_going) return false;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return true;
    }

    const MultiGraph& g_;
    std::vector<std::vector<Dart>> darts_;
    std::vector<Vertex> order_;
    bool mirror_ = false;
    std::vector<Dart> succ_;
    std::vector<std::uint8_t> assigned_;
    std::vector<std::vector<Dart>> rotation_;
    std::vector<std::uint8_t> visited_;
    std::int64_t unassigned_darts_ = 0;
    std::int64_t min_face_ = 1;
};

using Action = RotationSearch::Action;

}  // namespace

std::uint64_t search_space(const MultiGraph& g) {
    std::uint64_t total = 1;
    for (auto d : g.degrees()) total = saturating_mul(total, factorial(d == 0 ? 0 : d - 1));
    return total;
}

void for_each_rotation(const MultiGraph& g, std::uint64_t budget, const std::function<bool(const RotationSystem&)>& visit,
                       bool up_to_mirror) {
    g.validate();
    RotationSearch search(g, up_to_mirror);
    if (search.leaves_estimate() > budget) {
        throw Error("rotation space of " + std::to_string(search.leaves_estimate()) + " exceeds the budget of " + std::to_string(budget));
    }
    search.run([](std::size_t) { return Action::Descend; }, [&] { return visit(search.snapshot()); });
}

GenusResult min_genus(const MultiGraph& input, const SearchOptions& options) {
    input.validate();
    if (!input.connected()) throw Error("min_genus: graph is not connected");

    std::vector<EdgeId> kept;
    MultiGraph g;
    if (options.strip_loops) {
        g.vertex_count = input.vertex_count;
        for (EdgeId e = 0; e < input.edge_count(); ++e) {
            if (!input.is_loop(e)) {
                kept.push_back(e);
                g.edges.push_back(input.edges[e]);
            }
        }
    } else {
        g = input;
    }

    RotationSearch search(g, true);
    const std::int64_t root_bound = search.genus_lower_bound();
    const bool exhaustive = options.exhaustive || search.leaves_estimate() <= options.budget;

    GenusResult result;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::optional<RotationSystem> witness;
    bool aborted = false;

    auto on_node = [&](std::size_t) {
        ++result.nodes;
        if (exhaustive) return Action::Descend;
        if (result.nodes > options.budget && witness) {
            aborted = true;
            return Action::Stop;
        }
        return search.genus_lower_bound() >= best ? Action::Prune : Action::Descend;
    };
    auto on_leaf = [&] {
        ++result.explored;
        const std::int64_t genus = search.exact_genus();
        if (genus < best) {
            best = genus;
            witness = search.snapshot();
            if (!exhaustive && best <= root_bound) return false;
        }
        return true;
    };
    search.run(on_node, on_leaf);

    result.genus = best;
    if (exhaustive) {
        result.proof = LowerProof::Exhausted;
        result.lower = best;
    } else if (aborted) {
        result.proof = LowerProof::Bracket;
        result.lower = std::min(best, root_bound);
    } else {
        result.proof = LowerProof::BranchBoundClosed;
        result.lower = best;
    }
    result.witness = options.strip_loops ? reinsert_loops(input, *witness, kept) : std::move(*witness);
    return result;
}

std::set<FaceProfile> minimal_profiles(const MultiGraph& g, std::uint64_t budget) {
    if (!g.connected()) throw Error("minimal_profiles: graph is not connected");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::set<FaceProfile> out;
    for_each_rotation(g, budget, [&](const RotationSystem& rs) {
        const auto profile = trace_faces(rs);
        const std::int64_t chi = static_cast<std::int64_t>(g.vertex_count) - static_cast<std::int64_t>(g.edge_count()) + profile.faces();
        const std::int64_t genus = (2 - chi) / 2;
        if (genus < best) {
            best = genus;
            out.clear();
        }
        if (genus == best) out.insert(profile);
        return true;
    });
    return out;
}

}  // namespace autgenus
