#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "autgenus/error.hpp"
#include "autgenus/planarnfa.hpp"

namespace autgenus {

namespace {

// Working form of a construction step. Darts 2e / 2e+1 sit at the source /
// target of edges[e]; labels may be epsilon while a step is in progress.
struct Piece {
    std::size_t states = 0;
    std::vector<Transition> edges;
    std::vector<std::vector<Dart>> rot;
    StateId init = 0;
    StateId fin = 0;

    StateId add_state() {
        rot.emplace_back();
        return static_cast<StateId>(states++);
    }

    Vertex vertex_of(Dart d) const { return d & 1u ? edges[edge_of(d)].dst : edges[edge_of(d)].src; }

    /// Appends a copy of `p`; returns the state offset.
    StateId absorb(const Piece& p) {
        const auto offset = static_cast<StateId>(states);
        const auto dart_offset = static_cast<Dart>(2 * edges.size());
        for (const auto& t : p.edges) edges.push_back({t.src + offset, t.label, t.dst + offset});
        for (const auto& r : p.rot) {
            auto& out = rot.emplace_back();
            for (auto d : r) out.push_back(d + dart_offset);
        }
        states += p.states;
        return offset;
    }

    std::vector<Dart> successors() const {
        std::vector<Dart> succ(2 * edges.size());
        for (const auto& r : rot) {
            for (std::size_t i = 0; i < r.size(); ++i) succ[r[i]] = r[(i + 1) % r.size()];
        }
        return succ;
    }

    /// Face index of every dart under d -> succ(twin(d)).
    std::vector<int> faces() const {
        const auto succ = successors();
        std::vector<int> face(succ.size(), -1);
        int count = 0;
        for (Dart d = 0; d < succ.size(); ++d) {
            if (face[d] != -1) continue;
            for (Dart x = d; face[x] == -1; x = succ[twin(x)]) face[x] = count;
            ++count;
        }
        return face;
    }

    std::vector<StateId> components() const {
        std::vector<StateId> parent(states);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](StateId x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& t : edges) parent[find(t.src)] = find(t.dst);
        for (StateId q = 0; q < states; ++q) parent[q] = find(q);
        return parent;
    }

    /// Faces next to the corners at v: the corner after dart x lies on the
    /// face of twin(x).
    std::vector<int> corner_faces(Vertex v, const std::vector<int>& face) const {
        std::vector<int> out;
        for (auto x : rot[v]) out.push_back(face[twin(x)]);
        return out;
    }

    /// Adds u -label-> v. Inside one component both ends go into a common
    /// face; across components each end goes into a face shared with its
    /// hint state when there is one.
    void insert_edge(StateId u, StateId v, Letter label, std::optional<StateId> hint_u, std::optional<StateId> hint_v) {
        const auto face = faces();
        const auto comp = components();
        const auto fu = corner_faces(u, face);
        const auto fv = corner_faces(v, face);
        std::optional<std::size_t> cu, cv;

        if (comp[u] == comp[v] && !fu.empty()) {
            for (std::size_t i = 0; i < fu.size() && !cu; ++i) {
                for (std::size_t j = 0; j < fv.size(); ++j) {
                    if (fu[i] == fv[j]) {
                        cu = i;
                        cv = j;
                        break;
                    }
                }
            }
            if (!cu) throw std::logic_error("planar construction: endpoints share no face");
        } else {
            auto pick = [&](const std::vector<int>& own, std::optional<StateId> hint) -> std::optional<std::size_t> {
                if (own.empty()) return std::nullopt;
                if (hint) {
                    const auto fh = corner_faces(*hint, face);
                    for (std::size_t i = 0; i < own.size(); ++i) {
                        if (std::find(fh.begin(), fh.end(), own[i]) != fh.end()) return i;
                    }
                }
                return std::size_t{0};
            };
            cu = pick(fu, hint_u);
            cv = pick(fv, hint_v);
        }

        const auto e = static_cast<EdgeId>(edges.size());
        edges.push_back({u, label, v});
        auto place = [&](Vertex w, Dart d, std::optional<std::size_t> after) {
            auto& r = rot[w];
            r.insert(after ? r.begin() + static_cast<long>(*after) + 1 : r.end(), d);
        };
        place(u, dart_of(e, 0), cu);
        place(v, dart_of(e, 1), cv);
    }

    /// Drops the listed edges and renumbers the rest.
    void erase_edges(const std::vector<bool>& drop) {
        std::vector<EdgeId> remap(edges.size(), 0);
        std::vector<Transition> kept;
        for (EdgeId e = 0; e < edges.size(); ++e) {
            if (drop[e]) continue;
            remap[e] = static_cast<EdgeId>(kept.size());
            kept.push_back(edges[e]);
        }
        for (auto& r : rot) {
            std::vector<Dart> out;
            for (auto d : r) {
                if (!drop[edge_of(d)]) out.push_back(dart_of(remap[edge_of(d)], d & 1u));
            }
            r = std::move(out);
        }
        edges = std::move(kept);
    }

    void contract(EdgeId e) {
        const auto [a, label, b] = edges[e];
        if (label != kEpsilon) throw Error("epsilon_remove: transition " + std::to_string(e) + " is not an epsilon transition");
        if (a == b) throw Error("epsilon_remove: transition " + std::to_string(e) + " is an epsilon loop");

        auto after = [&](Vertex v, Dart d) {
            const auto& r = rot[v];
            const auto at = std::find(r.begin(), r.end(), d);
            std::vector<Dart> out(at + 1, r.end());
            out.insert(out.end(), r.begin(), at);
            return out;
        };
        auto merged = after(a, dart_of(e, 0));
        const auto tail = after(b, dart_of(e, 1));
        merged.insert(merged.end(), tail.begin(), tail.end());

        const StateId keep = std::min(a, b);
        const StateId gone = std::max(a, b);
        rot[keep] = std::move(merged);
        rot.erase(rot.begin() + gone);
        auto rename = [&](StateId q) { return q == gone ? keep : q > gone ? q - 1 : q; };
        for (auto& t : edges) {
            t.src = rename(t.src);
            t.dst = rename(t.dst);
        }
        init = rename(init);
        fin = rename(fin);
        --states;

        std::vector<bool> drop(edges.size(), false);
        drop[e] = true;
        for (EdgeId x = 0; x < edges.size(); ++x) {
            if (edges[x].label == kEpsilon && edges[x].src == edges[x].dst) drop[x] = true;
        }
        erase_edges(drop);
    }

    void contract_epsilons() {
        for (;;) {
            auto it = std::find_if(edges.rbegin(), edges.rend(), [](const Transition& t) { return t.label == kEpsilon; });
            if (it == edges.rend()) return;
            contract(static_cast<EdgeId>(std::distance(it, edges.rend()) - 1));
        }
    }
};

Piece letter_piece(Letter a) {
    Piece p;
    p.init = p.add_state();
    p.fin = p.add_state();
    p.edges.push_back({p.init, a, p.fin});
    p.rot[p.init] = {dart_of(0, 0)};
    p.rot[p.fin] = {dart_of(0, 1)};
    return p;
}

Piece empty_piece() {
    Piece p;
    p.init = p.add_state();
    p.fin = p.add_state();
    return p;
}

// Fresh initial and final states, joined to both operands by four epsilon
// edges, all contracted.
Piece union_of(const Piece& a, const Piece& b) {
    Piece p;
    const auto i = p.add_state();
    const auto oa = p.absorb(a);
    const auto ob = p.absorb(b);
    const auto f = p.add_state();
    const StateId ia = a.init + oa, fa = a.fin + oa, ib = b.init + ob, fb = b.fin + ob;
    p.insert_edge(i, ia, kEpsilon, std::nullopt, fa);
    p.insert_edge(i, ib, kEpsilon, std::nullopt, fb);
    p.insert_edge(fa, f, kEpsilon, i, std::nullopt);
    p.insert_edge(fb, f, kEpsilon, i, std::nullopt);
    p.init = i;
    p.fin = f;
    p.contract_epsilons();
    return p;
}

Piece concat_of(const Piece& a, const Piece& b) {
    Piece p;
    const auto oa = p.absorb(a);
    const auto ob = p.absorb(b);
    p.insert_edge(a.fin + oa, b.init + ob, kEpsilon, a.init + oa, b.fin + ob);
    p.init = a.init + oa;
    p.fin = b.fin + ob;
    p.contract_epsilons();
    return p;
}

// R+ = R + R.R*.R: R* is a single state carrying a copy of R whose final
// state has been merged into its initial one.
Piece plus_of(const Piece& a) {
    Piece loop = a;
    loop.insert_edge(loop.fin, loop.init, kEpsilon, std::nullopt, std::nullopt);
    loop.contract_epsilons();
    const auto inner = concat_of(concat_of(a, loop), a);
    return union_of(inner, a);
}

Piece build(const Regex& r, const Alphabet& alphabet) {
    using K = Regex::Kind;
    switch (r.kind) {
        case K::Empty: return empty_piece();
        case K::Letter: {
            const auto a = alphabet.find(r.letter);
            if (!a) throw Error("regex letter '" + r.letter + "' is not in the alphabet");
            return letter_piece(*a);
        }
        case K::Union: return union_of(build(r.children[0], alphabet), build(r.children[1], alphabet));
        case K::Concat: return concat_of(build(r.children[0], alphabet), build(r.children[1], alphabet));
        case K::Plus: return plus_of(build(r.children[0], alphabet));
        case K::Star: break;
    }
    throw std::logic_error("star must be rewritten before construction");
}

struct EpsilonFree {
    bool nullable = false;
    Regex core;  // language of r without the empty word
};

// Star-free input comes back unchanged with nullable = false.
EpsilonFree split_empty_word(const Regex& r) {
    using K = Regex::Kind;
    switch (r.kind) {
        case K::Empty:
        case K::Letter: return {false, r};
        case K::Union: {
            auto x = split_empty_word(r.children[0]);
            auto y = split_empty_word(r.children[1]);
            return {x.nullable || y.nullable, Regex::alt(std::move(x.core), std::move(y.core))};
        }
        case K::Concat: {
            auto x = split_empty_word(r.children[0]);
            auto y = split_empty_word(r.children[1]);
            auto core = Regex::cat(x.core, y.core);
            if (x.nullable) core = Regex::alt(std::move(core), y.core);
            if (y.nullable) core = Regex::alt(std::move(core), x.core);
            return {x.nullable && y.nullable, std::move(core)};
        }
        case K::Plus: {
            auto x = split_empty_word(r.children[0]);
            return {x.nullable, Regex::plus(std::move(x.core))};
        }
        case K::Star: {
            auto x = split_empty_word(r.children[0]);
            return {true, Regex::plus(std::move(x.core))};
        }
    }
    throw std::logic_error("unknown regex kind");
}

Piece to_piece(const PlanarNfa& p) {
    Piece w;
    w.states = p.nfa.states;
    w.edges = p.nfa.transitions;
    w.rot = p.rotation.rotation();
    w.init = p.initial;
    w.fin = p.final;
    return w;
}

/// Sorts and deduplicates transitions; darts follow their edges and the
/// darts of dropped duplicates are removed.
PlanarNfa finish(Piece w, const Alphabet& alphabet, bool initial_final) {
    std::vector<EdgeId> order(w.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return w.edges[x] < w.edges[y]; });
    std::vector<EdgeId> remap(w.edges.size(), 0);
    std::vector<bool> drop(w.edges.size(), false);
    std::vector<Transition> sorted;
    for (auto e : order) {
        if (!sorted.empty() && sorted.back() == w.edges[e]) {
            drop[e] = true;
            continue;
        }
        remap[e] = static_cast<EdgeId>(sorted.size());
        sorted.push_back(w.edges[e]);
    }
    for (auto& r : w.rot) {
        std::vector<Dart> out;
        for (auto d : r) {
            if (!drop[edge_of(d)]) out.push_back(dart_of(remap[edge_of(d)], d & 1u));
        }
        r = std::move(out);
    }

    PlanarNfa out;
    out.nfa.alphabet = alphabet;
    out.nfa.states = w.states;
    out.nfa.initial = {w.init};
    out.nfa.finals = {w.fin};
    if (initial_final) out.nfa.finals.push_back(w.init);
    out.nfa.transitions = std::move(sorted);
    out.nfa.normalize();
    out.initial = w.init;
    out.final = w.fin;
    out.initial_final = initial_final;
    out.rotation = RotationSystem(underlying_graph(out.nfa).graph, std::move(w.rot));
    if (genus_by_component(out.rotation) != 0) throw std::logic_error("planar construction produced positive genus");
    return out;
}

}  // namespace

PlanarNfa build_planar_nfa(const Regex& r, const Alphabet& alphabet) {
    const Alphabet sigma = alphabet.size() > 0 ? alphabet : regex_alphabet(r);
    auto [nullable, core] = split_empty_word(r);
    return finish(build(core, sigma), sigma, nullable);
}

PlanarNfa epsilon_remove(const PlanarNfa& p, std::size_t t) {
    if (t >= p.nfa.transitions.size()) throw Error("epsilon_remove: no transition " + std::to_string(t));
    auto w = to_piece(p);
    w.contract(static_cast<EdgeId>(t));
    return finish(std::move(w), p.nfa.alphabet, p.initial_final);
}

bool is_well_formed(const PlanarNfa& p) {
    const auto& n = p.nfa;
    if (p.initial >= n.states || p.final >= n.states || p.initial == p.final) return false;
    if (n.initial != std::vector<StateId>{p.initial}) return false;
    std::vector<StateId> finals{p.final};
    if (p.initial_final) finals.push_back(p.initial);
    std::sort(finals.begin(), finals.end());
    if (n.finals != finals) return false;
    if (p.rotation.graph().edges != underlying_graph(n).graph.edges) return false;
    if (p.rotation.graph().vertex_count != n.states) return false;
    return genus_by_component(p.rotation) == 0;
}

}  // namespace autgenus
