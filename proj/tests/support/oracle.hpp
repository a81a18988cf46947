// Reference implementations used only by the tests. They share no code with
// the library beyond its plain data types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "autgenus/automata.hpp"
#include "autgenus/embedding.hpp"
#include "autgenus/planarnfa.hpp"

namespace oracle {

using autgenus::Dfa;
using autgenus::Letter;
using autgenus::Nfa;
using autgenus::StateId;
using Word = std::vector<Letter>;

/// All words over m letters of length at most max_len, shortest first.
inline std::vector<Word> words(std::size_t m, std::size_t max_len) {
    std::vector<Word> out{{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (Letter a = 0; a < static_cast<Letter>(m); ++a) {
                auto w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

/// Set-of-states simulation with explicit epsilon closure.
inline bool nfa_accepts(const Nfa& nfa, const Word& w) {
    std::vector<char> cur(nfa.states, 0);
    auto close = [&](std::vector<char>& s) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& t : nfa.transitions) {
                if (t.label == autgenus::kEpsilon && s[t.src] && !s[t.dst]) s[t.dst] = grew = true;
            }
        }
    };
    for (auto q : nfa.initial) cur[q] = 1;
    close(cur);
    for (auto a : w) {
        std::vector<char> next(nfa.states, 0);
        for (const auto& t : nfa.transitions) {
            if (t.label == a && cur[t.src]) next[t.dst] = 1;
        }
        close(next);
        cur = std::move(next);
    }
    for (auto f : nfa.finals) {
        if (cur[f]) return true;
    }
    return false;
}

inline bool dfa_accepts(const Dfa& d, const Word& w) {
    StateId q = d.initial();
    for (auto a : w) q = d.next(q, a);
    return d.is_final(q);
}

/// Same answers on every word up to max_len.
template <class A, class B>
bool agree(const A& accept_a, const B& accept_b, std::size_t m, std::size_t max_len) {
    for (const auto& w : words(m, max_len)) {
        if (accept_a(w) != accept_b(w)) return false;
    }
    return true;
}

/// Regex membership by dynamic programming over factors w[i..j).
inline bool regex_matches(const autgenus::Regex& r, const autgenus::Alphabet& sigma, const Word& w) {
    using K = autgenus::Regex::Kind;
    const std::size_t n = w.size();
    using Table = std::vector<std::vector<char>>;
    std::function<Table(const autgenus::Regex&)> eval = [&](const autgenus::Regex& x) {
        Table t(n + 1, std::vector<char>(n + 1, 0));
        switch (x.kind) {
            case K::Empty: break;
            case K::Letter: {
                const auto a = sigma.find(x.letter);
                for (std::size_t i = 0; i < n; ++i) t[i][i + 1] = a && w[i] == *a;
                break;
            }
            case K::Union: {
                const auto p = eval(x.children[0]);
                const auto q = eval(x.children[1]);
                for (std::size_t i = 0; i <= n; ++i) {
                    for (std::size_t j = i; j <= n; ++j) t[i][j] = p[i][j] || q[i][j];
                }
                break;
            }
            case K::Concat: {
                const auto p = eval(x.children[0]);
                const auto q = eval(x.children[1]);
                for (std::size_t i = 0; i <= n; ++i) {
                    for (std::size_t j = i; j <= n; ++j) {
                        for (std::size_t k = i; k <= j && !t[i][j]; ++k) t[i][j] = p[i][k] && q[k][j];
                    }
                }
                break;
            }
            case K::Plus:
            case K::Star: {
                const auto p = eval(x.children[0]);
                for (std::size_t len = 0; len <= n; ++len) {
                    for (std::size_t i = 0; i + len <= n; ++i) {
                        const std::size_t j = i + len;
                        bool v = p[i][j];
                        for (std::size_t k = i + 1; k < j && !v; ++k) v = p[i][k] && t[k][j];
                        t[i][j] = v;
                    }
                }
                if (x.kind == K::Star) {
                    for (std::size_t i = 0; i <= n; ++i) t[i][i] = 1;
                }
                break;
            }
        }
        return t;
    };
    return eval(r)[0][n] != 0;
}

/// Number of Myhill-Nerode classes among reachable states, by table filling.
inline std::size_t minimal_size(const Dfa& d) {
    const std::size_t n = d.size();
    const auto m = static_cast<Letter>(d.letter_count());
    std::vector<char> reach(n, 0);
    std::vector<StateId> stack{d.initial()};
    reach[d.initial()] = 1;
    while (!stack.empty()) {
        const auto q = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < m; ++a) {
            const auto r = d.next(q, a);
            if (!reach[r]) {
                reach[r] = 1;
                stack.push_back(r);
            }
        }
    }
    std::vector<std::vector<char>> distinct(n, std::vector<char>(n, 0));
    for (StateId p = 0; p < n; ++p) {
        for (StateId q = 0; q < n; ++q) distinct[p][q] = d.is_final(p) != d.is_final(q);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (StateId p = 0; p < n; ++p) {
            for (StateId q = 0; q < n; ++q) {
                if (distinct[p][q]) continue;
                for (Letter a = 0; a < m; ++a) {
                    if (distinct[d.next(p, a)][d.next(q, a)]) {
                        distinct[p][q] = distinct[q][p] = changed = true;
                        break;
                    }
                }
            }
        }
    }
    std::size_t classes = 0;
    std::vector<char> seen(n, 0);
    for (StateId p = 0; p < n; ++p) {
        if (!reach[p] || seen[p]) continue;
        ++classes;
        for (StateId q = p; q < n; ++q) {
            if (reach[q] && !distinct[p][q]) seen[q] = 1;
        }
    }
    return classes;
}

inline std::size_t reachable_count(const Dfa& d) {
    std::set<StateId> seen{d.initial()};
    std::vector<StateId> stack{d.initial()};
    while (!stack.empty()) {
        const auto q = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < static_cast<Letter>(d.letter_count()); ++a) {
            if (seen.insert(d.next(q, a)).second) stack.push_back(d.next(q, a));
        }
    }
    return seen.size();
}

/// Faces of a rotation given as explicit per-vertex dart cycles; darts 2e and
/// 2e+1 are the two ends of edge e.
inline std::size_t count_faces(std::size_t darts, const std::vector<std::vector<std::uint32_t>>& rot) {
    std::vector<std::uint32_t> succ(darts);
    for (const auto& c : rot) {
        for (std::size_t i = 0; i < c.size(); ++i) succ[c[i]] = c[(i + 1) % c.size()];
    }
    std::vector<char> seen(darts, 0);
    std::size_t faces = 0;
    for (std::uint32_t d = 0; d < darts; ++d) {
        if (seen[d]) continue;
        ++faces;
        for (auto x = d; !seen[x]; x = succ[x ^ 1u]) seen[x] = 1;
    }
    return faces;
}

/// Minimum genus of a connected graph by trying every rotation.
inline std::int64_t brute_genus(const autgenus::MultiGraph& g) {
    if (g.edge_count() == 0) return 0;
    std::vector<std::vector<std::uint32_t>> rot(g.vertex_count);
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        rot[g.edges[e].first].push_back(2 * e);
        rot[g.edges[e].second].push_back(2 * e + 1);
    }
    std::size_t best_faces = 0;
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (v == rot.size()) {
            best_faces = std::max(best_faces, count_faces(2 * g.edge_count(), rot));
            return;
        }
        auto& c = rot[v];
        if (c.size() <= 2) {
            go(v + 1);
            return;
        }
        std::sort(c.begin() + 1, c.end());
        do {
            go(v + 1);
        } while (std::next_permutation(c.begin() + 1, c.end()));
    };
    go(0);
    const auto chi = static_cast<std::int64_t>(g.vertex_count) - static_cast<std::int64_t>(g.edge_count()) +
                     static_cast<std::int64_t>(best_faces);
    return (2 - chi) / 2;
}

inline autgenus::MultiGraph complete_graph(std::size_t n) {
    autgenus::MultiGraph g;
    g.vertex_count = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    }
    return g;
}

inline autgenus::MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
    autgenus::MultiGraph g;
    g.vertex_count = a + b;
    for (std::uint32_t i = 0; i < a; ++i) {
        for (std::uint32_t j = 0; j < b; ++j) g.edges.emplace_back(i, static_cast<std::uint32_t>(a + j));
    }
    return g;
}

/// Random complete DFA whose states are all reachable from 0: state q > 0
/// first receives a transition from some earlier state through a slot no
/// other state has claimed.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    Dfa d(autgenus::Alphabet::of_size(m), n, 0);
    std::uniform_int_distribution<StateId> any(0, static_cast<StateId>(n - 1));
    for (StateId q = 0; q < n; ++q) {
        for (Letter a = 0; a < static_cast<Letter>(m); ++a) d.set_next(q, a, any(rng));
        d.set_final(q, rng() % 2 == 0);
    }
    std::vector<char> claimed(n * m, 0);
    for (StateId q = 1; q < n; ++q) {
        std::vector<std::size_t> free;
        for (std::size_t slot = 0; slot < q * m; ++slot) {
            if (!claimed[slot]) free.push_back(slot);
        }
        const auto slot = free[rng() % free.size()];
        claimed[slot] = 1;
        d.set_next(static_cast<StateId>(slot / m), static_cast<Letter>(slot % m), q);
    }
    return d;
}

/// Fixtures: two six-state planar automata for the weight-0-mod-5 language
/// that are not isomorphic. Both split one state of the K5 automaton into
/// two copies and send a single incoming transition to the copy.
inline Dfa k5_split(StateId split, StateId from, Letter via) {
    Dfa d(autgenus::Alphabet({"a", "b"}), 6, 0);
    for (StateId i = 0; i < 5; ++i) {
        d.set_next(i, 0, (i + 1) % 5);
        d.set_next(i, 1, (i + 2) % 5);
    }
    d.set_next(5, 0, (split + 1) % 5);
    d.set_next(5, 1, (split + 2) % 5);
    d.set_next(from, via, 5);
    d.set_final(0);
    if (split == 0) d.set_final(5);
    return d;
}

inline Dfa k5_pair_first() { return k5_split(0, 4, 0); }
inline Dfa k5_pair_second() { return k5_split(1, 0, 0); }

}  // namespace oracle
