#include "autgenus/families.hpp"

#include <array>

#include "autgenus/error.hpp"

namespace autgenus {

Dfa k5_weight_automaton() {
    Dfa d(Alphabet({"a", "b"}), 5, 0);
    for (StateId i = 0; i < 5; ++i) {
        d.set_next(i, 0, (i + 1) % 5);
        d.set_next(i, 1, (i + 2) % 5);
    }
    d.set_final(0);
    return d;
}

Dfa k5_planar_equivalent() {
    // State 5 is a second copy of state 0. Only 4 -a-> 0 is redirected; this
    // breaks every K5 subdivision while keeping both copies reachable.
    Dfa d(Alphabet({"a", "b"}), 6, 0);
    for (StateId i = 0; i < 5; ++i) {
        d.set_next(i, 0, (i + 1) % 5);
        d.set_next(i, 1, (i + 2) % 5);
    }
    d.set_next(4, 0, 5);
    d.set_next(5, 0, 1);
    d.set_next(5, 1, 2);
    d.set_final(0);
    d.set_final(5);
    return d;
}

Nfa distinct_letters_nfa(std::size_t n) {
    if (n < 2) throw Error("distinct_letters_nfa: n must be at least 2");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    Nfa nfa;
    nfa.alphabet = Alphabet(std::move(names));
    nfa.states = n + 2;
    nfa.initial = {0};
    const auto trash = static_cast<StateId>(n + 1);
    for (StateId i = 1; i <= n; ++i) {
        nfa.finals.push_back(i);
        for (Letter x = 0; x < static_cast<Letter>(n); ++x) {
            if (static_cast<StateId>(x) + 1 == i) {
                nfa.transitions.push_back({i, x, trash});
            } else {
                nfa.transitions.push_back({0, x, i});
                nfa.transitions.push_back({i, x, i});
            }
        }
    }
    nfa.normalize();
    return nfa;
}

namespace {

// (A shift, B shift) per letter a, b, c, d. The four vectors are pairwise
// distinct and no two sum to zero, so the product has no parallel
// transitions and no 2-cycles; none is (0, 0), so it has no loops.
constexpr std::array<std::array<int, 2>, 4> kShifts{{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};

Dfa cyclic_counter(std::size_t size, std::size_t coordinate) {
    Dfa d(Alphabet({"a", "b", "c", "d"}), size, 0);
    const auto n = static_cast<long>(size);
    for (long i = 0; i < n; ++i) {
        for (Letter x = 0; x < 4; ++x) {
            const long to = ((i + kShifts[static_cast<std::size_t>(x)][coordinate]) % n + n) % n;
            d.set_next(static_cast<StateId>(i), x, static_cast<StateId>(to));
        }
    }
    d.set_final(0);
    return d;
}

}  // namespace

std::pair<Dfa, Dfa> union_family(std::size_t m, std::size_t n) {
    if (m < 3 || n < 3) throw Error("union_family: both sizes must be at least 3");
    return {cyclic_counter(m, 0), cyclic_counter(n, 1)};
}

Dfa hierarchy_automaton(std::size_t n) {
    if (n < 3) throw Error("hierarchy_automaton: n must be at least 3");
    auto [a, b] = union_family(3, n);
    return minimize(union_product(a, b)).dfa;
}

Dfa unary_automaton(std::size_t preperiod, std::size_t period, const std::vector<StateId>& finals) {
    if (period < 1) throw Error("unary_automaton: period must be at least 1");
    const std::size_t size = preperiod + period;
    Dfa d(Alphabet({"a"}), size, 0);
    for (StateId q = 0; q + 1 < size; ++q) d.set_next(q, 0, q + 1);
    d.set_next(static_cast<StateId>(size - 1), 0, static_cast<StateId>(preperiod));
    for (auto f : finals) {
        if (f >= size) throw Error("unary_automaton: final state " + std::to_string(f) + " out of range");
        d.set_final(f);
    }
    return d;
}

TorusGrid torus_grid(std::size_t n, TorusLetters letters) {
    if (n < 3) throw Error("torus_grid: n must be at least 3");
    const std::size_t m = letters == TorusLetters::Two ? 2 : letters == TorusLetters::Three ? 3 : 4;
    const std::vector<std::string> all{"a", "b", "c", "d"};
    Dfa d(Alphabet(std::vector<std::string>(all.begin(), all.begin() + static_cast<long>(m))), n * n, 0);
    auto id = [n](std::size_t i, std::size_t j) { return static_cast<StateId>((i % n) * n + (j % n)); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d.set_next(id(i, j), 0, id(i + 1, j));
            d.set_next(id(i, j), 1, id(i, j + 1));
            if (m >= 3) d.set_next(id(i, j), 2, id(i + 1, j + 1));
            if (m == 4) d.set_next(id(i, j), 3, id(i, j));
        }
    }
    d.set_final(0);

    // Edge ids follow Dfa::transitions(): edge (q, x) has id q*m + x. Around
    // each vertex, counterclockwise: east, north-east, north, west,
    // south-west, south; loops go last as 1-gons.
    auto out = [m](StateId q, Letter x) { return dart_of(static_cast<EdgeId>(q * m + static_cast<std::size_t>(x)), 0); };
    auto in = [m](StateId q, Letter x) { return dart_of(static_cast<EdgeId>(q * m + static_cast<std::size_t>(x)), 1); };
    std::vector<std::vector<Dart>> rot(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto& r = rot[id(i, j)];
            r.push_back(out(id(i, j), 0));
            if (m >= 3) r.push_back(out(id(i, j), 2));
            r.push_back(out(id(i, j), 1));
            r.push_back(in(id(i + n - 1, j), 0));
            if (m >= 3) r.push_back(in(id(i + n - 1, j + n - 1), 2));
            r.push_back(in(id(i, j + n - 1), 1));
            if (m == 4) {
                r.push_back(out(id(i, j), 3));
                r.push_back(in(id(i, j), 3));
            }
        }
    }
    auto graph = underlying_graph(d).graph;
    return {std::move(d), RotationSystem(std::move(graph), std::move(rot))};
}

}  // namespace autgenus
