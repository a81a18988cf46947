#include <doctest.h>

#include <random>

#include "autgenus/automata.hpp"
#include "autgenus/error.hpp"
#include "autgenus/families.hpp"
#include "support/oracle.hpp"

using namespace autgenus;

namespace {

Dfa counter(std::size_t k) { return unary_automaton(0, k, {0}); }

Dfa single_state_loops(std::size_t m) {
    Dfa d(Alphabet::of_size(m), 1, 0);
    for (Letter a = 0; a < static_cast<Letter>(m); ++a) d.set_next(0, a, 0);
    return d;
}

std::vector<Dfa> corpus() {
    std::vector<Dfa> out{k5_weight_automaton(), k5_planar_equivalent(), counter(3), counter(5), hierarchy_automaton(3),
                         torus_grid(3, TorusLetters::Two).dfa, single_state_loops(2)};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) out.push_back(oracle::random_dfa(rng, 2 + i % 6, 1 + i % 3));
    return out;
}

}  // namespace

TEST_CASE("alphabet rejects duplicates and the epsilon name") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
    CHECK_THROWS_AS(Alphabet({"eps"}), Error);
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);
    CHECK(Alphabet::of_size(3).letters() == std::vector<std::string>{"a", "b", "c"});
    CHECK(Alphabet::of_size(30).name(29) == "x30");
}

TEST_CASE("nfa normalize sorts, dedups and checks ranges") {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.states = 2;
    n.initial = {1, 0, 1};
    n.finals = {1};
    n.transitions = {{1, 0, 0}, {0, 0, 1}, {0, 0, 1}};
    n.normalize();
    CHECK(n.initial == std::vector<StateId>{0, 1});
    CHECK(n.transitions.size() == 2);
    n.transitions.push_back({0, 0, 5});
    CHECK_THROWS_AS(n.normalize(), Error);
}

TEST_CASE("determinize: distinct letters n=4 gives 16 states") {
    const auto d = determinize(distinct_letters_nfa(4));
    CHECK(d.size() == 16);
    CHECK(oracle::minimal_size(d) == 16);
}

TEST_CASE("determinize: a dfa seen as an nfa comes back isomorphic") {
    for (const auto& d : {k5_weight_automaton(), counter(4), hierarchy_automaton(3)}) CHECK(isomorphic(determinize(d.to_nfa()), d));
}

TEST_CASE("determinize: two-state a.a* example") {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.states = 2;
    n.initial = {0};
    n.finals = {1};
    n.transitions = {{0, 0, 0}, {0, 0, 1}};
    n.normalize();
    const auto d = determinize(n);
    CHECK(d.size() == 2);  // {0} and {0,1}
    CHECK_FALSE(d.accepts(std::vector<Letter>{}));
    for (std::size_t k = 1; k < 6; ++k) CHECK(d.accepts(std::vector<Letter>(k, 0)));
}

TEST_CASE("determinize rejects epsilon transitions") {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.states = 2;
    n.initial = {0};
    n.finals = {1};
    n.transitions = {{0, kEpsilon, 1}};
    CHECK_THROWS_AS(determinize(n), Error);
}

TEST_CASE("determinize is idempotent up to isomorphism") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Nfa n;
        n.alphabet = Alphabet::of_size(2);
        n.states = 4;
        n.initial = {0};
        n.finals = {static_cast<StateId>(rng() % 4)};
        for (int t = 0; t < 7; ++t) n.transitions.push_back({static_cast<StateId>(rng() % 4), static_cast<Letter>(rng() % 2), static_cast<StateId>(rng() % 4)});
        n.normalize();
        const auto d = determinize(n);
        CHECK(isomorphic(determinize(d.to_nfa()), d));
        CHECK(oracle::agree([&](const oracle::Word& w) { return oracle::nfa_accepts(n, w); },
                            [&](const oracle::Word& w) { return oracle::dfa_accepts(d, w); }, 2, 8));
    }
}

TEST_CASE("minimize: examples") {
    const auto det = determinize(distinct_letters_nfa(4));
    CHECK(isomorphic(minimize(det).dfa, det));
    CHECK(isomorphic(minimize(k5_weight_automaton()).dfa, k5_weight_automaton()));
    CHECK(isomorphic(minimize(k5_planar_equivalent()).dfa, k5_weight_automaton()));
}

TEST_CASE("minimize agrees with the table-filling oracle and is idempotent") {
    for (const auto& d : corpus()) {
        const auto m = minimize(d);
        CHECK(m.dfa.size() == oracle::minimal_size(d));
        CHECK(isomorphic(minimize(m.dfa).dfa, m.dfa));
        CHECK(is_morphism(trim(d), m.dfa, minimal_morphism(trim(d))));
        CHECK(oracle::agree([&](const oracle::Word& w) { return oracle::dfa_accepts(d, w); },
                            [&](const oracle::Word& w) { return oracle::dfa_accepts(m.dfa, w); }, d.letter_count(), 7));
    }
}

TEST_CASE("minimal morphism: square commutes, identity on minimal input") {
    const auto k5 = k5_weight_automaton();
    const auto id = minimal_morphism(k5);
    for (StateId q = 0; q < 5; ++q) CHECK(id.rho[q] == q);

    const auto split = k5_planar_equivalent();
    const auto rho = minimal_morphism(split);
    const auto min = minimize(split).dfa;
    CHECK(is_morphism(split, min, rho));
    CHECK(rho.rho[5] == rho.rho[0]);
    for (StateId q = 0; q < split.size(); ++q) {
        for (Letter a = 0; a < 2; ++a) CHECK(rho.rho[split.next(q, a)] == min.next(rho.rho[q], a));
    }
}

TEST_CASE("complete: examples") {
    PartialDfa p(Alphabet({"a", "b"}), 1, 0);
    p.set_next(0, 0, 0);
    const auto per_state = complete(p, CompletionMode::PerStateTrash);
    const auto shared = complete(p, CompletionMode::SharedTrash);
    CHECK(per_state.size() == 2);
    CHECK(per_state.next(0, 1) == 1);
    CHECK(per_state.next(1, 0) == 1);
    CHECK(per_state.next(1, 1) == 1);
    CHECK(per_state == shared);

    PartialDfa full(Alphabet({"a"}), 2, 0);
    full.set_next(0, 0, 1);
    full.set_next(1, 0, 0);
    CHECK(complete(full).size() == 2);
}

TEST_CASE("complete: per-state trash sinks all map to one minimal trash") {
    PartialDfa p(Alphabet({"a", "b"}), 3, 0);
    p.set_next(0, 0, 1);
    p.set_next(1, 1, 2);
    p.set_next(2, 0, 0);
    p.accepting[2] = 1;
    const auto d = complete(p);
    CHECK(d.size() == 6);
    const auto rho = minimal_morphism(d);
    CHECK(rho.rho[3] == rho.rho[4]);
    CHECK(rho.rho[4] == rho.rho[5]);
    CHECK(complete(p, CompletionMode::SharedTrash).size() == 4);
    CHECK(equivalent(d, complete(p, CompletionMode::SharedTrash)));
}

TEST_CASE("trim removes unreachable states") {
    const auto k5 = k5_weight_automaton();
    CHECK(trim(k5) == k5);
    Dfa d(k5.alphabet(), 6, 0);
    for (StateId q = 0; q < 5; ++q) {
        for (Letter a = 0; a < 2; ++a) d.set_next(q, a, k5.next(q, a));
    }
    d.set_next(5, 0, 5);
    d.set_next(5, 1, 5);
    d.set_final(0);
    CHECK(trim(d).size() == oracle::reachable_count(d));
    CHECK(trim(d).size() == 5);
}

TEST_CASE("union product: counters and idempotence") {
    const auto u = union_product(counter(3), counter(5));
    CHECK(u.size() == 15);
    CHECK(minimize(u).dfa.size() == 15);
    CHECK(oracle::minimal_size(u) == 15);
    const auto k5 = k5_weight_automaton();
    CHECK(isomorphic(minimize(union_product(k5, k5)).dfa, minimize(k5).dfa));
    CHECK_THROWS_AS(union_product(counter(3), k5), Error);
}

TEST_CASE("union product language is the union") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        const auto a = oracle::random_dfa(rng, 3, 2);
        const auto b = oracle::random_dfa(rng, 4, 2);
        const auto u = union_product(a, b);
        CHECK(oracle::agree([&](const oracle::Word& w) { return oracle::dfa_accepts(a, w) || oracle::dfa_accepts(b, w); },
                            [&](const oracle::Word& w) { return oracle::dfa_accepts(u, w); }, 2, 8));
    }
}

TEST_CASE("equivalent: examples") {
    CHECK(equivalent(counter(3), counter(3)));
    CHECK(equivalent(k5_weight_automaton(), k5_planar_equivalent()));
    CHECK_FALSE(equivalent(counter(3), counter(5)));
    CHECK(counter(3).accepts(std::vector<Letter>(3, 0)));
    CHECK_FALSE(counter(5).accepts(std::vector<Letter>(3, 0)));
    CHECK(oracle::agree([](const oracle::Word& w) { return oracle::dfa_accepts(k5_weight_automaton(), w); },
                        [](const oracle::Word& w) { return oracle::dfa_accepts(k5_planar_equivalent(), w); }, 2, 12));
}

TEST_CASE("equivalence matches bounded enumeration on random pairs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const auto a = oracle::random_dfa(rng, 3, 2);
        const auto b = oracle::random_dfa(rng, 3, 2);
        // 3-state automata are separated by words of length < 3 + 3
        const bool same = oracle::agree([&](const oracle::Word& w) { return oracle::dfa_accepts(a, w); },
                                        [&](const oracle::Word& w) { return oracle::dfa_accepts(b, w); }, 2, 6);
        CHECK(equivalent(a, b) == same);
        if (same) CHECK(isomorphic(minimize(a).dfa, minimize(b).dfa));
    }
}

TEST_CASE("cycle stats: examples") {
    const auto k5 = cycle_stats(k5_weight_automaton());
    CHECK(k5.z1 == 0);
    CHECK(k5.z2 == 0);
    CHECK(k5.loop_free);
    CHECK(k5.bigon_free);
    CHECK(cycle_stats(torus_grid(3, TorusLetters::FourWithLoops).dfa).z1 == 9);
    CHECK(cycle_stats(torus_grid(4, TorusLetters::FourWithLoops).dfa).z1 == 16);
    CHECK(cycle_stats(single_state_loops(3)).z1 == 3);
}

TEST_CASE("cycle stats: parallel pairs and directed 2-cycles") {
    Dfa d(Alphabet({"a", "b", "c"}), 2, 0);
    // 0 -a,b,c-> 1 : three parallel transitions, three unordered pairs
    for (Letter a = 0; a < 3; ++a) d.set_next(0, a, 1);
    // 1 -a-> 0 closes 2-cycles with each of them
    d.set_next(1, 0, 0);
    d.set_next(1, 1, 1);
    d.set_next(1, 2, 1);
    const auto s = cycle_stats(d);
    CHECK(s.z1 == 2);
    CHECK(s.z2 == 3 + 3);
    CHECK_FALSE(s.bigon_free);
}

TEST_CASE("loop and bigon freedom transfer from the minimal automaton to the trimmed one") {
    // A parallel pair may fold into loops in the quotient, so bigon freedom
    // transfers together with loop freedom.
    std::size_t both = 0;
    for (const auto& d : corpus()) {
        const auto min = cycle_stats(minimize(d).dfa);
        const auto full = cycle_stats(trim(d));
        if (min.loop_free) CHECK(full.loop_free);
        if (min.loop_free && min.bigon_free) {
            ++both;
            CHECK(full.bigon_free);
        }
    }
    CHECK(both > 0);
}

TEST_CASE("bigon freedom alone does not transfer") {
    // 0 -a,b-> 1 is a parallel pair, but 0 and 1 are equivalent
    Dfa d(Alphabet({"a", "b"}), 2, 0);
    d.set_next(0, 0, 1);
    d.set_next(0, 1, 1);
    d.set_next(1, 0, 1);
    d.set_next(1, 1, 1);
    CHECK(cycle_stats(minimize(d).dfa).bigon_free);
    CHECK_FALSE(cycle_stats(minimize(d).dfa).loop_free);
    CHECK_FALSE(cycle_stats(d).bigon_free);
}

TEST_CASE("nfa equivalence handles epsilon transitions") {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.states = 3;
    n.initial = {0};
    n.finals = {2};
    n.transitions = {{0, kEpsilon, 1}, {1, 0, 2}, {2, kEpsilon, 0}};
    n.normalize();
    CHECK(equivalent(n, unary_automaton(1, 1, {1}).to_nfa()));
    for (std::size_t k = 0; k < 5; ++k) CHECK(accepts(n, std::vector<Letter>(k, 0)) == (k >= 1));
}
