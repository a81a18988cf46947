#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "autgenus/automata.hpp"
#include "autgenus/embedding.hpp"

namespace autgenus {

/// Words over {a, b} whose weight is 0 mod 5, a weighing 1 and b weighing 2.
/// The underlying graph is K5.
Dfa k5_weight_automaton();

/// Six-state planar automaton for the language of k5_weight_automaton():
/// state 0 is split in two and the a-transition out of 4 goes to the copy.
Dfa k5_planar_equivalent();

/// Over x1..xn: words using at most n-1 distinct letters. States are s0 = 0,
/// s_i = i and a trash state n+1 without loops.
Nfa distinct_letters_nfa(std::size_t n);

/// Two planar permutation automata over {a, b, c, d} with initial and only
/// final state 0. A_m moves its counter by (+1, 0, +1, +1) on (a, b, c, d);
/// B_n by (0, +1, +1, -1). Their union automaton has m*n states and neither
/// loops nor 2-cycles.
std::pair<Dfa, Dfa> union_family(std::size_t m, std::size_t n);

/// Minimal automaton of L(A_3) u L(B_n): size 3n.
Dfa hierarchy_automaton(std::size_t n);

/// One-letter lasso: states 0..preperiod+period-1, the last one stepping
/// back to `preperiod`.
Dfa unary_automaton(std::size_t preperiod, std::size_t period, const std::vector<StateId>& finals);

enum class TorusLetters { Two, Three, FourWithLoops };

struct TorusGrid {
    Dfa dfa;
    RotationSystem witness;  // the flat square (or triangulated) torus
};

/// n*n states (i, j) -> id i*n + j; a: (i+1, j), b: (i, j+1), c: (i+1, j+1),
/// d: loop.
TorusGrid torus_grid(std::size_t n, TorusLetters letters);

}  // namespace autgenus
