#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "autgenus/automata.hpp"
#include "autgenus/embedding.hpp"
#include "autgenus/rational.hpp"

namespace autgenus {

/// Upper bound m*n and, when the minimal automaton has no loops and no
/// 2-cycles over an alphabet of at least four letters, the lower bound
/// ceil(1 + (m - 3) n / 6).
struct BoundReport {
    std::size_t m = 0;
    std::size_t n = 0;  // size of the minimal automaton
    std::int64_t upper = 0;
    std::optional<std::int64_t> lower;
    std::optional<Rational> lower_exact;
    bool alphabet_ok = false;  // m >= 4
    bool loop_free = false;
    bool bigon_free = false;
};

enum class LowerSource { Trivial, Certified };

struct GenusBracket {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    LowerSource lo_source = LowerSource::Trivial;
    Dfa representative;       // automaton realizing hi
    RotationSystem witness;   // embedding of representative with genus hi
    std::size_t candidates = 0;

    bool exact() const { return lo == hi; }
};

/// 1 + sum_k (k(m-1) - 2m) / (4m) * f_k. Equals the surface genus of the
/// embedding for complete deterministic automata over m letters.
Rational genus_formula(const FaceProfile& profile, std::int64_t m);

std::int64_t upper_bound(std::int64_t m, std::int64_t n);

BoundReport certified_lower_bound(const Dfa& dfa);

/// 1 + ((m - 3) / (6m) - eps) * m * n. Meaningful only for n beyond an
/// unspecified threshold depending on eps.
Rational growth_bound(std::int64_t m, std::int64_t n, const Rational& eps);

/// ceil(1 + (n/4 - 1) 2^(n-1)), a lower bound on the genus of the powerset
/// automaton of distinct_letters_nfa(n).
std::int64_t blowup_bound(std::int64_t n);

GenusBracket language_genus(const Dfa& dfa, std::uint64_t budget = kDefaultBudget);

/// Structure of determinize(distinct_letters_nfa(n)) after loop removal:
/// level(q) = n - (#loops at q) is the size of the subset q stands for.
struct BlowupReport {
    std::size_t n = 0;
    bool simple = false;          // no parallel edges once loops are removed
    bool graded = false;          // every non-loop edge lowers the level by one
    std::vector<std::size_t> level;
    MultiGraph loopless;
};

/// Throws Error when the automaton is not of the expected family.
BlowupReport blowup_face_constraints(const Dfa& det);

struct FaceConstraintCheck {
    bool no_bigons = false;      // f_2 = 0
    bool no_odd_faces = false;   // f_{2k+1} = 0
    bool no_long_faces = false;  // f_{2k} = 0 for k >= n
};

FaceConstraintCheck check_face_constraints(const BlowupReport& report, const FaceProfile& profile);

}  // namespace autgenus
