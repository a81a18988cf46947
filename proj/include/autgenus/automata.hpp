#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autgenus {

using StateId = std::uint32_t;
using Letter = std::int32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr Letter kEpsilon = -1;
inline constexpr std::string_view kEpsilonName = "eps";

/// Ordered list of distinct letter names. Letters are addressed by index.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    /// Letters "a", "b", ... for small sizes, "x1".."xn" beyond 26.
    static Alphabet of_size(std::size_t m);

    std::size_t size() const { return letters_.size(); }
    const std::string& name(Letter a) const { return letters_.at(static_cast<std::size_t>(a)); }
    std::optional<Letter> find(std::string_view name) const;
    const std::vector<std::string>& letters() const { return letters_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> letters_;
};

struct Transition {
    StateId src = 0;
    Letter label = 0;
    StateId dst = 0;

    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic automaton, possibly with epsilon transitions and several
/// initial states. Sets are kept sorted and duplicate-free.
struct Nfa {
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<StateId> initial;
    std::vector<StateId> finals;
    std::vector<Transition> transitions;

    /// Sorts and deduplicates the sets; throws Error on out-of-range ids.
    void normalize();
    bool has_epsilon() const;
    bool is_final(StateId q) const;

    bool operator==(const Nfa&) const = default;
};

/// Complete deterministic automaton: next(q, a) is defined everywhere.
class Dfa {
public:
    Dfa() = default;
    Dfa(Alphabet alphabet, std::size_t states, StateId initial);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return accepting_.size(); }
    std::size_t letter_count() const { return alphabet_.size(); }
    StateId initial() const { return initial_; }

    StateId next(StateId q, Letter a) const { return delta_[q * letter_count() + static_cast<std::size_t>(a)]; }
    void set_next(StateId q, Letter a, StateId to);

    bool is_final(StateId q) const { return accepting_[q] != 0; }
    void set_final(StateId q, bool f = true) { accepting_.at(q) = f ? 1 : 0; }
    std::vector<StateId> finals() const;

    bool accepts(std::span<const Letter> word) const;

    /// Transitions in (state, letter) order; this order defines edge ids of
    /// the underlying graph.
    std::vector<Transition> transitions() const;

    Nfa to_nfa() const;

    bool operator==(const Dfa&) const = default;

private:
    Alphabet alphabet_;
    StateId initial_ = 0;
    std::vector<std::uint8_t> accepting_;
    std::vector<StateId> delta_;
};

/// Deterministic automaton whose transition function may be undefined
/// (kNoState) on some pairs.
struct PartialDfa {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::uint8_t> accepting;
    std::vector<StateId> delta;  // states * |alphabet|, kNoState = undefined

    PartialDfa() = default;
    PartialDfa(Alphabet a, std::size_t n, StateId init);

    StateId next(StateId q, Letter a) const { return delta[q * alphabet.size() + static_cast<std::size_t>(a)]; }
    void set_next(StateId q, Letter a, StateId to) { delta[q * alphabet.size() + static_cast<std::size_t>(a)] = to; }
    bool is_complete() const;
    Nfa to_nfa() const;
};

/// Per-state trash sinks keep the genus (each new sink sits in a face next to
/// its deficient state); a shared sink is smaller.
enum class CompletionMode { PerStateTrash, SharedTrash };

struct CycleStats {
    std::size_t z1 = 0;
    std::size_t z2 = 0;
    bool loop_free = true;
    bool bigon_free = true;
};

/// rho[q] is the class of q in the minimal automaton; kNoState for states
/// that are not reachable from the initial state.
struct MinimalMorphism {
    std::vector<StateId> rho;
};

struct Minimized {
    Dfa dfa;
    MinimalMorphism morphism;
};

std::optional<Dfa> as_dfa(const Nfa& nfa);
std::optional<PartialDfa> as_partial_dfa(const Nfa& nfa);

/// Word acceptance by direct simulation with epsilon closure.
bool accepts(const Nfa& nfa, std::span<const Letter> word);

/// Accessible subset construction, states numbered in BFS order. Subsets
/// only hold states from which a final state is reachable, so the empty set
/// is the single trash state. Throws Error on epsilon transitions.
Dfa determinize(const Nfa& nfa);
Minimized minimize(const Dfa& dfa);
Dfa complete(const PartialDfa& dfa, CompletionMode mode = CompletionMode::PerStateTrash);
Dfa trim(const Dfa& dfa);
Dfa union_product(const Dfa& a, const Dfa& b);

/// BFS renumbering from the initial state, letters in alphabet order.
/// Unreachable states are dropped.
Dfa canonical_form(const Dfa& dfa);
bool isomorphic(const Dfa& a, const Dfa& b);

bool equivalent(const Dfa& a, const Dfa& b);
bool equivalent(const Nfa& a, const Nfa& b);

CycleStats cycle_stats(const Dfa& dfa);
MinimalMorphism minimal_morphism(const Dfa& dfa);

/// Checks the commuting-square, surjectivity and finality conditions of a
/// morphism from `dfa` onto `minimal`.
bool is_morphism(const Dfa& dfa, const Dfa& minimal, const MinimalMorphism& m);

}  // namespace autgenus
