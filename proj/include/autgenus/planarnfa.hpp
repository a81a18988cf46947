#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autgenus/automata.hpp"
#include "autgenus/embedding.hpp"

namespace autgenus {

struct Regex {
    enum class Kind { Empty, Letter, Union, Concat, Plus, Star };

    Kind kind = Kind::Empty;
    std::string letter;           // Letter only
    std::vector<Regex> children;  // two for Union/Concat, one for Plus/Star

    static Regex empty() { return {}; }
    static Regex symbol(std::string name) { return {Kind::Letter, std::move(name), {}}; }
    static Regex alt(Regex r, Regex s);
    static Regex cat(Regex r, Regex s);
    static Regex plus(Regex r);
    static Regex star(Regex r);

    std::size_t depth() const;
    bool has_star() const;

    bool operator==(const Regex&) const = default;
};

/// Syntax: single-character letters (a-z, A-Z), `0` for the empty language,
/// `+` union, `.` or juxtaposition for concatenation, postfix `^+` and `^*`
/// (bare `*` is accepted too), parentheses. Precedence: postfix, concat,
/// union; binary operators associate to the left. Throws Error with the
/// offending position.
Regex parse_regex(std::string_view text);

/// Canonical text; parse_regex(to_string(r)) == r.
std::string to_string(const Regex& r);

/// Letters in order of first occurrence.
std::vector<std::string> regex_letters(const Regex& r);

/// Alphabet of the regex letters; {a} when there are none.
Alphabet regex_alphabet(const Regex& r);

/// Textbook construction with epsilon transitions, one fragment per node.
/// Used to cross-check build_planar_nfa().
Nfa thompson_nfa(const Regex& r, const Alphabet& alphabet = {});

/// An automaton with one initial and one final state together with a
/// genus-0 rotation of its underlying graph (edge i = nfa.transitions[i]).
/// When the language contains the empty word the initial state is final as
/// well, which is the only way initial_final can be set.
struct PlanarNfa {
    Nfa nfa;
    RotationSystem rotation;
    StateId initial = 0;
    StateId final = 0;
    bool initial_final = false;
};

/// Recursive construction: union, concatenation and plus are glued with
/// epsilon edges placed in a common face, which are contracted right away.
/// Star is rewritten as plus of an epsilon-free core; a nullable top level
/// makes the initial state accepting. If `alphabet` is empty the letters of
/// the regex are used in order of appearance.
PlanarNfa build_planar_nfa(const Regex& r, const Alphabet& alphabet = {});

/// Contracts epsilon transition `t` (an index into nfa.transitions): its
/// endpoints merge, the two rotations are spliced at the removed darts and
/// epsilon edges that turn into loops are dropped. Throws Error if t is not
/// an epsilon edge or is a loop. The language is kept when the source has no
/// other outgoing or the target no other incoming transition; other
/// contractions are carried out but may enlarge the language.
PlanarNfa epsilon_remove(const PlanarNfa& p, std::size_t t);

/// Checks the one-initial/one-final shape and that the rotation matches the
/// automaton and has genus 0 on every component.
bool is_well_formed(const PlanarNfa& p);

}  // namespace autgenus
