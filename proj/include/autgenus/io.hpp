#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autgenus/automata.hpp"
#include "autgenus/embedding.hpp"

namespace autgenus {

using Json = nlohmann::json;

/// Automaton renumbered breadth-first from the initial states (successors in
/// label, then target order; unreachable states keep their relative order at
/// the end) with sorted transitions. state_map[old] = new,
/// edge_map[old transition index] = new index.
struct Canonical {
    Nfa nfa;
    std::vector<StateId> state_map;
    std::vector<EdgeId> edge_map;
};

Canonical canonicalize(const Nfa& nfa);

/// Rotation of `rs` transported along a canonicalize() result.
RotationSystem transport(const RotationSystem& rs, const Canonical& c);

/// Schema: {"alphabet": [..], "finals": [..], "initial": i or [..],
/// "states": n, "transitions": [[src, "label", dst], ..]} with "eps" as the
/// epsilon label. Throws Error naming the offending field.
Nfa automaton_from_json(const Json& j);
Nfa read_automaton(const std::string& text);

/// Canonical text: keys sorted, canonicalize() applied, one transition per
/// line. Byte-stable under read/write round trips.
std::string write_automaton(const Nfa& nfa);
std::string write_automaton(const Dfa& dfa);
Json automaton_to_json(const Nfa& nfa);

/// {"rotation": [[dart, ..] per state]}; dart 2t sits at the source of
/// transition t, 2t+1 at its target.
Json rotation_to_json(const RotationSystem& rs);
RotationSystem rotation_from_json(const Json& j, const MultiGraph& g);

Json profile_to_json(const FaceProfile& p);
/// Accepts "3:4,8:1" (degree:count pairs).
FaceProfile parse_profile(const std::string& text);

struct DotOptions {
    const RotationSystem* rotation = nullptr;  // edges must follow nfa.transitions
    bool faces = false;                        // list the faces of `rotation`
};

/// Initial states get an inbound edge from an invisible stub, finals are
/// double circles. With a rotation, its cycles are written as comments.
std::string to_dot(const Nfa& nfa, const DotOptions& options = {});

}  // namespace autgenus
