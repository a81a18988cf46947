#include "autgenus/io.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "autgenus/error.hpp"

namespace autgenus {

Canonical canonicalize(const Nfa& nfa) {
    std::vector<std::vector<std::pair<Letter, StateId>>> out(nfa.states);
    for (const auto& t : nfa.transitions) out[t.src].emplace_back(t.label, t.dst);
    for (auto& o : out) std::sort(o.begin(), o.end());

    Canonical c;
    c.state_map.assign(nfa.states, kNoState);
    StateId next = 0;
    std::deque<StateId> queue;
    auto visit = [&](StateId q) {
        if (c.state_map[q] != kNoState) return;
        c.state_map[q] = next++;
        queue.push_back(q);
    };
    auto initial = nfa.initial;
    std::sort(initial.begin(), initial.end());
    for (auto q : initial) visit(q);
    while (!queue.empty()) {
        const auto q = queue.front();
        queue.pop_front();
        for (const auto& [a, r] : out[q]) visit(r);
    }
    for (StateId q = 0; q < nfa.states; ++q) {
        if (c.state_map[q] == kNoState) c.state_map[q] = next++;
    }

    c.nfa.alphabet = nfa.alphabet;
    c.nfa.states = nfa.states;
    for (auto q : nfa.initial) c.nfa.initial.push_back(c.state_map[q]);
    for (auto q : nfa.finals) c.nfa.finals.push_back(c.state_map[q]);
    std::vector<Transition> moved;
    for (const auto& t : nfa.transitions) moved.push_back({c.state_map[t.src], t.label, c.state_map[t.dst]});
    std::vector<EdgeId> order(moved.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return moved[x] < moved[y]; });
    c.edge_map.assign(moved.size(), 0);
    for (EdgeId i = 0; i < order.size(); ++i) {
        c.edge_map[order[i]] = i;
        c.nfa.transitions.push_back(moved[order[i]]);
    }
    std::sort(c.nfa.initial.begin(), c.nfa.initial.end());
    std::sort(c.nfa.finals.begin(), c.nfa.finals.end());
    return c;
}

RotationSystem transport(const RotationSystem& rs, const Canonical& c) {
    std::vector<std::vector<Dart>> rot(rs.rotation().size());
    for (Vertex v = 0; v < rs.rotation().size(); ++v) {
        auto& r = rot[c.state_map[v]];
        for (auto d : rs.at(v)) r.push_back(dart_of(c.edge_map[edge_of(d)], d & 1u));
    }
    return RotationSystem(underlying_graph(c.nfa).graph, std::move(rot));
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw Error("field \"" + field + "\": " + what);
}

StateId state_at(const Json& j, const std::string& field, std::size_t states) {
    if (!j.is_number_integer()) bad(field, "expected a state id, got " + j.dump());
    const auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= states) {
        bad(field, "state " + std::to_string(v) + " out of range (states = " + std::to_string(states) + ")");
    }
    return static_cast<StateId>(v);
}

}  // namespace

Nfa automaton_from_json(const Json& j) {
    if (!j.is_object()) throw Error("automaton must be a JSON object");
    static const std::set<std::string> known{"alphabet", "finals", "initial", "states", "transitions"};
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) bad(key, "unknown field");
    }
    for (const auto& key : known) {
        if (!j.contains(key)) bad(key, "missing");
    }

    Nfa nfa;
    const auto& jalpha = j.at("alphabet");
    if (!jalpha.is_array() || jalpha.empty()) bad("alphabet", "expected a non-empty array of letters");
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < jalpha.size(); ++i) {
        const auto field = "alphabet[" + std::to_string(i) + "]";
        if (!jalpha[i].is_string()) bad(field, "expected a string");
        auto name = jalpha[i].get<std::string>();
        if (name.empty()) bad(field, "empty letter");
        if (name == kEpsilonName) bad(field, "\"eps\" is reserved for epsilon transitions");
        if (std::find(letters.begin(), letters.end(), name) != letters.end()) bad(field, "duplicate letter \"" + name + "\"");
        letters.push_back(std::move(name));
    }
    nfa.alphabet = Alphabet(std::move(letters));

    const auto& jstates = j.at("states");
    if (!jstates.is_number_integer() || jstates.get<std::int64_t>() < 1) bad("states", "expected a positive integer");
    nfa.states = jstates.get<std::size_t>();

    const auto& jinit = j.at("initial");
    if (jinit.is_array()) {
        if (jinit.empty()) bad("initial", "at least one initial state is required");
        for (std::size_t i = 0; i < jinit.size(); ++i) {
            nfa.initial.push_back(state_at(jinit[i], "initial[" + std::to_string(i) + "]", nfa.states));
        }
    } else {
        nfa.initial.push_back(state_at(jinit, "initial", nfa.states));
    }

    const auto& jfinals = j.at("finals");
    if (!jfinals.is_array()) bad("finals", "expected an array of states");
    for (std::size_t i = 0; i < jfinals.size(); ++i) {
        nfa.finals.push_back(state_at(jfinals[i], "finals[" + std::to_string(i) + "]", nfa.states));
    }

    const auto& jtrans = j.at("transitions");
    if (!jtrans.is_array()) bad("transitions", "expected an array of [src, label, dst] triples");
    std::set<Transition> seen;
    for (std::size_t i = 0; i < jtrans.size(); ++i) {
        const auto field = "transitions[" + std::to_string(i) + "]";
        const auto& t = jtrans[i];
        if (!t.is_array() || t.size() != 3) bad(field, "expected [src, label, dst]");
        const auto src = state_at(t[0], field + "[0]", nfa.states);
        if (!t[1].is_string()) bad(field + "[1]", "expected a letter");
        const auto name = t[1].get<std::string>();
        Letter label = kEpsilon;
        if (name != kEpsilonName) {
            const auto a = nfa.alphabet.find(name);
            if (!a) bad(field + "[1]", "unknown letter \"" + name + "\"");
            label = *a;
        }
        const auto dst = state_at(t[2], field + "[2]", nfa.states);
        if (!seen.insert({src, label, dst}).second) bad(field, "duplicate transition");
        nfa.transitions.push_back({src, label, dst});
    }
    nfa.normalize();
    return nfa;
}

Nfa read_automaton(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return automaton_from_json(j);
}

Json automaton_to_json(const Nfa& nfa) {
    const auto c = canonicalize(nfa);
    Json j;
    j["alphabet"] = c.nfa.alphabet.letters();
    j["states"] = c.nfa.states;
    if (c.nfa.initial.size() == 1) {
        j["initial"] = c.nfa.initial.front();
    } else {
        j["initial"] = c.nfa.initial;
    }
    j["finals"] = c.nfa.finals;
    j["transitions"] = Json::array();
    for (const auto& t : c.nfa.transitions) {
        j["transitions"].push_back({t.src, t.label == kEpsilon ? std::string(kEpsilonName) : c.nfa.alphabet.name(t.label), t.dst});
    }
    return j;
}

std::string write_automaton(const Nfa& nfa) {
    const auto j = automaton_to_json(nfa);
    std::ostringstream out;
    out << "{\n";
    out << "  \"alphabet\": " << j["alphabet"].dump() << ",\n";
    out << "  \"finals\": " << j["finals"].dump() << ",\n";
    out << "  \"initial\": " << j["initial"].dump() << ",\n";
    out << "  \"states\": " << j["states"].dump() << ",\n";
    out << "  \"transitions\": [";
    const auto& ts = j["transitions"];
    for (std::size_t i = 0; i < ts.size(); ++i) out << (i ? ",\n    " : "\n    ") << ts[i].dump();
    out << (ts.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

std::string write_automaton(const Dfa& dfa) { return write_automaton(dfa.to_nfa()); }

Json rotation_to_json(const RotationSystem& rs) {
    Json j;
    j["rotation"] = rs.rotation();
    return j;
}

RotationSystem rotation_from_json(const Json& j, const MultiGraph& g) {
    if (!j.is_object() || !j.contains("rotation")) bad("rotation", "missing");
    const auto& r = j.at("rotation");
    if (!r.is_array()) bad("rotation", "expected one dart list per state");
    std::vector<std::vector<Dart>> rot;
    for (std::size_t v = 0; v < r.size(); ++v) {
        const auto field = "rotation[" + std::to_string(v) + "]";
        if (!r[v].is_array()) bad(field, "expected an array of darts");
        auto& cyc = rot.emplace_back();
        for (std::size_t i = 0; i < r[v].size(); ++i) {
            if (!r[v][i].is_number_unsigned()) bad(field + "[" + std::to_string(i) + "]", "expected a dart id");
            cyc.push_back(r[v][i].get<Dart>());
        }
    }
    try {
        return RotationSystem(g, std::move(rot));
    } catch (const Error& e) {
        bad("rotation", e.what());
    }
}

Json profile_to_json(const FaceProfile& p) {
    Json j = Json::object();
    for (const auto& [k, f] : p.counts) j[std::to_string(k)] = f;
    return j;
}

FaceProfile parse_profile(const std::string& text) {
    FaceProfile p;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos) throw Error("");
            std::size_t used = 0;
            const auto k = std::stoi(item.substr(0, colon), &used);
            if (used != colon) throw Error("");
            const auto rest = item.substr(colon + 1);
            const auto f = std::stoll(rest, &used);
            if (used != rest.size() || k < 0 || f < 0) throw Error("");
            p.counts[k] += f;
        } catch (const std::exception&) {
            throw Error("bad face profile entry \"" + item + "\" (expected degree:count)");
        }
    }
    if (p.counts.empty()) throw Error("empty face profile");
    return p;
}

// ---------------------------------------------------------------------------

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const Nfa& nfa, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (StateId q = 0; q < nfa.states; ++q) {
        out << "  " << q << " [label=\"" << q << "\"" << (nfa.is_final(q) ? ", shape=doublecircle" : "") << "];\n";
    }
    for (auto q : nfa.initial) {
        out << "  start" << q << " [shape=none, label=\"\", width=0, height=0];\n";
        out << "  start" << q << " -> " << q << ";\n";
    }
    for (std::size_t e = 0; e < nfa.transitions.size(); ++e) {
        const auto& t = nfa.transitions[e];
        const std::string label = t.label == kEpsilon ? "ε" : nfa.alphabet.name(t.label);
        out << "  " << t.src << " -> " << t.dst << " [label=" << quoted(label) << ", id=\"t" << e << "\"];\n";
    }

    if (const auto* rs = options.rotation) {
        if (rs->graph().edges != underlying_graph(nfa).graph.edges) throw Error("to_dot: rotation does not match the automaton");
        out << "  // rotation (dart 2t at the source of transition t, 2t+1 at its target)\n";
        for (Vertex v = 0; v < rs->rotation().size(); ++v) {
            out << "  // " << v << ":";
            for (auto d : rs->at(v)) out << ' ' << d;
            out << '\n';
        }
        if (options.faces) {
            const auto orbits = face_orbits(*rs);
            std::map<std::size_t, std::size_t> profile;
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                ++profile[orbits[i].size()];
                out << "  // face " << i << " (degree " << orbits[i].size() << "):";
                for (auto d : orbits[i]) out << ' ' << rs->graph().vertex_of(d);
                out << '\n';
            }
            std::ostringstream label;
            label << "genus " << genus_by_component(*rs) << ", faces";
            for (const auto& [k, f] : profile) label << " f" << k << "=" << f;
            out << "  label=" << quoted(label.str()) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace autgenus
