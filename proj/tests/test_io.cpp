#include <doctest.h>

#include <random>

#include "autgenus/error.hpp"
#include "autgenus/families.hpp"
#include "autgenus/io.hpp"
#include "autgenus/planarnfa.hpp"
#include "support/oracle.hpp"

using namespace autgenus;

namespace {

std::string error_of(const std::string& text) {
    try {
        read_automaton(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("automaton JSON: reading") {
    const auto nfa = read_automaton(R"({"alphabet": ["a", "b"], "states": 3, "initial": 0, "finals": [2],
        "transitions": [[0, "a", 1], [1, "eps", 2], [0, "b", 0]]})");
    CHECK(nfa.states == 3);
    CHECK(nfa.initial == std::vector<StateId>{0});
    CHECK(nfa.finals == std::vector<StateId>{2});
    CHECK(nfa.transitions.size() == 3);
    CHECK(nfa.has_epsilon());

    const auto multi = read_automaton(R"({"alphabet": ["a"], "states": 2, "initial": [1, 0], "finals": [],
        "transitions": []})");
    CHECK(multi.initial == std::vector<StateId>{0, 1});
}

TEST_CASE("automaton JSON: diagnostics name the field") {
    const std::string ok_tail = R"(, "transitions": []})";
    CHECK(error_of("{") .find("invalid JSON at byte") != std::string::npos);
    CHECK(error_of("[]").find("JSON object") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 1, "initial": 0, "finals": [], "transitions": [], "extra": 1})")
              .find("\"extra\"") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 1, "initial": 0, "finals": []})").find("\"transitions\"") !=
          std::string::npos);
    CHECK(error_of(R"({"alphabet": [], "states": 1, "initial": 0, "finals": [])" + ok_tail).find("\"alphabet\"") !=
          std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a", "a"], "states": 1, "initial": 0, "finals": [])" + ok_tail)
              .find("\"alphabet[1]\"") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["eps"], "states": 1, "initial": 0, "finals": [])" + ok_tail)
              .find("\"alphabet[0]\"") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 0, "initial": 0, "finals": [])" + ok_tail).find("\"states\"") !=
          std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 2, "initial": 2, "finals": [])" + ok_tail).find("\"initial\"") !=
          std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 2, "initial": 0, "finals": [0, "x"])" + ok_tail)
              .find("\"finals[1]\"") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 2, "initial": 0, "finals": [],
        "transitions": [[0, "z", 1]]})")
              .find("\"transitions[0][1]\"") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 2, "initial": 0, "finals": [],
        "transitions": [[0, "a", 1], [0, "a", 1]]})")
              .find("\"transitions[1]\"") != std::string::npos);
    CHECK(error_of(R"({"alphabet": ["a"], "states": 2, "initial": 0, "finals": [],
        "transitions": [[0, "a"]]})")
              .find("\"transitions[0]\"") != std::string::npos);
}

TEST_CASE("automaton JSON: writing is canonical and byte-stable") {
    const auto k5 = write_automaton(k5_weight_automaton());
    CHECK(write_automaton(read_automaton(k5)) == k5);
    CHECK(k5.find("\"transitions\": [\n") != std::string::npos);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto d = oracle::random_dfa(rng, 1 + i % 6, 1 + i % 3);
        const auto text = write_automaton(d);
        const auto again = write_automaton(read_automaton(text));
        CHECK(again == text);
        CHECK(equivalent(read_automaton(text), d.to_nfa()));
    }

    // isomorphic DFAs give identical text; NFA ties are broken by state id
    const auto k = k5_weight_automaton().to_nfa();
    Nfa shuffled = k;
    const std::vector<StateId> perm{3, 0, 4, 1, 2};
    for (auto& q : shuffled.initial) q = perm[q];
    for (auto& q : shuffled.finals) q = perm[q];
    for (auto& t : shuffled.transitions) t = {perm[t.src], t.label, perm[t.dst]};
    std::reverse(shuffled.transitions.begin(), shuffled.transitions.end());
    shuffled.normalize();
    CHECK(write_automaton(shuffled) == k5);
}

TEST_CASE("canonicalize: maps and rotation transport") {
    const auto p = build_planar_nfa(parse_regex("(a^*b+c)^+(ab)^*"));
    const auto c = canonicalize(p.nfa);
    CHECK(c.nfa.states == p.nfa.states);
    CHECK(c.nfa.initial == std::vector<StateId>{0});
    for (std::size_t t = 0; t < p.nfa.transitions.size(); ++t) {
        const auto& old = p.nfa.transitions[t];
        const auto& neu = c.nfa.transitions[c.edge_map[t]];
        CHECK(neu.src == c.state_map[old.src]);
        CHECK(neu.dst == c.state_map[old.dst]);
        CHECK(neu.label == old.label);
    }
    const auto moved = transport(p.rotation, c);
    CHECK(trace_faces(moved) == trace_faces(p.rotation));
    CHECK(genus_by_component(moved) == 0);
}

TEST_CASE("rotation JSON round trip and errors") {
    const auto t = torus_grid(3, TorusLetters::Three);
    const auto j = rotation_to_json(t.witness);
    const auto back = rotation_from_json(Json::parse(j.dump()), t.witness.graph());
    CHECK(back.rotation() == t.witness.rotation());
    CHECK(euler_genus(back).genus == 1);

    CHECK_THROWS_AS(rotation_from_json(Json::object(), t.witness.graph()), Error);
    auto broken = j;
    broken["rotation"][0][0] = 9999;
    try {
        rotation_from_json(broken, t.witness.graph());
        FAIL("accepted a bad dart");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("\"rotation[0][0]\"") != std::string::npos);
    }
    broken["rotation"][0][0] = 9999u;
    try {
        rotation_from_json(broken, t.witness.graph());
        FAIL("accepted a bad dart");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("\"rotation\"") != std::string::npos);
    }
}

TEST_CASE("face profiles: parsing and JSON") {
    const auto p = parse_profile("3:4,8:1");
    CHECK(p.counts == std::map<int, std::int64_t>{{3, 4}, {8, 1}});
    CHECK(profile_to_json(p) == Json::parse(R"({"3": 4, "8": 1})"));
    CHECK_THROWS_AS(parse_profile(""), Error);
    CHECK_THROWS_AS(parse_profile("3"), Error);
    CHECK_THROWS_AS(parse_profile("3:x"), Error);
    CHECK_THROWS_AS(parse_profile("3:-1"), Error);
}

TEST_CASE("DOT export") {
    const auto d = k5_weight_automaton().to_nfa();
    const auto plain = to_dot(d);
    CHECK(plain.rfind("digraph", 0) == 0);
    CHECK(plain.find("rankdir=LR") != std::string::npos);
    CHECK(plain.find("doublecircle") != std::string::npos);
    CHECK(plain.find("start0") != std::string::npos);
    CHECK(plain.find("id=\"t9\"") != std::string::npos);

    const auto witness = min_genus(underlying_graph(d).graph).witness;
    const auto faces = to_dot(d, {.rotation = &witness, .faces = true});
    CHECK(faces.find("genus 1") != std::string::npos);
    CHECK(faces.find("rotation") != std::string::npos);

    const auto eps = read_automaton(R"({"alphabet": ["a"], "states": 2, "initial": 0, "finals": [1],
        "transitions": [[0, "eps", 1]]})");
    CHECK(to_dot(eps).find("ε") != std::string::npos);

    const auto other = RotationSystem::identity(oracle::complete_graph(5));
    CHECK_THROWS_AS(to_dot(d, {.rotation = &other}), Error);
}
