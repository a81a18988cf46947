// autgenus: genus of automata and regular languages from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "autgenus/analysis.hpp"
#include "autgenus/automata.hpp"
#include "autgenus/embedding.hpp"
#include "autgenus/error.hpp"
#include "autgenus/families.hpp"
#include "autgenus/io.hpp"
#include "autgenus/planarnfa.hpp"

namespace {

using namespace autgenus;

std::string output_path;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw Error("cannot write " + output_path);
    out << text;
}

void emit(const Json& j) { emit(j.dump(2) + "\n"); }

/// Reads an automaton and brings it into canonical numbering, so that edge
/// ids in reports match the transition list of the printed automaton.
Nfa load(const std::string& path) { return canonicalize(read_automaton(slurp(path))).nfa; }

Dfa load_dfa(const std::string& path, const char* command) {
    const auto nfa = load(path);
    auto dfa = as_dfa(nfa);
    if (!dfa) throw Error(std::string(command) + ": input must be a complete deterministic automaton (try determinize first)");
    return *dfa;
}

const char* proof_name(LowerProof p) {
    switch (p) {
        case LowerProof::Exhausted: return "exhausted";
        case LowerProof::BranchBoundClosed: return "branch-bound-closed";
        case LowerProof::Bracket: return "bracket";
    }
    return "?";
}

Json bound_report(const BoundReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["upper"] = r.upper;
    j["lower"] = r.lower ? Json(*r.lower) : Json(nullptr);
    j["lower_exact"] = r.lower_exact ? Json(to_string(*r.lower_exact)) : Json(nullptr);
    j["hypotheses"] = {{"alphabet_at_least_4", r.alphabet_ok}, {"loop_free", r.loop_free}, {"bigon_free", r.bigon_free}};
    return j;
}

Json stats_report(const Nfa& nfa) {
    Json j;
    j["states"] = nfa.states;
    j["transitions"] = nfa.transitions.size();
    j["letters"] = nfa.alphabet.size();
    j["initial"] = nfa.initial.size();
    j["finals"] = nfa.finals.size();
    j["epsilon"] = nfa.has_epsilon();
    std::size_t loops = 0;
    for (const auto& t : nfa.transitions) loops += t.src == t.dst;
    j["z1"] = loops;
    const auto dfa = as_dfa(nfa);
    const auto partial = as_partial_dfa(nfa);
    j["deterministic"] = partial.has_value();
    j["complete"] = dfa.has_value();
    if (dfa) {
        const auto s = cycle_stats(*dfa);
        j["z2"] = s.z2;
        j["loop_free"] = s.loop_free;
        j["bigon_free"] = s.bigon_free;
    } else {
        j["z2"] = nullptr;
    }
    const auto g = underlying_graph(nfa).graph;
    j["connected"] = g.connected();
    j["search_space"] = search_space(remove_loops(g));
    return j;
}

struct Args {
    std::string input;
    std::string second;
    std::uint64_t budget = kDefaultBudget;
    bool exhaustive = false;
    bool keep_loops = false;
    bool language = false;
    bool morphism = false;
    std::int64_t m = 0;
    std::string profile;
    std::string growth_eps;
    std::int64_t growth_n = -1;
    std::int64_t blowup = -1;
    std::string family;
    std::size_t n = 0;
    std::size_t size_m = 0;
    std::size_t preperiod = 0;
    std::size_t period = 1;
    std::vector<StateId> finals;
    int letters = 2;
    std::string component = "union";
    std::string rotation_out;
    std::string regex;
    std::string alphabet;
    bool check = false;
    bool dot = false;
    std::string rotation_in;
    bool faces = false;
    bool embed = false;
};

int run_genus(const Args& a) {
    const auto nfa = load(a.input);
    if (a.language) {
        auto dfa = as_dfa(nfa);
        if (!dfa) throw Error("genus --language: input must be a complete deterministic automaton");
        const auto b = language_genus(*dfa, a.budget);
        Json j;
        j["lo"] = b.lo;
        j["hi"] = b.hi;
        j["exact"] = b.exact();
        j["lo_source"] = b.lo_source == LowerSource::Certified ? "certified" : "trivial";
        j["candidates"] = b.candidates;
        j["representative"] = automaton_to_json(b.representative.to_nfa());
        j["witness"] = rotation_to_json(b.witness)["rotation"];
        emit(j);
        return 0;
    }
    const auto g = underlying_graph(nfa).graph;
    const auto r = min_genus(g, {.budget = a.budget, .exhaustive = a.exhaustive, .strip_loops = !a.keep_loops});
    const auto profile = trace_faces(r.witness);
    Json j;
    j["genus"] = r.genus;
    j["lower"] = r.lower;
    j["exact"] = r.exact();
    j["proof"] = proof_name(r.proof);
    j["explored"] = r.explored;
    j["nodes"] = r.nodes;
    j["faces"] = profile_to_json(profile);
    if (auto dfa = as_dfa(nfa)) j["formula"] = to_string(genus_formula(profile, static_cast<std::int64_t>(dfa->letter_count())));
    j["witness"] = rotation_to_json(r.witness)["rotation"];
    emit(j);
    return 0;
}

int run_generate(const Args& a) {
    const auto& f = a.family;
    if (f == "k5") {
        emit(write_automaton(k5_weight_automaton()));
    } else if (f == "k5-planar") {
        emit(write_automaton(k5_planar_equivalent()));
    } else if (f == "distinct-letters") {
        emit(write_automaton(distinct_letters_nfa(a.n)));
    } else if (f == "union") {
        const auto [x, y] = union_family(a.size_m, a.n);
        if (a.component == "a") {
            emit(write_automaton(x));
        } else if (a.component == "b") {
            emit(write_automaton(y));
        } else if (a.component == "union") {
            emit(write_automaton(minimize(union_product(x, y)).dfa));
        } else {
            throw Error("generate union: --component must be a, b or union");
        }
    } else if (f == "hierarchy") {
        emit(write_automaton(hierarchy_automaton(a.n)));
    } else if (f == "unary") {
        emit(write_automaton(unary_automaton(a.preperiod, a.period, a.finals)));
    } else if (f == "torus-grid") {
        if (a.letters < 2 || a.letters > 4) throw Error("generate torus-grid: --letters must be 2, 3 or 4");
        const auto t = torus_grid(a.n, a.letters == 2 ? TorusLetters::Two : a.letters == 3 ? TorusLetters::Three : TorusLetters::FourWithLoops);
        const auto c = canonicalize(t.dfa.to_nfa());
        if (!a.rotation_out.empty()) {
            std::ofstream out(a.rotation_out);
            if (!out) throw Error("cannot write " + a.rotation_out);
            out << rotation_to_json(transport(t.witness, c)).dump() << "\n";
        }
        emit(write_automaton(c.nfa));
    } else {
        throw Error("generate: unknown family \"" + f + "\"");
    }
    return 0;
}

int run_planar_nfa(const Args& a) {
    const auto r = parse_regex(a.regex);
    Alphabet sigma;
    if (!a.alphabet.empty()) {
        std::vector<std::string> letters;
        std::stringstream in(a.alphabet);
        for (std::string l; std::getline(in, l, ',');) letters.push_back(l);
        sigma = Alphabet(std::move(letters));
    }
    const auto p = build_planar_nfa(r, sigma);
    const auto c = canonicalize(p.nfa);
    const auto rot = transport(p.rotation, c);
    if (a.check) {
        const auto reference = thompson_nfa(r, p.nfa.alphabet);
        Json j;
        j["regex"] = to_string(r);
        j["states"] = p.nfa.states;
        j["transitions"] = p.nfa.transitions.size();
        j["planar"] = is_planar(underlying_graph(p.nfa).graph).planar && genus_by_component(p.rotation) == 0;
        j["equivalent"] = equivalent(p.nfa, reference);
        emit(j);
        return 0;
    }
    if (a.dot) {
        emit(to_dot(c.nfa, {.rotation = &rot, .faces = true}));
        return 0;
    }
    if (!a.rotation_out.empty()) {
        std::ofstream out(a.rotation_out);
        if (!out) throw Error("cannot write " + a.rotation_out);
        out << rotation_to_json(rot).dump() << "\n";
    }
    emit(write_automaton(c.nfa));
    return 0;
}

int run_export_dot(const Args& a) {
    const auto nfa = load(a.input);
    std::optional<RotationSystem> rot;
    const auto g = underlying_graph(nfa).graph;
    if (!a.rotation_in.empty()) {
        Json j;
        try {
            j = Json::parse(slurp(a.rotation_in));
        } catch (const Json::parse_error& e) {
            throw Error("invalid rotation JSON: " + std::string(e.what()));
        }
        rot = rotation_from_json(j, g);
    } else if (a.embed || a.faces) {
        rot = min_genus(g, {.budget = a.budget}).witness;
    }
    emit(to_dot(nfa, {.rotation = rot ? &*rot : nullptr, .faces = a.faces}));
    return 0;
}

int run_bounds(const Args& a) {
    if (!a.growth_eps.empty()) {
        if (a.m == 0 || a.growth_n < 0) throw Error("bounds --growth needs --m and --n");
        const auto v = growth_bound(a.m, a.growth_n, parse_rational(a.growth_eps));
        emit(Json{{"m", a.m}, {"n", a.growth_n}, {"eps", a.growth_eps}, {"growth_bound", to_string(v)}});
        return 0;
    }
    if (a.blowup >= 0) {
        emit(Json{{"n", a.blowup}, {"blowup_bound", blowup_bound(a.blowup)}});
        return 0;
    }
    emit(bound_report(certified_lower_bound(load_dfa(a.input, "bounds"))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus of finite automata and regular languages"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-o,--output", output_path, "Write the result here instead of stdout");

    Args a;
    auto* validate = app.add_subcommand("validate", "Check an automaton file and print a summary");
    validate->add_option("input", a.input, "Automaton JSON (default stdin)");
    auto* determinize_cmd = app.add_subcommand("determinize", "Accessible subset construction");
    determinize_cmd->add_option("input", a.input, "Automaton JSON (default stdin)");
    auto* minimize_cmd = app.add_subcommand("minimize", "Minimal complete deterministic automaton");
    minimize_cmd->add_option("input", a.input, "Automaton JSON (default stdin)");
    minimize_cmd->add_flag("--morphism", a.morphism, "Also print the projection onto the minimal automaton");
    auto* equiv = app.add_subcommand("equiv", "Language equivalence of two automata");
    equiv->add_option("first", a.input, "Automaton JSON")->required();
    equiv->add_option("second", a.second, "Automaton JSON")->required();
    auto* stats = app.add_subcommand("stats", "Size, loop and bigon statistics");
    stats->add_option("input", a.input, "Automaton JSON (default stdin)");

    auto* genus = app.add_subcommand("genus", "Minimal genus of the underlying graph");
    genus->add_option("input", a.input, "Automaton JSON (default stdin)");
    genus->add_option("--budget", a.budget, "Search node budget")->envname("GENUS_BUDGET");
    genus->add_flag("--exhaustive", a.exhaustive, "Enumerate every rotation system regardless of the budget");
    genus->add_flag("--keep-loops", a.keep_loops, "Search with loops instead of removing them first");
    genus->add_flag("--language", a.language, "Bracket the genus of the language instead");

    auto* planar = app.add_subcommand("planar", "Planarity test with a genus-0 witness");
    planar->add_option("input", a.input, "Automaton JSON (default stdin)");

    auto* formula = app.add_subcommand("formula", "Evaluate the genus formula on a face profile");
    formula->add_option("--m", a.m, "Alphabet size")->required();
    formula->add_option("profile", a.profile, "Face profile, e.g. 3:4,8:1")->required();

    auto* bounds = app.add_subcommand("bounds", "Upper and certified lower genus bounds");
    bounds->add_option("input", a.input, "Automaton JSON (default stdin)");
    bounds->add_option("--growth", a.growth_eps, "Evaluate the growth bound for this eps (needs --m, --n)");
    bounds->add_option("--m", a.m, "Alphabet size for --growth");
    bounds->add_option("--n", a.growth_n, "State count for --growth");
    bounds->add_option("--blowup", a.blowup, "Evaluate the determinization blowup bound for this n");

    auto* generate = app.add_subcommand("generate", "Emit a member of an automaton family");
    generate->add_option("family", a.family, "k5, k5-planar, distinct-letters, union, hierarchy, unary, torus-grid")->required();
    generate->add_option("--n", a.n, "Size parameter");
    generate->add_option("--m", a.size_m, "First size of the union family");
    generate->add_option("--component", a.component, "union family: a, b or union");
    generate->add_option("--preperiod", a.preperiod, "unary: length of the tail");
    generate->add_option("--period", a.period, "unary: length of the cycle");
    generate->add_option("--finals", a.finals, "unary: final states")->delimiter(',');
    generate->add_option("--letters", a.letters, "torus-grid: 2, 3 or 4 (with loops)");
    generate->add_option("--rotation", a.rotation_out, "torus-grid: write the toroidal witness rotation here");

    auto* pnfa = app.add_subcommand("planar-nfa", "Planar automaton for a regular expression");
    pnfa->add_option("regex", a.regex, "Expression, e.g. (a+b)^+c")->required();
    pnfa->add_option("--alphabet", a.alphabet, "Comma-separated alphabet (default: letters of the regex)");
    pnfa->add_flag("--check", a.check, "Report planarity and equivalence with a reference construction");
    pnfa->add_flag("--dot", a.dot, "Emit DOT with the planar rotation and its faces");
    pnfa->add_option("--rotation", a.rotation_out, "Write the planar rotation here");

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    dot->add_option("input", a.input, "Automaton JSON (default stdin)");
    dot->add_option("--rotation", a.rotation_in, "Rotation JSON matching the canonical transition order");
    dot->add_flag("--embed", a.embed, "Compute a minimal-genus rotation to annotate");
    dot->add_flag("--faces", a.faces, "List the faces of the rotation");
    dot->add_option("--budget", a.budget, "Search node budget for --embed")->envname("GENUS_BUDGET");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            auto j = stats_report(load(a.input));
            j["valid"] = true;
            emit(j);
        } else if (determinize_cmd->parsed()) {
            emit(write_automaton(determinize(load(a.input))));
        } else if (minimize_cmd->parsed()) {
            const auto m = minimize(load_dfa(a.input, "minimize"));
            if (a.morphism) {
                emit(Json{{"automaton", automaton_to_json(m.dfa.to_nfa())}, {"rho", m.morphism.rho}});
            } else {
                emit(write_automaton(m.dfa));
            }
        } else if (equiv->parsed()) {
            const auto x = load(a.input);
            const auto y = load(a.second);
            if (x.alphabet != y.alphabet) throw Error("equiv: the automata have different alphabets");
            emit(Json{{"equivalent", equivalent(x, y)}});
        } else if (stats->parsed()) {
            emit(stats_report(load(a.input)));
        } else if (genus->parsed()) {
            return run_genus(a);
        } else if (planar->parsed()) {
            const auto p = is_planar(underlying_graph(load(a.input)).graph);
            emit(Json{{"planar", p.planar}, {"witness", p.witness ? rotation_to_json(*p.witness)["rotation"] : Json(nullptr)}});
        } else if (formula->parsed()) {
            const auto profile = parse_profile(a.profile);
            emit(Json{{"m", a.m}, {"faces", profile_to_json(profile)}, {"genus", to_string(genus_formula(profile, a.m))}});
        } else if (bounds->parsed()) {
            return run_bounds(a);
        } else if (generate->parsed()) {
            return run_generate(a);
        } else if (pnfa->parsed()) {
            return run_planar_nfa(a);
        } else if (dot->parsed()) {
            return run_export_dot(a);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
