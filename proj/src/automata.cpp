#include "autgenus/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "autgenus/error.hpp"

namespace autgenus {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error("alphabet must contain at least one letter");
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.empty()) throw Error("alphabet letters must be non-empty");
        if (l == kEpsilonName) throw Error("\"eps\" is reserved for epsilon transitions");
        if (!seen.insert(l).second) throw Error("duplicate letter in alphabet: " + l);
    }
}

Alphabet Alphabet::of_size(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
        names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
    }
    return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = std::find(letters_.begin(), letters_.end(), name);
    if (it == letters_.end()) return std::nullopt;
    return static_cast<Letter>(it - letters_.begin());
}

// ---------------------------------------------------------------------------

void Nfa::normalize() {
    auto check = [&](StateId q, const char* what) {
        if (q >= states) throw Error(std::string(what) + ": state " + std::to_string(q) + " out of range");
    };
    for (auto q : initial) check(q, "initial");
    for (auto q : finals) check(q, "finals");
    for (const auto& t : transitions) {
        check(t.src, "transition source");
        check(t.dst, "transition target");
        if (t.label != kEpsilon && (t.label < 0 || static_cast<std::size_t>(t.label) >= alphabet.size())) {
            throw Error("transition label " + std::to_string(t.label) + " out of range");
        }
    }
    auto sort_unique = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    sort_unique(initial);
    sort_unique(finals);
    sort_unique(transitions);
}

bool Nfa::has_epsilon() const {
    return std::any_of(transitions.begin(), transitions.end(), [](const Transition& t) { return t.label == kEpsilon; });
}

bool Nfa::is_final(StateId q) const { return std::binary_search(finals.begin(), finals.end(), q); }

// ---------------------------------------------------------------------------

Dfa::Dfa(Alphabet alphabet, std::size_t states, StateId initial)
    : alphabet_(std::move(alphabet)), initial_(initial), accepting_(states, 0), delta_(states * alphabet_.size(), 0) {
    if (states == 0) throw Error("a complete DFA needs at least one state");
    if (initial >= states) throw Error("initial state out of range");
}

void Dfa::set_next(StateId q, Letter a, StateId to) {
    if (q >= size() || to >= size()) throw Error("transition state out of range");
    delta_[q * letter_count() + static_cast<std::size_t>(a)] = to;
}

std::vector<StateId> Dfa::finals() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < size(); ++q) {
        if (is_final(q)) out.push_back(q);
    }
    return out;
}

bool Dfa::accepts(std::span<const Letter> word) const {
    StateId q = initial_;
    for (Letter a : word) q = next(q, a);
    return is_final(q);
}

std::vector<Transition> Dfa::transitions() const {
    std::vector<Transition> out;
    out.reserve(delta_.size());
    for (StateId q = 0; q < size(); ++q) {
        for (Letter a = 0; a < static_cast<Letter>(letter_count()); ++a) out.push_back({q, a, next(q, a)});
    }
    return out;
}

Nfa Dfa::to_nfa() const {
    Nfa n;
    n.alphabet = alphabet_;
    n.states = size();
    n.initial = {initial_};
    n.finals = finals();
    n.transitions = transitions();
    n.normalize();
    return n;
}

PartialDfa::PartialDfa(Alphabet a, std::size_t n, StateId init)
    : alphabet(std::move(a)), states(n), initial(init), accepting(n, 0), delta(n * alphabet.size(), kNoState) {}

bool PartialDfa::is_complete() const {
    return std::none_of(delta.begin(), delta.end(), [](StateId s) { return s == kNoState; });
}

Nfa PartialDfa::to_nfa() const {
    Nfa n;
    n.alphabet = alphabet;
    n.states = states;
    n.initial = {initial};
    for (StateId q = 0; q < states; ++q) {
        if (accepting[q]) n.finals.push_back(q);
        for (Letter a = 0; a < static_cast<Letter>(alphabet.size()); ++a) {
            if (next(q, a) != kNoState) n.transitions.push_back({q, a, next(q, a)});
        }
    }
    n.normalize();
    return n;
}

// ---------------------------------------------------------------------------

std::optional<PartialDfa> as_partial_dfa(const Nfa& nfa) {
    if (nfa.initial.size() != 1 || nfa.has_epsilon() || nfa.states == 0) return std::nullopt;
    PartialDfa d(nfa.alphabet, nfa.states, nfa.initial.front());
    for (auto f : nfa.finals) d.accepting[f] = 1;
    for (const auto& t : nfa.transitions) {
        if (d.next(t.src, t.label) != kNoState && d.next(t.src, t.label) != t.dst) return std::nullopt;
        d.set_next(t.src, t.label, t.dst);
    }
    return d;
}

std::optional<Dfa> as_dfa(const Nfa& nfa) {
    auto p = as_partial_dfa(nfa);
    if (!p || !p->is_complete()) return std::nullopt;
    Dfa d(p->alphabet, p->states, p->initial);
    for (StateId q = 0; q < p->states; ++q) {
        d.set_final(q, p->accepting[q] != 0);
        for (Letter a = 0; a < static_cast<Letter>(p->alphabet.size()); ++a) d.set_next(q, a, p->next(q, a));
    }
    return d;
}

namespace {

std::vector<std::uint8_t> epsilon_closure(const Nfa& nfa, std::vector<std::uint8_t> set) {
    std::vector<StateId> stack;
    for (StateId q = 0; q < set.size(); ++q) {
        if (set[q]) stack.push_back(q);
    }
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (const auto& t : nfa.transitions) {
            if (t.src == q && t.label == kEpsilon && !set[t.dst]) {
                set[t.dst] = 1;
                stack.push_back(t.dst);
            }
        }
    }
    return set;
}

}  // namespace

bool accepts(const Nfa& nfa, std::span<const Letter> word) {
    std::vector<std::uint8_t> cur(nfa.states, 0);
    for (auto q : nfa.initial) cur[q] = 1;
    cur = epsilon_closure(nfa, std::move(cur));
    for (Letter a : word) {
        std::vector<std::uint8_t> nxt(nfa.states, 0);
        for (const auto& t : nfa.transitions) {
            if (t.label == a && cur[t.src]) nxt[t.dst] = 1;
        }
        cur = epsilon_closure(nfa, std::move(nxt));
    }
    for (auto f : nfa.finals) {
        if (cur[f]) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

Dfa determinize(const Nfa& nfa) {
    if (nfa.has_epsilon()) throw Error("determinize: epsilon transitions are not supported (remove them first)");
    const std::size_t words = (nfa.states + 63) / 64;
    using Subset = std::vector<std::uint64_t>;
    const auto m = static_cast<Letter>(nfa.alphabet.size());

    // successor lists per (state, letter)
    std::vector<std::vector<StateId>> succ(nfa.states * nfa.alphabet.size());
    for (const auto& t : nfa.transitions) succ[t.src * nfa.alphabet.size() + static_cast<std::size_t>(t.label)].push_back(t.dst);

    // States that cannot reach a final state never matter for acceptance;
    // leaving them out makes every dead subset coincide with the empty set.
    std::vector<std::uint8_t> useful(nfa.states, 0);
    {
        std::vector<std::vector<StateId>> pred(nfa.states);
        for (const auto& t : nfa.transitions) pred[t.dst].push_back(t.src);
        std::vector<StateId> stack(nfa.finals.begin(), nfa.finals.end());
        for (auto f : nfa.finals) useful[f] = 1;
        while (!stack.empty()) {
            const auto q = stack.back();
            stack.pop_back();
            for (auto p : pred[q]) {
                if (!useful[p]) {
                    useful[p] = 1;
                    stack.push_back(p);
                }
            }
        }
    }

    std::map<Subset, StateId> index;
    std::vector<Subset> subsets;
    std::vector<std::vector<StateId>> delta;

    Subset start(words, 0);
    for (auto q : nfa.initial) {
        if (useful[q]) start[q / 64] |= std::uint64_t{1} << (q % 64);
    }
    index.emplace(start, 0);
    subsets.push_back(start);

    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::vector<StateId> row(static_cast<std::size_t>(m));
        for (Letter a = 0; a < m; ++a) {
            Subset next(words, 0);
            const Subset& cur = subsets[i];
            for (StateId q = 0; q < nfa.states; ++q) {
                if (!(cur[q / 64] >> (q % 64) & 1)) continue;
                for (auto r : succ[q * nfa.alphabet.size() + static_cast<std::size_t>(a)]) {
                    if (useful[r]) next[r / 64] |= std::uint64_t{1} << (r % 64);
                }
            }
            auto [it, inserted] = index.emplace(next, static_cast<StateId>(subsets.size()));
            if (inserted) subsets.push_back(next);
            row[static_cast<std::size_t>(a)] = it->second;
        }
        delta.push_back(std::move(row));
    }

    Dfa d(nfa.alphabet, subsets.size(), 0);
    for (StateId s = 0; s < subsets.size(); ++s) {
        for (auto f : nfa.finals) {
            if (subsets[s][f / 64] >> (f % 64) & 1) {
                d.set_final(s);
                break;
            }
        }
        for (Letter a = 0; a < m; ++a) d.set_next(s, a, delta[s][static_cast<std::size_t>(a)]);
    }
    return d;
}

namespace {

std::vector<std::uint8_t> reachable(const Dfa& dfa) {
    std::vector<std::uint8_t> seen(dfa.size(), 0);
    std::vector<StateId> stack{dfa.initial()};
    seen[dfa.initial()] = 1;
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < static_cast<Letter>(dfa.letter_count()); ++a) {
            StateId r = dfa.next(q, a);
            if (!seen[r]) {
                seen[r] = 1;
                stack.push_back(r);
            }
        }
    }
    return seen;
}

}  // namespace

Dfa trim(const Dfa& dfa) {
    auto seen = reachable(dfa);
    std::vector<StateId> remap(dfa.size(), kNoState);
    StateId n = 0;
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (seen[q]) remap[q] = n++;
    }
    Dfa out(dfa.alphabet(), n, remap[dfa.initial()]);
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (!seen[q]) continue;
        out.set_final(remap[q], dfa.is_final(q));
        for (Letter a = 0; a < static_cast<Letter>(dfa.letter_count()); ++a) out.set_next(remap[q], a, remap[dfa.next(q, a)]);
    }
    return out;
}

Dfa canonical_form(const Dfa& dfa) {
    std::vector<StateId> order{dfa.initial()};
    std::vector<StateId> remap(dfa.size(), kNoState);
    remap[dfa.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < static_cast<Letter>(dfa.letter_count()); ++a) {
            StateId r = dfa.next(order[i], a);
            if (remap[r] == kNoState) {
                remap[r] = static_cast<StateId>(order.size());
                order.push_back(r);
            }
        }
    }
    Dfa out(dfa.alphabet(), order.size(), 0);
    for (StateId i = 0; i < order.size(); ++i) {
        out.set_final(i, dfa.is_final(order[i]));
        for (Letter a = 0; a < static_cast<Letter>(dfa.letter_count()); ++a) out.set_next(i, a, remap[dfa.next(order[i], a)]);
    }
    return out;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet()) return false;
    return canonical_form(a) == canonical_form(b);
}

Minimized minimize(const Dfa& dfa) {
    const auto seen = reachable(dfa);
    const auto m = static_cast<Letter>(dfa.letter_count());

    // Moore refinement over reachable states.
    std::vector<StateId> cls(dfa.size(), kNoState);
    std::size_t classes = 0;
    {
        bool has_final = false, has_nonfinal = false;
        for (StateId q = 0; q < dfa.size(); ++q) {
            if (!seen[q]) continue;
            (dfa.is_final(q) ? has_final : has_nonfinal) = true;
        }
        for (StateId q = 0; q < dfa.size(); ++q) {
            if (seen[q]) cls[q] = (dfa.is_final(q) && has_nonfinal) ? 1 : 0;
        }
        classes = (has_final && has_nonfinal) ? 2 : 1;
    }
    for (;;) {
        std::map<std::vector<StateId>, StateId> signature;
        std::vector<StateId> next(dfa.size(), kNoState);
        for (StateId q = 0; q < dfa.size(); ++q) {
            if (!seen[q]) continue;
            std::vector<StateId> sig{cls[q]};
            for (Letter a = 0; a < m; ++a) sig.push_back(cls[dfa.next(q, a)]);
            auto [it, _] = signature.emplace(std::move(sig), static_cast<StateId>(signature.size()));
            next[q] = it->second;
        }
        cls = std::move(next);
        if (signature.size() == classes) break;
        classes = signature.size();
    }

    // Quotient, then BFS numbering of classes.
    std::vector<StateId> rep(classes, kNoState);
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (seen[q] && rep[cls[q]] == kNoState) rep[cls[q]] = q;
    }
    Dfa quotient(dfa.alphabet(), classes, cls[dfa.initial()]);
    for (StateId c = 0; c < classes; ++c) {
        quotient.set_final(c, dfa.is_final(rep[c]));
        for (Letter a = 0; a < m; ++a) quotient.set_next(c, a, cls[dfa.next(rep[c], a)]);
    }

    std::vector<StateId> bfs_id(classes, kNoState);
    std::vector<StateId> order{quotient.initial()};
    bfs_id[quotient.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < m; ++a) {
            StateId r = quotient.next(order[i], a);
            if (bfs_id[r] == kNoState) {
                bfs_id[r] = static_cast<StateId>(order.size());
                order.push_back(r);
            }
        }
    }

    Minimized out{canonical_form(quotient), {}};
    out.morphism.rho.assign(dfa.size(), kNoState);
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (seen[q]) out.morphism.rho[q] = bfs_id[cls[q]];
    }
    return out;
}

Dfa complete(const PartialDfa& p, CompletionMode mode) {
    const auto m = static_cast<Letter>(p.alphabet.size());
    std::vector<StateId> sink(p.states, kNoState);
    std::size_t total = p.states;
    for (StateId q = 0; q < p.states; ++q) {
        bool deficient = false;
        for (Letter a = 0; a < m; ++a) deficient |= p.next(q, a) == kNoState;
        if (!deficient) continue;
        if (mode == CompletionMode::PerStateTrash) {
            sink[q] = static_cast<StateId>(total++);
        } else {
            if (total == p.states) ++total;
            sink[q] = static_cast<StateId>(p.states);
        }
    }
    Dfa d(p.alphabet, total, p.initial);
    for (StateId q = 0; q < p.states; ++q) {
        d.set_final(q, p.accepting[q] != 0);
        for (Letter a = 0; a < m; ++a) d.set_next(q, a, p.next(q, a) == kNoState ? sink[q] : p.next(q, a));
    }
    for (auto q = static_cast<StateId>(p.states); q < total; ++q) {
        for (Letter a = 0; a < m; ++a) d.set_next(q, a, q);
    }
    return d;
}

Dfa union_product(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet()) throw Error("union_product: alphabet mismatch");
    const std::size_t nb = b.size();
    auto id = [nb](StateId x, StateId y) { return static_cast<StateId>(x * nb + y); };
    Dfa out(a.alphabet(), a.size() * nb, id(a.initial(), b.initial()));
    for (StateId x = 0; x < a.size(); ++x) {
        for (StateId y = 0; y < nb; ++y) {
            out.set_final(id(x, y), a.is_final(x) || b.is_final(y));
            for (Letter l = 0; l < static_cast<Letter>(a.letter_count()); ++l) out.set_next(id(x, y), l, id(a.next(x, l), b.next(y, l)));
        }
    }
    return out;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet()) throw Error("equivalent: alphabet mismatch");
    return minimize(a).dfa == minimize(b).dfa;
}

namespace {

Nfa without_epsilon(const Nfa& nfa) {
    if (!nfa.has_epsilon()) return nfa;
    // Standard closure elimination: q -a-> r whenever q reaches p by epsilons
    // and p -a-> r; q final if its closure meets a final state.
    Nfa out;
    out.alphabet = nfa.alphabet;
    out.states = nfa.states;
    out.initial = nfa.initial;
    for (StateId q = 0; q < nfa.states; ++q) {
        std::vector<std::uint8_t> start(nfa.states, 0);
        start[q] = 1;
        auto closure = epsilon_closure(nfa, std::move(start));
        bool final = false;
        for (auto f : nfa.finals) final |= closure[f] != 0;
        if (final) out.finals.push_back(q);
        for (const auto& t : nfa.transitions) {
            if (t.label != kEpsilon && closure[t.src]) out.transitions.push_back({q, t.label, t.dst});
        }
    }
    out.normalize();
    return out;
}

}  // namespace

bool equivalent(const Nfa& a, const Nfa& b) {
    if (a.alphabet != b.alphabet) throw Error("equivalent: alphabet mismatch");
    return equivalent(determinize(without_epsilon(a)), determinize(without_epsilon(b)));
}

CycleStats cycle_stats(const Dfa& dfa) {
    CycleStats s;
    const auto m = static_cast<Letter>(dfa.letter_count());
    for (StateId q = 0; q < dfa.size(); ++q) {
        for (Letter a = 0; a < m; ++a) {
            const StateId p = dfa.next(q, a);
            if (p == q) {
                ++s.z1;
                continue;
            }
            // parallel pair q -a-> p, q -b-> p, counted once per unordered pair
            for (Letter b = a + 1; b < m; ++b) {
                if (dfa.next(q, b) == p) ++s.z2;
            }
            // directed 2-cycle q -a-> p -b-> q, counted once per transition pair
            for (Letter b = 0; b < m; ++b) {
                if (dfa.next(p, b) == q && std::pair(q, a) < std::pair(p, b)) ++s.z2;
            }
        }
    }
    s.loop_free = s.z1 == 0;
    s.bigon_free = s.z2 == 0;
    return s;
}

MinimalMorphism minimal_morphism(const Dfa& dfa) { return minimize(dfa).morphism; }

bool is_morphism(const Dfa& dfa, const Dfa& minimal, const MinimalMorphism& m) {
    if (m.rho.size() != dfa.size() || dfa.alphabet() != minimal.alphabet()) return false;
    if (m.rho[dfa.initial()] != minimal.initial()) return false;
    std::vector<std::uint8_t> hit(minimal.size(), 0);
    for (StateId q = 0; q < dfa.size(); ++q) {
        const StateId r = m.rho[q];
        if (r == kNoState) continue;
        if (r >= minimal.size() || dfa.is_final(q) != minimal.is_final(r)) return false;
        hit[r] = 1;
        for (Letter a = 0; a < static_cast<Letter>(dfa.letter_count()); ++a) {
            if (m.rho[dfa.next(q, a)] != minimal.next(r, a)) return false;
        }
    }
    return std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
}

}  // namespace autgenus
