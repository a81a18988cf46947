#include "autgenus/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "autgenus/error.hpp"

namespace autgenus {

std::int64_t ceil_of(const Rational& r) {
    const auto q = r.numerator() / r.denominator();  // truncates toward zero
    return (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ? q + 1 : q;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    try {
        std::size_t used = 0;
        if (auto slash = text.find('/'); slash != std::string::npos) {
            const auto p = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw Error("");
            const auto den = text.substr(slash + 1);
            const auto q = std::stoll(den, &used);
            if (used != den.size() || q == 0) throw Error("");
            return Rational(p, q);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            const std::string frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 15 || !std::all_of(frac.begin(), frac.end(), [](unsigned char c) { return std::isdigit(c); })) {
                throw Error("");
            }
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            const std::string whole = text.substr(0, dot);
            const bool negative = !whole.empty() && whole.front() == '-';
            const std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
            const std::int64_t f = std::stoll(frac);
            return Rational(w * scale + (negative ? -f : f), scale);
        }
        const auto p = std::stoll(text, &used);
        if (used != text.size()) throw Error("");
        return Rational(p);
    } catch (const std::exception&) {
        throw Error("not a rational number: \"" + text + "\"");
    }
}

Rational genus_formula(const FaceProfile& profile, std::int64_t m) {
    if (m < 1) throw Error("genus_formula: alphabet size must be at least 1");
    if (profile.counts.empty() || profile.faces() == 0) throw Error("genus_formula: empty face profile");
    Rational g(1);
    for (const auto& [k, f] : profile.counts) {
        if (f < 0) throw Error("genus_formula: negative face count");
        g += Rational(k * (m - 1) - 2 * m, 4 * m) * f;
    }
    return g;
}

std::int64_t upper_bound(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw Error("upper_bound: m and n must be positive");
    return m * n;
}

BoundReport certified_lower_bound(const Dfa& dfa) {
    const auto minimal = minimize(dfa).dfa;
    const auto stats = cycle_stats(minimal);
    BoundReport r;
    r.m = minimal.letter_count();
    r.n = minimal.size();
    r.upper = upper_bound(static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(r.n));
    r.alphabet_ok = r.m >= 4;
    r.loop_free = stats.loop_free;
    r.bigon_free = stats.bigon_free;
    if (r.alphabet_ok && r.loop_free && r.bigon_free) {
        r.lower_exact = Rational(1) + Rational(static_cast<std::int64_t>(r.m) - 3, 6) * static_cast<std::int64_t>(r.n);
        r.lower = ceil_of(*r.lower_exact);
    }
    return r;
}

Rational growth_bound(std::int64_t m, std::int64_t n, const Rational& eps) {
    if (m < 4) throw Error("growth_bound: needs an alphabet of at least 4 letters");
    if (n < 0) throw Error("growth_bound: n must be non-negative");
    const Rational coefficient(m - 3, 6 * m);
    if (eps <= 0 || eps >= coefficient) throw Error("growth_bound: eps must lie strictly between 0 and (m-3)/(6m) = " + to_string(coefficient));
    return Rational(1) + (coefficient - eps) * (m * n);
}

std::int64_t blowup_bound(std::int64_t n) {
    if (n < 1 || n > 60) throw Error("blowup_bound: n must lie in [1, 60]");
    const Rational value = Rational(1) + (Rational(n, 4) - 1) * (std::int64_t{1} << (n - 1));
    return ceil_of(value);
}

// ---------------------------------------------------------------------------

namespace {

/// Duplicates state s; the transitions listed in `moved` are redirected to
/// the copy, which inherits every outgoing transition of s.
Dfa split_state(const Dfa& d, StateId s, const std::vector<std::pair<StateId, Letter>>& moved) {
    const auto copy = static_cast<StateId>(d.size());
    Dfa out(d.alphabet(), d.size() + 1, d.initial());
    for (StateId q = 0; q < d.size(); ++q) {
        out.set_final(q, d.is_final(q));
        for (Letter a = 0; a < static_cast<Letter>(d.letter_count()); ++a) out.set_next(q, a, d.next(q, a));
    }
    out.set_final(copy, d.is_final(s));
    for (Letter a = 0; a < static_cast<Letter>(d.letter_count()); ++a) out.set_next(copy, a, d.next(s, a));
    for (const auto& [q, a] : moved) out.set_next(q, a, copy);
    return out;
}

constexpr std::size_t kMaxSplitDepth = 3;
constexpr std::size_t kMaxCandidatesPerLevel = 4000;
constexpr std::size_t kMaxRedirectedIncoming = 10;

std::vector<Dfa> split_variants(const Dfa& d) {
    std::vector<Dfa> out;
    for (StateId s = 0; s < d.size(); ++s) {
        std::vector<std::pair<StateId, Letter>> incoming;
        for (StateId q = 0; q < d.size(); ++q) {
            for (Letter a = 0; a < static_cast<Letter>(d.letter_count()); ++a) {
                if (d.next(q, a) == s) incoming.emplace_back(q, a);
            }
        }
        if (incoming.empty() || incoming.size() > kMaxRedirectedIncoming) continue;
        const std::uint32_t full = (1u << incoming.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            // keep at least one way into s unless s is the initial state
            if (mask == full && s != d.initial()) continue;
            std::vector<std::pair<StateId, Letter>> moved;
            for (std::size_t i = 0; i < incoming.size(); ++i) {
                if (mask >> i & 1u) moved.push_back(incoming[i]);
            }
            out.push_back(split_state(d, s, moved));
        }
    }
    return out;
}

}  // namespace

GenusBracket language_genus(const Dfa& dfa, std::uint64_t budget) {
    const auto minimal = minimize(dfa).dfa;
    const auto report = certified_lower_bound(minimal);

    GenusBracket b;
    if (report.lower) {
        b.lo = *report.lower;
        b.lo_source = LowerSource::Certified;
    }

    b.representative = minimal;
    b.candidates = 1;
    const auto g = underlying_graph(minimal).graph;
    if (auto p = is_planar(g); p.planar) {
        b.hi = 0;
        b.witness = *p.witness;
        return b;
    }
    const auto r = min_genus(g, {.budget = budget});
    b.hi = r.genus;
    b.witness = r.witness;
    if (b.exact()) return b;

    // State-split variants recognize the same language with more states and
    // sometimes lower genus. Search them breadth-first for smaller witnesses.
    std::vector<Dfa> level{minimal};
    for (std::size_t depth = 0; depth < kMaxSplitDepth && !b.exact(); ++depth) {
        std::vector<Dfa> next;
        for (const auto& cand : level) {
            for (auto& v : split_variants(cand)) {
                if (next.size() >= kMaxCandidatesPerLevel) break;
                next.push_back(std::move(v));
            }
        }
        for (const auto& cand : next) {
            ++b.candidates;
            const auto cg = underlying_graph(cand).graph;
            if (auto p = is_planar(cg); p.planar) {
                b.hi = 0;
                b.representative = cand;
                b.witness = *p.witness;
                return b;
            }
            // a full search only pays off when it can still improve hi
            if (b.hi - b.lo >= 2 && search_space(remove_loops(cg)) <= budget) {
                const auto cr = min_genus(cg, {.budget = budget});
                if (cr.genus < b.hi) {
                    b.hi = cr.genus;
                    b.representative = cand;
                    b.witness = cr.witness;
                    if (b.exact()) return b;
                }
            }
        }
        level = std::move(next);
    }
    return b;
}

// ---------------------------------------------------------------------------

BlowupReport blowup_face_constraints(const Dfa& det) {
    const std::size_t n = det.letter_count();
    if (n < 1 || n > 20 || det.size() != (std::size_t{1} << n)) {
        throw Error("blowup_face_constraints: expected 2^n states over an n-letter alphabet");
    }
    BlowupReport r;
    r.n = n;
    r.level.assign(det.size(), 0);
    std::vector<std::size_t> per_level(n + 1, 0);
    for (StateId q = 0; q < det.size(); ++q) {
        std::size_t loops = 0;
        for (Letter a = 0; a < static_cast<Letter>(n); ++a) loops += det.next(q, a) == q;
        r.level[q] = n - loops;
        ++per_level[r.level[q]];
    }
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t binom = 1;
        for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        if (per_level[k] != binom) throw Error("blowup_face_constraints: level sizes are not binomial coefficients");
    }

    r.graded = true;
    r.loopless.vertex_count = det.size();
    for (const auto& t : det.transitions()) {
        if (t.src == t.dst) continue;
        r.loopless.edges.emplace_back(t.src, t.dst);
        if (r.level[t.dst] + 1 != r.level[t.src]) r.graded = false;
    }
    if (r.loopless.edge_count() != n * (std::size_t{1} << (n - 1))) {
        throw Error("blowup_face_constraints: expected n * 2^(n-1) non-loop transitions");
    }
    r.simple = r.loopless.simple();
    return r;
}

FaceConstraintCheck check_face_constraints(const BlowupReport& report, const FaceProfile& profile) {
    FaceConstraintCheck c{true, true, true};
    for (const auto& [k, f] : profile.counts) {
        if (f == 0) continue;
        if (k == 2) c.no_bigons = false;
        if (k % 2 == 1) c.no_odd_faces = false;
        if (k % 2 == 0 && static_cast<std::size_t>(k / 2) >= report.n) c.no_long_faces = false;
    }
    return c;
}

}  // namespace autgenus
