#include <algorithm>
#include <cctype>

#include "autgenus/error.hpp"
#include "autgenus/planarnfa.hpp"

namespace autgenus {

Regex Regex::alt(Regex r, Regex s) { return {Kind::Union, {}, {std::move(r), std::move(s)}}; }
Regex Regex::cat(Regex r, Regex s) { return {Kind::Concat, {}, {std::move(r), std::move(s)}}; }
Regex Regex::plus(Regex r) { return {Kind::Plus, {}, {std::move(r)}}; }
Regex Regex::star(Regex r) { return {Kind::Star, {}, {std::move(r)}}; }

std::size_t Regex::depth() const {
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return children.empty() ? 0 : d + 1;
}

bool Regex::has_star() const {
    if (kind == Kind::Star) return true;
    for (const auto& c : children) {
        if (c.has_star()) return true;
    }
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Regex parse() {
        auto r = parse_union();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("regex syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int peek() {
        skip_space();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    static bool starts_atom(int c) { return c == '(' || c == '0' || (c >= 0 && std::isalpha(c)); }

    Regex parse_union() {
        auto r = parse_concat();
        while (peek() == '+') {
            ++pos_;
            r = Regex::alt(std::move(r), parse_concat());
        }
        return r;
    }

    Regex parse_concat() {
        auto r = parse_postfix();
        for (;;) {
            const int c = peek();
            if (c == '.') {
                ++pos_;
            } else if (!starts_atom(c)) {
                break;
            }
            r = Regex::cat(std::move(r), parse_postfix());
        }
        return r;
    }

    Regex parse_postfix() {
        auto r = parse_atom();
        for (;;) {
            const int c = peek();
            if (c == '*') {
                ++pos_;
                r = Regex::star(std::move(r));
            } else if (c == '^') {
                ++pos_;
                if (pos_ < text_.size() && text_[pos_] == '+') {
                    r = Regex::plus(std::move(r));
                } else if (pos_ < text_.size() && text_[pos_] == '*') {
                    r = Regex::star(std::move(r));
                } else {
                    fail("expected '+' or '*' after '^'");
                }
                ++pos_;
            } else {
                return r;
            }
        }
    }

    Regex parse_atom() {
        const int c = peek();
        if (c == -1) fail("unexpected end of input");
        if (c == '(') {
            ++pos_;
            auto r = parse_union();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '0') {
            ++pos_;
            return Regex::empty();
        }
        if (std::isalpha(c)) {
            ++pos_;
            return Regex::symbol(std::string(1, static_cast<char>(c)));
        }
        fail("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
    }
};

// 0 union, 1 concat, 2 postfix, 3 atom
std::string print(const Regex& r, int context) {
    using K = Regex::Kind;
    std::string s;
    int own = 3;
    switch (r.kind) {
        case K::Empty: return "0";
        case K::Letter: return r.letter;
        case K::Union:
            own = 0;
            s = print(r.children[0], 0) + "+" + print(r.children[1], 1);
            break;
        case K::Concat:
            own = 1;
            s = print(r.children[0], 1) + print(r.children[1], 2);
            break;
        case K::Plus:
            own = 2;
            s = print(r.children[0], 2) + "^+";
            break;
        case K::Star:
            own = 2;
            s = print(r.children[0], 2) + "^*";
            break;
    }
    return own < context ? "(" + s + ")" : s;
}

void collect_letters(const Regex& r, std::vector<std::string>& out) {
    if (r.kind == Regex::Kind::Letter && std::find(out.begin(), out.end(), r.letter) == out.end()) out.push_back(r.letter);
    for (const auto& c : r.children) collect_letters(c, out);
}

struct Fragment {
    StateId in;
    StateId out;
};

class Thompson {
public:
    Thompson(Nfa& nfa) : nfa_(nfa) {}

    Fragment build(const Regex& r) {
        using K = Regex::Kind;
        const Fragment f{fresh(), fresh()};
        switch (r.kind) {
            case K::Empty: break;
            case K::Letter: {
                const auto a = nfa_.alphabet.find(r.letter);
                if (!a) throw Error("regex letter '" + r.letter + "' is not in the alphabet");
                edge(f.in, *a, f.out);
                break;
            }
            case K::Union:
                for (const auto& c : r.children) {
                    const auto g = build(c);
                    edge(f.in, kEpsilon, g.in);
                    edge(g.out, kEpsilon, f.out);
                }
                break;
            case K::Concat: {
                const auto g = build(r.children[0]);
                const auto h = build(r.children[1]);
                edge(f.in, kEpsilon, g.in);
                edge(g.out, kEpsilon, h.in);
                edge(h.out, kEpsilon, f.out);
                break;
            }
            case K::Plus:
            case K::Star: {
                const auto g = build(r.children[0]);
                edge(f.in, kEpsilon, g.in);
                edge(g.out, kEpsilon, f.out);
                edge(g.out, kEpsilon, g.in);
                if (r.kind == K::Star) edge(f.in, kEpsilon, f.out);
                break;
            }
        }
        return f;
    }

private:
    Nfa& nfa_;

    StateId fresh() { return static_cast<StateId>(nfa_.states++); }
    void edge(StateId p, Letter a, StateId q) { nfa_.transitions.push_back({p, a, q}); }
};

}  // namespace

Nfa thompson_nfa(const Regex& r, const Alphabet& alphabet) {
    Nfa nfa;
    nfa.alphabet = alphabet.size() > 0 ? alphabet : regex_alphabet(r);
    const auto f = Thompson(nfa).build(r);
    nfa.initial = {f.in};
    nfa.finals = {f.out};
    nfa.normalize();
    return nfa;
}

Regex parse_regex(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Regex& r) { return print(r, 0); }

std::vector<std::string> regex_letters(const Regex& r) {
    std::vector<std::string> out;
    collect_letters(r, out);
    return out;
}

Alphabet regex_alphabet(const Regex& r) {
    auto letters = regex_letters(r);
    if (letters.empty()) letters.push_back("a");
    return Alphabet(std::move(letters));
}

}  // namespace autgenus
