// SPDX-License-Identifier: Apache-2.0
#include "rcch/words.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <tuple>

#include "rcch/error.hpp"

namespace rcch {

bool Gen::operator<(const Gen& o) const {
    int b1 = kind == GenKind::Neg ? -1 : b, b2 = o.kind == GenKind::Neg ? -1 : o.b;
    return std::tie(kind, a, b1) < std::tie(o.kind, o.a, b2);
}

Gen PairedGen::first() const {
    switch (kind) {
        case PairKind::ZZ:
        case PairKind::ZX: return Gen::neg(p[0]);
        case PairKind::XX: return Gen::x(p[0], p[1]);
        case PairKind::HH: return Gen::h(p[0], p[1]);
    }
    return {};
}

Gen PairedGen::second() const {
    switch (kind) {
        case PairKind::ZZ: return Gen::neg(p[1]);
        case PairKind::ZX: return Gen::x(p[1], p[2]);
        case PairKind::XX: return Gen::x(p[2], p[3]);
        case PairKind::HH: return Gen::h(p[2], p[3]);
    }
    return {};
}

bool PairedGen::operator==(const PairedGen& o) const {
    return kind == o.kind && first() == o.first() && second() == o.second();
}

std::optional<PairedGen> make_pair_gen(const Gen& g1, const Gen& g2) {
    if (g1.kind == GenKind::Neg && g2.kind == GenKind::Neg) return PairedGen::zz(g1.a, g2.a);
    if (g1.kind == GenKind::Neg && g2.kind == GenKind::X) return PairedGen::zx(g1.a, g2.a, g2.b);
    if (g1.kind == GenKind::X && g2.kind == GenKind::X) return PairedGen::xx(g1.a, g1.b, g2.a, g2.b);
    if (g1.kind == GenKind::H && g2.kind == GenKind::H) return PairedGen::hh(g1.a, g1.b, g2.a, g2.b);
    return std::nullopt;
}

void validate(const Gen& g, int dim) {
    auto in = [&](int i) { return i >= 0 && i < dim; };
    if (!in(g.a) || (g.kind != GenKind::Neg && !in(g.b)))
        throw Error(ErrorKind::IndexOutOfRange, gen_str(g) + " in dimension " + std::to_string(dim));
    if (g.kind != GenKind::Neg && g.a == g.b)
        throw Error(ErrorKind::IndicesNotDistinct, gen_str(g));
}

void validate(const Word& w) {
    for (const Gen& g : w.gens) validate(g, w.dim);
}

void validate(const PairedGen& g, int dim) {
    validate(g.first(), dim);
    validate(g.second(), dim);
}

void validate(const PWord& w) {
    for (const PairedGen& g : w.pgens) validate(g, w.dim);
}

RingMatrix gen_matrix(const Gen& g, int dim) {
    validate(g, dim);
    RingMatrix m = RingMatrix::identity(dim);
    apply_right(m, g);
    return m;
}

void apply_right(RingMatrix& m, const Gen& g) {
    switch (g.kind) {
        case GenKind::Neg: m.negate_col(g.a); break;
        case GenKind::X: m.swap_cols(g.a, g.b); break;
        case GenKind::H: m.hadamard_cols(g.a, g.b); break;
    }
}

void apply_left(const Gen& g, RingMatrix& m) {
    switch (g.kind) {
        case GenKind::Neg: m.negate_row(g.a); break;
        case GenKind::X: m.swap_rows(g.a, g.b); break;
        case GenKind::H: m.hadamard_rows(g.a, g.b); break;
    }
}

RingMatrix word_semantics(const Word& w) {
    validate(w);
    RingMatrix m = RingMatrix::identity(w.dim);
    for (const Gen& g : w.gens) apply_right(m, g);
    return m;
}

Word flatten(const PWord& pw) {
    Word w;
    w.dim = pw.dim;
    w.gens.reserve(2 * pw.pgens.size());
    for (const PairedGen& g : pw.pgens) {
        w.gens.push_back(g.first());
        w.gens.push_back(g.second());
    }
    return w;
}

RingMatrix pword_semantics(const PWord& pw) { return word_semantics(flatten(pw)); }

Word inverse(const Word& w) {
    Word r = w;
    std::reverse(r.gens.begin(), r.gens.end());
    return r;
}

PWord inverse(const PWord& pw) {
    PWord r;
    r.dim = pw.dim;
    for (auto it = pw.pgens.rbegin(); it != pw.pgens.rend(); ++it) {
        // (g1 g2)^-1 = g2 g1, re-expressed as an allowed shape
        const PairedGen& g = *it;
        switch (g.kind) {
            case PairKind::ZZ: r.pgens.push_back(PairedGen::zz(g.p[1], g.p[0])); break;
            case PairKind::XX: r.pgens.push_back(PairedGen::xx(g.p[2], g.p[3], g.p[0], g.p[1])); break;
            case PairKind::HH: r.pgens.push_back(PairedGen::hh(g.p[2], g.p[3], g.p[0], g.p[1])); break;
            case PairKind::ZX: {
                // X_[c,d] Z_a = Z_{tau(a)} X_[c,d]
                int a = g.p[0], c = g.p[1], d = g.p[2];
                int t = a == c ? d : a == d ? c : a;
                r.pgens.push_back(PairedGen::zx(t, c, d));
                break;
            }
        }
    }
    return r;
}

Word concat(const Word& u, const Word& v) {
    if (u.dim != v.dim) throw Error(ErrorKind::DimensionMismatch, "concatenating words");
    Word w = u;
    w.gens.insert(w.gens.end(), v.gens.begin(), v.gens.end());
    return w;
}

Parities word_parities(const Word& w) {
    Parities p;
    for (const Gen& g : w.gens) {
        if (g.kind == GenKind::H)
            p.h ^= 1;
        else
            p.zx ^= 1;
    }
    return p;
}

std::string gen_str(const Gen& g) {
    switch (g.kind) {
        case GenKind::Neg: return "Z[" + std::to_string(g.a) + "]";
        case GenKind::X: return "X[" + std::to_string(g.a) + "," + std::to_string(g.b) + "]";
        case GenKind::H: return "H[" + std::to_string(g.a) + "," + std::to_string(g.b) + "]";
    }
    return "?";
}

std::string pair_str(const PairedGen& g) {
    return "(" + gen_str(g.first()) + " " + gen_str(g.second()) + ")";
}

std::string word_body_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.gens.size(); ++i) {
        if (i) s += ' ';
        s += gen_str(w.gens[i]);
    }
    return s;
}

std::string pword_body_str(const PWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.pgens.size(); ++i) {
        if (i) s += ' ';
        s += pair_str(w.pgens[i]);
    }
    return s;
}

std::string print_word(const Word& w) {
    return "dim " + std::to_string(w.dim) + "\n" + word_body_str(w) + "\n";
}

std::string print_pword(const PWord& w) {
    return "dim " + std::to_string(w.dim) + "\n" + pword_body_str(w) + "\n";
}

namespace {

struct Token {
    enum Kind { GenTok, Open, Close } kind;
    Gen gen;
    int line, col;
};

std::vector<Token> tokenize(std::string_view text, int first_line) {
    std::vector<Token> out;
    int line = first_line, col = 1;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) { throw ParseError(line, col, what); };
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto read_int = [&]() {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail("expected index");
        int v = std::stoi(std::string(text.substr(i, j - i)));
        advance(j - i);
        return v;
    };
    auto expect = [&](char ch) {
        if (i >= text.size() || text[i] != ch) fail(std::string("expected '") + ch + "'");
        advance(1);
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        int tl = line, tc = col;
        if (ch == '(' || ch == ')') {
            out.push_back(Token{ch == '(' ? Token::Open : Token::Close, {}, tl, tc});
            advance(1);
            continue;
        }
        if (text.substr(i, 3) == "eps") {
            advance(3);
            continue;
        }
        if (ch != 'Z' && ch != 'X' && ch != 'H') fail(std::string("unexpected character '") + ch + "'");
        advance(1);
        expect('[');
        int a = read_int();
        Gen g;
        if (ch == 'Z') {
            g = Gen::neg(a);
        } else {
            expect(',');
            int b = read_int();
            g = ch == 'X' ? Gen::x(a, b) : Gen::h(a, b);
        }
        expect(']');
        out.push_back(Token{Token::GenTok, g, tl, tc});
    }
    return out;
}

void check_gen(const Token& t, int dim) {
    try {
        validate(t.gen, dim);
    } catch (const Error& e) {
        throw ParseError(t.line, t.col, e.what());
    }
}

// Split off a `dim N` header line.
std::pair<int, std::string_view> header(std::string_view text, int& body_line) {
    std::size_t i = 0;
    int line = 1;
    while (true) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        if (i < text.size() && text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        }
        if (i < text.size() && text[i] == '\n') {
            ++i;
            ++line;
            continue;
        }
        break;
    }
    if (text.substr(i, 3) != "dim") throw ParseError(line, static_cast<int>(i) + 1, "expected header 'dim N'");
    std::size_t j = i + 3;
    while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
    std::size_t k = j;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (k == j) throw ParseError(line, static_cast<int>(j) + 1, "expected dimension");
    int dim = std::stoi(std::string(text.substr(j, k - j)));
    if (dim < 1) throw ParseError(line, static_cast<int>(j) + 1, "dimension must be positive");
    body_line = line;
    return {dim, text.substr(k)};
}

// Parentheses group pairs and are otherwise ignored.
Word word_from_tokens(const std::vector<Token>& toks, int dim) {
    Word w;
    w.dim = dim;
    int depth = 0;
    for (const Token& t : toks) {
        if (t.kind == Token::Open) {
            if (++depth > 1) throw ParseError(t.line, t.col, "nested parentheses");
        } else if (t.kind == Token::Close) {
            if (--depth < 0) throw ParseError(t.line, t.col, "unbalanced ')'");
        } else {
            check_gen(t, dim);
            w.gens.push_back(t.gen);
        }
    }
    if (depth != 0) throw ParseError(toks.back().line, toks.back().col, "unclosed '('");
    return w;
}

PWord pword_from_tokens(const std::vector<Token>& toks, int dim) {
    PWord w;
    w.dim = dim;
    std::size_t i = 0;
    while (i < toks.size()) {
        const Token& open = toks[i];
        if (open.kind != Token::Open) throw ParseError(open.line, open.col, "expected '(' starting a pair");
        if (i + 3 >= toks.size())
            throw ParseError(open.line, open.col, "incomplete pair");
        const Token& t1 = toks[i + 1];
        const Token& t2 = toks[i + 2];
        const Token& close = toks[i + 3];
        if (t1.kind != Token::GenTok || t2.kind != Token::GenTok || close.kind != Token::Close)
            throw ParseError(open.line, open.col, "a pair holds exactly two generators");
        check_gen(t1, dim);
        check_gen(t2, dim);
        auto p = make_pair_gen(t1.gen, t2.gen);
        if (!p)
            throw ParseError(open.line, open.col,
                             "pair (" + gen_str(t1.gen) + " " + gen_str(t2.gen) + ") has no allowed shape");
        w.pgens.push_back(*p);
        i += 4;
    }
    return w;
}

}  // namespace

Word parse_word_body(std::string_view text, int dim) { return word_from_tokens(tokenize(text, 1), dim); }

PWord parse_pword_body(std::string_view text, int dim) {
    return pword_from_tokens(tokenize(text, 1), dim);
}

Word parse_word(std::string_view text) {
    int line = 1;
    auto [dim, body] = header(text, line);
    return word_from_tokens(tokenize(body, line), dim);
}

PWord parse_pword(std::string_view text) {
    int line = 1;
    auto [dim, body] = header(text, line);
    return pword_from_tokens(tokenize(body, line), dim);
}

Word random_word(int dim, int len, std::uint64_t seed, bool allow_h) {
    if (dim < 1) throw Error(ErrorKind::DimensionTooSmall, "random word dimension");
    std::mt19937_64 rng(seed);
    Word w;
    w.dim = dim;
    int kinds = dim < 2 ? 1 : (allow_h ? 3 : 2);
    for (int i = 0; i < len; ++i) {
        int k = static_cast<int>(rng() % kinds);
        int a = static_cast<int>(rng() % dim);
        if (k == 0) {
            w.gens.push_back(Gen::neg(a));
            continue;
        }
        int b = static_cast<int>(rng() % (dim - 1));
        if (b >= a) ++b;
        if (k == 1)
            w.gens.push_back(Gen::x(std::min(a, b), std::max(a, b)));
        else
            w.gens.push_back(Gen::h(a, b));
    }
    return w;
}

}  // namespace rcch
