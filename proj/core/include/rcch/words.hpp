// SPDX-License-Identifier: Apache-2.0
//
// Words over one/two-level generators. A word G1 G2 ... Gk denotes the
// matrix product G1 * G2 * ... * Gk, leftmost factor first.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcch/ring.hpp"

namespace rcch {

enum class GenKind { Neg, X, H };

struct Gen {
    GenKind kind = GenKind::Neg;
    int a = 0;
    int b = -1;

    static Gen neg(int a) { return {GenKind::Neg, a, -1}; }
    static Gen x(int a, int b) { return {GenKind::X, a, b}; }
    static Gen h(int a, int b) { return {GenKind::H, a, b}; }

    bool operator==(const Gen& o) const {
        return kind == o.kind && a == o.a && (kind == GenKind::Neg || b == o.b);
    }
    bool operator!=(const Gen& o) const { return !(*this == o); }
    bool operator<(const Gen& o) const;
};

struct Word {
    int dim = 1;
    std::vector<Gen> gens;

    bool operator==(const Word& o) const { return dim == o.dim && gens == o.gens; }
};

enum class PairKind { ZZ, ZX, XX, HH };

// ZZ: (Z[p0] Z[p1]); ZX: (Z[p0] X[p1,p2]); XX: (X[p0,p1] X[p2,p3]); HH: (H[p0,p1] H[p2,p3])
struct PairedGen {
    PairKind kind = PairKind::ZZ;
    int p[4] = {0, 0, 0, 0};

    static PairedGen zz(int a, int b) { return {PairKind::ZZ, {a, b, 0, 0}}; }
    static PairedGen zx(int a, int c, int d) { return {PairKind::ZX, {a, c, d, 0}}; }
    static PairedGen xx(int a, int b, int c, int d) { return {PairKind::XX, {a, b, c, d}}; }
    static PairedGen hh(int a, int b, int c, int d) { return {PairKind::HH, {a, b, c, d}}; }

    Gen first() const;
    Gen second() const;

    bool operator==(const PairedGen& o) const;
    bool operator!=(const PairedGen& o) const { return !(*this == o); }
};

// The pair (g1 g2) when it has one of the four allowed shapes.
std::optional<PairedGen> make_pair_gen(const Gen& g1, const Gen& g2);

struct PWord {
    int dim = 1;
    std::vector<PairedGen> pgens;

    bool operator==(const PWord& o) const { return dim == o.dim && pgens == o.pgens; }
};

void validate(const Gen& g, int dim);
void validate(const Word& w);
void validate(const PairedGen& g, int dim);
void validate(const PWord& w);

RingMatrix gen_matrix(const Gen& g, int dim);

// M <- M * g and M <- g * M
void apply_right(RingMatrix& m, const Gen& g);
void apply_left(const Gen& g, RingMatrix& m);

RingMatrix word_semantics(const Word& w);
RingMatrix pword_semantics(const PWord& pw);
Word flatten(const PWord& pw);

// Self-inverse generators: the inverse is the reversed word.
Word inverse(const Word& w);
PWord inverse(const PWord& pw);
Word concat(const Word& u, const Word& v);

struct Parities {
    int h = 0;
    int zx = 0;

    bool operator==(const Parities& o) const { return h == o.h && zx == o.zx; }
};

Parities word_parities(const Word& w);
Parities matrix_parities(const RingMatrix& a);

std::string gen_str(const Gen& g);
std::string pair_str(const PairedGen& g);
// Without the dimension header.
std::string word_body_str(const Word& w);
std::string pword_body_str(const PWord& w);
std::string print_word(const Word& w);
std::string print_pword(const PWord& w);

// Tokens only; dimension supplied by the caller.
Word parse_word_body(std::string_view text, int dim);
PWord parse_pword_body(std::string_view text, int dim);
// With a `dim N` header.
Word parse_word(std::string_view text);
PWord parse_pword(std::string_view text);

Word random_word(int dim, int len, std::uint64_t seed, bool allow_h = true);

}  // namespace rcch
