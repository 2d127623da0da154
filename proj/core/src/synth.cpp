// SPDX-License-Identifier: Apache-2.0
#include "rcch/synth.hpp"

#include <algorithm>
#include <utility>

#include "rcch/error.hpp"

namespace rcch {

namespace {

struct Phases {
    std::vector<Gen> h;     // H block, product order
    std::vector<Gen> rest;  // sign/permutation block, product order
};

std::pair<unsigned, std::size_t> column_measure(const RingMatrix& b, std::size_t j) {
    unsigned k = 0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        unsigned e = b.at(i, j).lde();
        if (e > k) {
            k = e;
            cnt = 0;
        }
        if (e == k) ++cnt;
    }
    return {k, cnt};
}

Phases run(const RingMatrix& a, std::vector<ColumnStep>* trace) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "synthesis needs a square matrix");
    if (!is_orthogonal(a)) throw Error(ErrorKind::NotOrthogonal, "input is not orthogonal");
    const std::size_t n = a.rows();
    RingMatrix b = a;
    Phases out;

    for (std::size_t jj = n; jj-- > 0;) {
        auto [k, cnt] = column_measure(b, jj);
        while (k > 0) {
            std::size_t i1 = n, i2 = n;
            for (std::size_t i = 0; i < n && i1 == n; ++i)
                if (b.at(i, jj).residue_a(k) == 1) i1 = i;
            if (i1 == n) throw Error(ErrorKind::InternalProgressFailure, "no odd residue in column");
            int rb = b.at(i1, jj).residue_b(k);
            for (std::size_t i = i1 + 1; i < n && i2 == n; ++i)
                if (b.at(i, jj).residue_a(k) == 1 && b.at(i, jj).residue_b(k) == rb) i2 = i;
            if (i2 == n) throw Error(ErrorKind::InternalProgressFailure, "no matching residue in column");
            if (trace) trace->push_back({static_cast<int>(jj), k, cnt});
            Gen g = Gen::h(static_cast<int>(i1), static_cast<int>(i2));
            apply_left(g, b);
            out.h.push_back(g);
            auto next = column_measure(b, jj);
            if (next >= std::make_pair(k, cnt))
                throw Error(ErrorKind::InternalProgressFailure, "column measure did not decrease");
            k = next.first;
            cnt = next.second;
        }
    }
    if (!b.is_signed_permutation())
        throw Error(ErrorKind::InternalProgressFailure, "column phase left a non-permutation");

    for (std::size_t jj = n; jj-- > 0;) {
        std::size_t row = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!b.at(i, jj).is_zero()) row = i;
        int tau = b.at(row, jj).is_minus_one() ? 1 : 0;
        if (row == jj && tau == 0) continue;
        if (row > jj) throw Error(ErrorKind::InternalProgressFailure, "permutation phase out of order");
        int ai = static_cast<int>(row), j = static_cast<int>(jj);
        // W = X[a,j] (-1)[a]; the inverse (-1)[a] X[a,j] is what lands in the output
        if (tau) {
            b.negate_row(row);
            out.rest.push_back(Gen::neg(ai));
        }
        if (ai < j) {
            b.swap_rows(row, jj);
            out.rest.push_back(Gen::x(ai, j));
        }
    }
    if (!b.is_identity()) throw Error(ErrorKind::InternalProgressFailure, "residual is not the identity");
    return out;
}

}  // namespace

// W_l ... W_1 A = I gives A = rev(W_1) ... rev(W_l).
Word exact_synthesize(const RingMatrix& a, std::vector<ColumnStep>* trace) {
    Phases p = run(a, trace);
    Word w;
    w.dim = static_cast<int>(a.rows());
    w.gens = std::move(p.h);
    w.gens.insert(w.gens.end(), p.rest.begin(), p.rest.end());
    return w;
}

Parities matrix_parities(const RingMatrix& a) {
    if (a.rows() != a.cols() || !is_orthogonal(a)) throw Error(ErrorKind::NotInGroup, "matrix is not in the group");
    return word_parities(exact_synthesize(a));
}

PWord synthesize_even(const RingMatrix& a) {
    Phases p = run(a, nullptr);
    if (p.h.size() % 2 || p.rest.size() % 2)
        throw Error(ErrorKind::OddParity, "parities (" + std::to_string(p.h.size() % 2) + "," +
                                              std::to_string(p.rest.size() % 2) + ")");
    PWord pw;
    pw.dim = static_cast<int>(a.rows());
    for (std::size_t i = 0; i < p.h.size(); i += 2)
        pw.pgens.push_back(PairedGen::hh(p.h[i].a, p.h[i].b, p.h[i + 1].a, p.h[i + 1].b));
    for (std::size_t i = 0; i < p.rest.size(); i += 2) {
        const Gen& g1 = p.rest[i];
        const Gen& g2 = p.rest[i + 1];
        if (auto pg = make_pair_gen(g1, g2)) {
            pw.pgens.push_back(*pg);
            continue;
        }
        // X[c,d] (-1)[a] = (-1)[tau(a)] X[c,d]
        int c = g1.a, d = g1.b, x = g2.a;
        int t = x == c ? d : x == d ? c : x;
        pw.pgens.push_back(PairedGen::zx(t, c, d));
    }
    return pw;
}

}  // namespace rcch
