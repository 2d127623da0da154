// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rcch/codec.hpp"
#include "rcch/error.hpp"

using namespace rcch;

namespace {

oracle::DMat word_in_circuit_basis(const Word& w, int n) {
    oracle::DMat m = oracle::word(w);
    return n <= 2 ? m : oracle::from_gray(m);
}

std::vector<Gate> primitive_gates(int n) {
    std::vector<Gate> gates;
    for (int q = 0; q < n; ++q) {
        gates.push_back(Gate::h(q));
        gates.push_back(Gate::z(q));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) {
                gates.push_back(Gate::cz(a, b));
                gates.push_back(Gate::ch(a, b));
                gates.push_back(Gate::swap(a, b));
            }
    return gates;
}

}  // namespace

TEST(Codec2, EncodeClauses) {
    EXPECT_EQ(encode2(Circuit{2, {Gate::ch(0, 1)}}).gens, (std::vector<Gen>{Gen::h(2, 3)}));
    EXPECT_EQ(encode2(Circuit{2, {Gate::cz(0, 1)}}).gens, (std::vector<Gen>{Gen::neg(3)}));
    EXPECT_EQ(encode2(Circuit{2, {Gate::h(0)}}).gens, (std::vector<Gen>{Gen::h(0, 2), Gen::h(1, 3)}));
}

TEST(Codec2, EveryGateAgainstOracle) {
    for (const Gate& g : primitive_gates(2)) {
        Circuit c{2, {g}};
        EXPECT_TRUE(oracle::close(oracle::word(encode2(c)), oracle::circuit(c))) << gate_str(g);
    }
}

TEST(Codec2, DecodeClauses) {
    EXPECT_EQ(semantics(decode2_gen(Gen::h(2, 3))), semantics(Circuit{2, {Gate::ch(0, 1)}}));
    EXPECT_EQ(semantics(decode2_gen(Gen::neg(3))), semantics(Circuit{2, {Gate::cz(0, 1)}}));
    EXPECT_EQ(semantics(decode2_gen(Gen::x(1, 2))), semantics(Circuit{2, {Gate::swap(0, 1)}}));
    EXPECT_EQ(decode2_table().size(), 22u);
    for (const auto& [g, c] : decode2_table()) {
        for (const Gate& x : c.gates) EXPECT_TRUE(x.is_primitive());
        EXPECT_TRUE(oracle::close(semantics(c), oracle::gen(g, 4))) << gen_str(g);
    }
}

TEST(Codec2, RoundTrips) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        Circuit c = random_circuit(2, static_cast<int>(rng() % 21), rng());
        EXPECT_TRUE(roundtrip(c));
        EXPECT_TRUE(oracle::close(oracle::word(encode2(c)), oracle::circuit(c)));
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
        Word w = random_word(4, 12, s);
        EXPECT_TRUE(oracle::close(semantics(decode2(w)), oracle::word(w)));
    }
}

TEST(CodecN, ZOnBottomWire) {
    // sign pairs that together flip each odd state exactly once
    PWord w = encode_gate(Gate::z(2), 3);
    std::vector<int> hits(8, 0);
    for (const auto& p : w.pgens) {
        EXPECT_EQ(p.kind, PairKind::ZZ);
        ++hits[p.p[0]];
        ++hits[p.p[1]];
    }
    for (int i = 0; i < 8; ++i) EXPECT_EQ(hits[i], static_cast<int>(oracle::gray(i) & 1)) << i;
    EXPECT_TRUE(encode_n(Circuit{3, {}}).pgens.empty());
}

TEST(CodecN, EncodeClausesAgainstOracle) {
    for (int n : {3, 4}) {
        for (const Gate& g : primitive_gates(n)) {
            Circuit c{n, {g}};
            PWord w = encode_gate(g, n);
            EXPECT_TRUE(oracle::close(word_in_circuit_basis(flatten(w), n), oracle::circuit(c)))
                << n << " " << gate_str(g);
        }
    }
}

TEST(CodecN, HOnTopWireIsHadamardPairs) {
    PWord w = encode_gate(Gate::h(0), 3);
    for (const auto& p : w.pgens) EXPECT_EQ(p.kind, PairKind::HH);
    oracle::DMat want = oracle::kron(oracle::h1(), oracle::eye(4));
    EXPECT_TRUE(oracle::close(word_in_circuit_basis(flatten(w), 3), want));
}

TEST(CodecN, DecodeSpecialCases) {
    EXPECT_TRUE(decode_pair(PairedGen::zz(5, 5), 3).gates.empty());
    Circuit base = decode_pair(PairedGen::hh(0, 1, 3, 2), 3);
    ASSERT_EQ(base.gates.size(), 1u);
    EXPECT_EQ(base.gates[0], base_hh_gate(3));
    Word hh{8, {Gen::h(0, 1), Gen::h(3, 2)}};
    EXPECT_TRUE(oracle::close(semantics(base), word_in_circuit_basis(hh, 3)));
    // Gray neighbours 2 and 3 differ on one wire: a single McZ
    Circuit zz = decode_pair(PairedGen::zz(2, 3), 3);
    ASSERT_EQ(zz.gates.size(), 1u);
    EXPECT_EQ(zz.gates[0].kind, GateKind::McZ);
}

TEST(CodecN, DecodeEveryPairAtDimensionEight) {
    const int n = 3, dim = 8;
    std::size_t n_checked = 0;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            std::vector<PairedGen> ps = {PairedGen::zz(a, b)};
            for (int c = 0; c < dim; ++c)
                if (b != c) ps.push_back(PairedGen::zx(a, b, c));
            if (a != b)
                for (int c = 0; c < dim; ++c)
                    for (int d = 0; d < dim; ++d)
                        if (c != d) {
                            ps.push_back(PairedGen::xx(a, b, c, d));
                            ps.push_back(PairedGen::hh(a, b, c, d));
                        }
            for (const auto& p : ps) {
                Circuit c = decode_pair(p, n);
                ASSERT_TRUE(oracle::close(semantics(c), word_in_circuit_basis(flatten(PWord{dim, {p}}), n)))
                    << pair_str(p);
                ++n_checked;
            }
        }
    EXPECT_GT(n_checked, 6000u);
}

TEST(CodecN, LaddersAndTelescopes) {
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            Word zz{8, {Gen::neg(a), Gen::neg(b)}};
            EXPECT_TRUE(oracle::close(semantics(decode_zz_telescoped(a, b, 3)), word_in_circuit_basis(zz, 3)));
            for (int e : {a, b}) {
                Word zx{8, {Gen::neg(e), Gen::x(a, b)}};
                EXPECT_EQ(word_semantics(flatten(zx_ladder(e, a, b, 8))), word_semantics(zx));
                EXPECT_TRUE(oracle::close(semantics(decode_zx_ladder(e, a, b, 3)), word_in_circuit_basis(zx, 3)));
            }
        }
    EXPECT_THROW(zx_ladder(3, 0, 5, 8), Error);
}

TEST(CodecN, RoundTrips) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        Circuit c = random_circuit(3, static_cast<int>(rng() % 11), rng());
        EXPECT_TRUE(roundtrip(c));
        EXPECT_TRUE(oracle::close(word_in_circuit_basis(flatten(encode_n(c)), 3), oracle::circuit(c)));
    }
    for (int i = 0; i < 10; ++i) EXPECT_TRUE(roundtrip(random_circuit(4, 8, rng())));
}

TEST(CodecN, GrayRelabellingIsInvertible) {
    RingMatrix m = word_semantics(random_word(16, 20, 4));
    EXPECT_EQ(circuit_to_gray_basis(gray_to_circuit_basis(m, 4), 4), m);
}

TEST(Sigma, FixedTupleIsEmpty) {
    SigmaPair sp = sigma(0, 1, 3, 2, 8);
    EXPECT_TRUE(sp.forward.gens.empty());
    EXPECT_TRUE(sp.backward.gens.empty());
}

TEST(Sigma, UpperBlock) {
    SigmaPair sp = sigma(4, 5, 6, 7, 8);
    oracle::DMat f = oracle::word(sp.forward);
    const int src[4] = {0, 1, 3, 2}, dst[4] = {4, 5, 6, 7};
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::fabs(f[dst[j]][src[j]]), 1.0, oracle::kTol);
    EXPECT_TRUE(oracle::close(oracle::mul(oracle::word(sp.backward), f), oracle::eye(8)));
}

TEST(SigmaProperty, RandomTuples) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        int dim = i % 2 ? 16 : 8;
        std::vector<int> v;
        while (v.size() < 4) {
            int x = static_cast<int>(rng() % dim);
            if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        SigmaPair sp = sigma(v[0], v[1], v[2], v[3], dim);
        oracle::DMat f = oracle::word(sp.forward), b = oracle::word(sp.backward);
        ASSERT_TRUE(oracle::close(oracle::mul(b, f), oracle::eye(dim)));
        const int src[4] = {0, 1, 3, 2};
        for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::fabs(f[v[j]][src[j]]), 1.0, oracle::kTol);
        // at most one sign flip away from an honest permutation, outside 0,1,3,2
        int negs = 0;
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < dim; ++r)
                if (f[r][c] < -0.5) {
                    ++negs;
                    EXPECT_TRUE(c != 0 && c != 1 && c != 2 && c != 3);
                }
        EXPECT_LE(negs, 1);
        EXPECT_EQ(flatten(sigma_pword(v[0], v[1], v[2], v[3], dim)), sp.forward);
    }
}

TEST(Codec, Errors) {
    auto kind = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::OutOfRange;
    };
    EXPECT_EQ(kind([] { encode_gate(Gate::z(0), 2); }), ErrorKind::DimensionTooSmall);
    EXPECT_EQ(kind([] { encode_n(Circuit{3, {Gate::x(0)}}); }), ErrorKind::UnsupportedGate);
    EXPECT_EQ(kind([] { decode2(Word{8, {}}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind([] { decode_n(PWord{12, {}}); }), ErrorKind::DimensionNotPowerOfTwo);
    EXPECT_EQ(kind([] { decode_pair(PairedGen::zz(0, 9), 3); }), ErrorKind::IndexOutOfRange);
}
