// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "rcch/error.hpp"
#include "rcch/ring.hpp"

using namespace rcch;

namespace {

RingElem random_elem(std::mt19937_64& rng) {
    auto small = [&] { return static_cast<long>(rng() % 41) - 20; };
    return RingElem(small(), small(), static_cast<unsigned>(rng() % 6));
}

double value(long a, long b, unsigned k) {
    return (a + b * std::sqrt(2.0)) / std::pow(std::sqrt(2.0), k);
}

}  // namespace

TEST(Ring, AddHalvesMakeRootTwo) {
    RingElem r = RingElem::inv_sqrt2_pow(1);
    RingElem s = r + r;
    EXPECT_EQ(s, RingElem(0, 1, 0));
    EXPECT_EQ(s.a(), 0);
    EXPECT_EQ(s.b(), 1);
    EXPECT_EQ(s.k(), 0u);
}

TEST(Ring, AdditiveIdentityAndInverse) {
    RingElem x(3, -2, 3);
    EXPECT_EQ(x + RingElem(0), x);
    EXPECT_TRUE((RingElem(1, 1, 0) + RingElem(-1, -1, 0)).is_zero());
}

TEST(Ring, Products) {
    RingElem r = RingElem::inv_sqrt2_pow(1);
    EXPECT_EQ(r * r, RingElem(1, 0, 2));
    RingElem x(5, 7, 2);
    EXPECT_EQ(x * RingElem(1), x);
    // (1+r2)(-1+r2) = 2 - 1
    EXPECT_TRUE((RingElem(1, 1, 0) * RingElem(-1, 1, 0)).is_one());
}

TEST(Ring, Lde) {
    EXPECT_EQ(RingElem(1).lde(), 0u);
    EXPECT_EQ(RingElem::inv_sqrt2_pow(1).lde(), 1u);
    EXPECT_EQ(RingElem(1, 1, 2).lde(), 2u);
    EXPECT_EQ(lde_elem(RingElem(2, 0, 2)), 0u);  // 2/2 = 1
}

TEST(Ring, CanonicalFormIsUnique) {
    // 2/r2^2 == 1 and r2/r2 == 1
    EXPECT_EQ(RingElem(2, 0, 2), RingElem(1));
    EXPECT_EQ(RingElem(0, 1, 1), RingElem(1));
    EXPECT_EQ(RingElem(4, 2, 3), RingElem(1, 1, 0));  // (4+2r2)/(2r2) = 1+r2
}

TEST(Ring, NoOverflow) {
    RingElem x(1, 1, 0);
    for (int i = 0; i < 200; ++i) x = x * RingElem(1, 1, 0);
    EXPECT_GT(x.a(), Int(1) << 150);
    EXPECT_NEAR(std::log(x.to_double()), 201 * std::log(1 + std::sqrt(2.0)), 1e-6);
}

TEST(RingProperty, MatchesFloatingPoint) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        RingElem x = random_elem(rng), y = random_elem(rng);
        EXPECT_NEAR((x + y).to_double(), x.to_double() + y.to_double(), 1e-9);
        EXPECT_NEAR((x * y).to_double(), x.to_double() * y.to_double(), 1e-9);
        EXPECT_NEAR((x - y).to_double(), x.to_double() - y.to_double(), 1e-9);
        EXPECT_NEAR(x.mul_sqrt2().to_double(), x.to_double() * std::sqrt(2.0), 1e-9);
        EXPECT_NEAR(x.div_sqrt2().to_double(), x.to_double() / std::sqrt(2.0), 1e-9);
    }
}

TEST(RingProperty, RingAxioms) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        RingElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(RingProperty, CanonicalEqualityAgreesWithValue) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        long a = static_cast<long>(rng() % 9) - 4, b = static_cast<long>(rng() % 9) - 4;
        unsigned k = static_cast<unsigned>(rng() % 4);
        RingElem x(a, b, k);
        // scaling numerator and exponent by r2 keeps the value
        RingElem y(2 * b, a, k + 1);
        EXPECT_EQ(x, y);
        EXPECT_NEAR(x.to_double(), value(a, b, k), 1e-12);
        EXPECT_EQ(RingElem::parse(x.str()), x);
    }
}

TEST(Ring, ParseErrors) {
    EXPECT_THROW(RingElem::parse("abc"), ParseError);
    EXPECT_THROW(RingElem::parse("1+2"), ParseError);
    EXPECT_EQ(RingElem::parse("-3"), RingElem(-3));
}

TEST(RingMatrix, HadamardIsInvolution) {
    RingMatrix h(2, 2);
    RingElem r = RingElem::inv_sqrt2_pow(1);
    h.at(0, 0) = r;
    h.at(0, 1) = r;
    h.at(1, 0) = r;
    h.at(1, 1) = -r;
    EXPECT_TRUE(mat_mul(h, h).is_identity());
    EXPECT_TRUE(is_orthogonal(h));
    EXPECT_EQ(mat_mul(RingMatrix::identity(2), h), h);
    EXPECT_EQ(h.column_lde(0), 1u);
}

TEST(RingMatrix, PPMatrixEntries) {
    // (1/(2 r2)) [[r+1,1,1,r-1],[1,-r-1,r-1,-1],[1,r-1,-r-1,-1],[r-1,-1,-1,r+1]]
    const double r = std::sqrt(2.0), s = 1.0 / (2 * r);
    oracle::DMat expect = {{r + 1, 1, 1, r - 1}, {1, -r - 1, r - 1, -1},
                           {1, r - 1, -r - 1, -1}, {r - 1, -1, -1, r + 1}};
    for (auto& row : expect)
        for (auto& v : row) v *= s;
    RingMatrix pp = pp_matrix();
    EXPECT_TRUE(oracle::close(pp, expect));
    EXPECT_TRUE(is_orthogonal(pp));
    EXPECT_TRUE(mat_mul(pp, pp).is_identity());
}

TEST(RingMatrix, Orthogonality) {
    EXPECT_TRUE(is_orthogonal(RingMatrix::identity(4)));
    EXPECT_FALSE(is_orthogonal(RingMatrix(3, 3)));
    RingMatrix m = RingMatrix::identity(2);
    m.at(0, 1) = RingElem(1);
    EXPECT_FALSE(is_orthogonal(m));
}

TEST(RingMatrix, RowColumnActionsMatchProducts) {
    std::mt19937_64 rng(14);
    RingMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = random_elem(rng);
    RingMatrix h = RingMatrix::identity(4);
    RingElem r = RingElem::inv_sqrt2_pow(1);
    h.at(1, 1) = r;
    h.at(1, 3) = r;
    h.at(3, 1) = r;
    h.at(3, 3) = -r;
    RingMatrix a = m;
    a.hadamard_cols(1, 3);
    EXPECT_EQ(a, mat_mul(m, h));
    RingMatrix b = m;
    b.hadamard_rows(1, 3);
    EXPECT_EQ(b, mat_mul(h, m));
    RingMatrix c = m;
    c.swap_cols(0, 2);
    c.swap_cols(0, 2);
    EXPECT_EQ(c, m);
}

TEST(RingMatrix, TextRoundTrip) {
    RingMatrix pp = pp_matrix();
    EXPECT_EQ(RingMatrix::parse(pp.str()), pp);
    EXPECT_THROW(RingMatrix::parse("1 0\n0\n"), ParseError);
    EXPECT_THROW(RingMatrix::parse(""), ParseError);
}

TEST(RingMatrix, DimensionMismatch) {
    try {
        mat_mul(RingMatrix::identity(2), RingMatrix::identity(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}
