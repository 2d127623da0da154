// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "rcch/circuit.hpp"
#include "rcch/error.hpp"
#include "rcch/synth.hpp"

using namespace rcch;

TEST(Synth, IdentityGivesEmptyWord) {
    EXPECT_TRUE(exact_synthesize(RingMatrix::identity(8)).gens.empty());
    EXPECT_TRUE(synthesize_even(RingMatrix::identity(8)).pgens.empty());
}

TEST(Synth, SingleSwap) {
    RingMatrix x = gen_matrix(Gen::x(0, 1), 4);
    Word w = exact_synthesize(x);
    EXPECT_EQ(word_semantics(w), x);
    EXPECT_EQ(word_parities(w), (Parities{0, 1}));
}

TEST(Synth, PPMatrix) {
    RingMatrix pp = pp_matrix();
    std::vector<ColumnStep> trace;
    Word w = exact_synthesize(pp, &trace);
    EXPECT_EQ(word_semantics(w), pp);
    EXPECT_FALSE(trace.empty());
    // both parities are odd, so no paired word exists
    EXPECT_EQ(matrix_parities(pp), (Parities{1, 1}));
    EXPECT_THROW(synthesize_even(pp), Error);
}

TEST(Synth, EvenPairedOutput) {
    RingMatrix m = word_semantics(Word{8, {Gen::h(0, 1), Gen::h(2, 3)}});
    EXPECT_EQ(pword_semantics(synthesize_even(m)), m);
}

TEST(Synth, RejectsOddAndInvalid) {
    auto kind = [](const RingMatrix& m) {
        try {
            synthesize_even(m);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::OutOfRange;
    };
    EXPECT_EQ(kind(gen_matrix(Gen::neg(0), 8)), ErrorKind::OddParity);
    EXPECT_EQ(kind(gen_matrix(Gen::h(0, 1), 4)), ErrorKind::OddParity);
    RingMatrix bad = RingMatrix::identity(4);
    bad.at(0, 1) = RingElem(1);
    EXPECT_EQ(kind(bad), ErrorKind::NotOrthogonal);
    EXPECT_EQ(kind(RingMatrix(2, 3)), ErrorKind::DimensionMismatch);
}

TEST(SynthProperty, LdeDecreasesAlongTrace) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        RingMatrix m = word_semantics(random_word(8, 25, s));
        std::vector<ColumnStep> trace;
        Word w = exact_synthesize(m, &trace);
        EXPECT_EQ(word_semantics(w), m);
        // within one column the (lde, count) measure strictly drops
        for (std::size_t i = 1; i < trace.size(); ++i)
            if (trace[i].column == trace[i - 1].column) {
                EXPECT_LT(std::pair(trace[i].lde, trace[i].count),
                          std::pair(trace[i - 1].lde, trace[i - 1].count));
            }
    }
}

TEST(SynthProperty, RoundTripAndParityInvariance) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        int dim = 2 << (i % 4);
        Word w = random_word(dim, static_cast<int>(rng() % 31), rng());
        RingMatrix m = word_semantics(w);
        Word s = exact_synthesize(m);
        EXPECT_EQ(word_semantics(s), m);
        EXPECT_EQ(word_parities(s), word_parities(w));
    }
}

TEST(SynthProperty, CircuitsSynthesizeToEvenWords) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        RingMatrix m = semantics(random_circuit(3, 10, s));
        PWord p = synthesize_even(m);
        EXPECT_EQ(pword_semantics(p), m);
    }
}
