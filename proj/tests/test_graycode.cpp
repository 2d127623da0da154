// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <bit>

#include "oracle.hpp"
#include "rcch/graycode.hpp"

using namespace rcch;

TEST(Gray, SmallTables) {
    EXPECT_EQ(gray(1, 0), "0");
    EXPECT_EQ(gray(2, 0), "00");
    EXPECT_EQ(gray(2, 1), "01");
    EXPECT_EQ(gray(2, 2), "11");
    EXPECT_EQ(gray(2, 3), "10");
    EXPECT_EQ(gray(3, 4), "110");
    EXPECT_EQ(gray_inv(3, "110"), 4u);
    EXPECT_EQ(gray_inv(5, "00000"), 0u);
}

TEST(Gray, ChangedBit) {
    EXPECT_EQ(changed_bit(2, 0), 1);
    EXPECT_EQ(changed_bit(2, 1), 0);
}

TEST(GrayProperty, ExhaustiveUpToTwelve) {
    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t k = 0; k < dim; ++k) {
            std::uint64_t g = gray_value(n, k);
            ASSERT_EQ(g, oracle::gray(k));
            std::string s = gray(n, k);
            ASSERT_EQ(s.size(), static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q) ASSERT_EQ(s[q] == '1', ((g >> (n - 1 - q)) & 1) != 0);
            ASSERT_EQ(gray_inv(n, s), k);
            ASSERT_EQ(gray_index(n, g), k);
            ASSERT_EQ(static_cast<std::uint64_t>(std::popcount(g)) % 2, k % 2);
            if (k + 1 < dim) {
                std::string t = gray(n, k + 1);
                int diff = 0, at = -1;
                for (int q = 0; q < n; ++q)
                    if (s[q] != t[q]) ++diff, at = q;
                ASSERT_EQ(diff, 1);
                ASSERT_EQ(changed_bit(n, k), at);
            }
        }
    }
}
