// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace rcch {

// Reflected Gray code. The leftmost character is the top wire.
std::string gray(int n, std::uint64_t k);
std::uint64_t gray_inv(int n, const std::string& bits);

// Position (0 = leftmost) where gray(n, a) and gray(n, a + 1) differ.
int changed_bit(int n, std::uint64_t a);

// Integer views: bit (n - 1 - q) of the result is the character for wire q.
std::uint64_t gray_value(int n, std::uint64_t k);
std::uint64_t gray_index(int n, std::uint64_t value);

}  // namespace rcch
