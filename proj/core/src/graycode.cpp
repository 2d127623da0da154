// SPDX-License-Identifier: Apache-2.0
#include "rcch/graycode.hpp"

#include "rcch/error.hpp"

namespace rcch {

namespace {

void check_width(int n) {
    if (n < 0 || n > 62) throw Error(ErrorKind::OutOfRange, "gray code width " + std::to_string(n));
}

}  // namespace

std::string gray(int n, std::uint64_t k) {
    check_width(n);
    std::uint64_t size = std::uint64_t{1} << n;
    if (k >= size)
        throw Error(ErrorKind::OutOfRange,
                    "index " + std::to_string(k) + " for width " + std::to_string(n));
    std::string out;
    out.reserve(n);
    // G_n(k) = 0 G_{n-1}(k) below the midpoint, 1 G_{n-1}(2^n - 1 - k) above it
    for (int m = n; m > 0; --m) {
        std::uint64_t half = std::uint64_t{1} << (m - 1);
        if (k < half) {
            out += '0';
        } else {
            out += '1';
            k = 2 * half - 1 - k;
        }
    }
    return out;
}

std::uint64_t gray_inv(int n, const std::string& bits) {
    check_width(n);
    if (static_cast<int>(bits.size()) != n)
        throw Error(ErrorKind::OutOfRange, "bitstring '" + bits + "' has wrong length");
    // invert the reflection from the innermost level outwards
    std::uint64_t k = 0;
    for (int m = 1; m <= n; ++m) {
        char c = bits[n - m];
        std::uint64_t half = std::uint64_t{1} << (m - 1);
        if (c == '0') {
        } else if (c == '1') {
            k = 2 * half - 1 - k;
        } else {
            throw Error(ErrorKind::OutOfRange, "bitstring '" + bits + "' is not binary");
        }
    }
    return k;
}

int changed_bit(int n, std::uint64_t a) {
    check_width(n);
    if (n == 0 || a + 1 >= (std::uint64_t{1} << n))
        throw Error(ErrorKind::OutOfRange, "no successor for index " + std::to_string(a));
    std::string x = gray(n, a), y = gray(n, a + 1);
    int pos = -1;
    for (int i = 0; i < n; ++i) {
        if (x[i] == y[i]) continue;
        if (pos >= 0) throw Error(ErrorKind::NoSingleFlip, x + " -> " + y);
        pos = i;
    }
    if (pos < 0) throw Error(ErrorKind::NoSingleFlip, x + " -> " + y);
    return pos;
}

std::uint64_t gray_value(int n, std::uint64_t k) {
    std::string s = gray(n, k);
    std::uint64_t v = 0;
    for (char c : s) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    return v;
}

std::uint64_t gray_index(int n, std::uint64_t value) {
    std::string s(n, '0');
    for (int q = 0; q < n; ++q)
        if ((value >> (n - 1 - q)) & 1U) s[q] = '1';
    return gray_inv(n, s);
}

}  // namespace rcch
