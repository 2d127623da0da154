// SPDX-License-Identifier: Apache-2.0
//
// Exact synthesis of orthogonal matrices over Z[1/sqrt2] into generator words.
#pragma once

#include <vector>

#include "rcch/ring.hpp"
#include "rcch/words.hpp"

namespace rcch {

// One H step of the column phase, recorded for diagnostics.
struct ColumnStep {
    int column = 0;
    unsigned lde = 0;       // lde of the column before the step
    std::size_t count = 0;  // entries attaining that lde
};

// Product of the returned word equals `a`.
Word exact_synthesize(const RingMatrix& a, std::vector<ColumnStep>* trace = nullptr);

// Paired output; throws OddParity unless both parities are even.
PWord synthesize_even(const RingMatrix& a);

}  // namespace rcch
