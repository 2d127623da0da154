// SPDX-License-Identifier: Apache-2.0
//
// Canonical forms for H-free words, words with one H pair, and one-qubit circuits.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcch/circuit.hpp"
#include "rcch/words.hpp"

namespace rcch {

// Sign pairs followed by the staircase of signed adjacent transpositions:
//   prod (Z[a_i] Z[b_i]) * prod_{i=1}^{N-1} prod_{j=d_i}^{N-i-1} (Z[j] X[j,j+1])
struct NormalFormB {
    int dim = 1;
    std::vector<std::pair<int, int>> sign_pairs;
    std::vector<int> d;  // d[i-1] = d_i, i = 1..N-1

    bool operator==(const NormalFormB& o) const {
        return dim == o.dim && sign_pairs == o.sign_pairs && d == o.d;
    }
    bool is_identity() const;
};

PWord to_pword(const NormalFormB& nf);
Word to_word(const NormalFormB& nf);
std::string nf_summary(const NormalFormB& nf);

// Throws ContainsH, or OddParity when the signed permutation has odd parity.
NormalFormB nf_hfree(const Word& w);
NormalFormB nf_signed_permutation(const RingMatrix& m);

struct LowHNormalForm {
    std::optional<std::array<int, 4>> head;  // (H[a,b] H[c,d]) on the left
    NormalFormB tail;

    bool operator==(const LowHNormalForm& o) const { return head == o.head && tail == o.tail; }
};

PWord to_pword(const LowHNormalForm& nf);
Word to_word(const LowHNormalForm& nf);
std::string nf_summary(const LowHNormalForm& nf);

// Throws TooManyH unless w has 0 or 2 H generators.
LowHNormalForm nf_low_h(const Word& w);

// Throws PreconditionViolated outside the low-H class.
bool decide_equiv_low_h(const Word& w1, const Word& w2);

enum class OneQubitFamily { Plain, ZPrefixed };

// Plain k: the gates H Z repeated k times. ZPrefixed k: Z, then H Z repeated k times.
struct OneQubitNF {
    OneQubitFamily family = OneQubitFamily::Plain;
    int k = 0;

    bool operator==(const OneQubitNF& o) const { return family == o.family && k == o.k; }
    bool operator<(const OneQubitNF& o) const {
        return std::pair(family, k) < std::pair(o.family, o.k);
    }
};

// Gates in time order on one wire; throws BadAlphabet for anything but H and Z.
OneQubitNF nf_1qubit(const std::vector<Gate>& gates);
Circuit to_circuit(const OneQubitNF& nf);
std::string nf_summary(const OneQubitNF& nf);

}  // namespace rcch
