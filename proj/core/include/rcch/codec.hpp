// SPDX-License-Identifier: Apache-2.0
//
// Translations between circuits and generator words.
//
// At two qubits word indices are binary basis states. From three qubits on,
// word index i stands for the basis state whose bits are gray(n, i).
#pragma once

#include <utility>
#include <vector>

#include "rcch/circuit.hpp"
#include "rcch/words.hpp"

namespace rcch {

Word encode2(const Circuit& c);
Circuit decode2(const Word& w);
Circuit decode2_gen(const Gen& g);
// All 22 entries, in a fixed order.
const std::vector<std::pair<Gen, Circuit>>& decode2_table();

// Clause for a single primitive gate on n >= 3 wires.
PWord encode_gate(const Gate& g, int n);
PWord encode_n(const Circuit& c);

Circuit decode_pair(const PairedGen& g, int n);
Circuit decode_n(const PWord& w);

// The recursive ladder for (Z[e] X[a,b]) with e in {a,b}, as adjacent pairs.
PWord zx_ladder(int e, int a, int b, int dim);
// The same decoded pair by pair, bypassing the single-gate compiled form.
Circuit decode_zx_ladder(int e, int a, int b, int n);
// (Z[a] Z[b]) as a telescoped product of adjacent pairs.
Circuit decode_zz_telescoped(int a, int b, int n);

// McH acting as H[0,1] H[3,2].
Gate base_hh_gate(int n);

struct SigmaPair {
    int dim = 8;
    Word forward;
    Word backward;
};

SigmaPair sigma(int a, int b, int c, int d, int dim);
// The same factors as paired generators.
PWord sigma_pword(int a, int b, int c, int d, int dim);
PWord sigma_prime_pword(int a, int b, int c, int d, int dim);

// Gray-indexed matrix <-> circuit-basis matrix.
RingMatrix gray_to_circuit_basis(const RingMatrix& w, int n);
RingMatrix circuit_to_gray_basis(const RingMatrix& m, int n);

// Semantics of a word as a circuit-basis matrix (binary at n = 2, Gray above).
RingMatrix word_as_circuit_matrix(const Word& w, int n);

// decode(encode(c)) has the semantics of c.
bool roundtrip(const Circuit& c);

int log2_dim(int dim);

}  // namespace rcch
