// SPDX-License-Identifier: Apache-2.0
//
// Floating-point reference models, written without touching the library's
// own simulators. Tests compare exact results against these.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rcch/circuit.hpp"
#include "rcch/ring.hpp"
#include "rcch/words.hpp"

namespace oracle {

inline constexpr double kTol = 1e-9;

using DMat = std::vector<std::vector<double>>;

inline DMat eye(int n) {
    DMat m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline DMat mul(const DMat& a, const DMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    DMat c(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0.0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline DMat to_dmat(const rcch::RingMatrix& m) {
    DMat d(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j).to_double();
    return d;
}

inline bool close(const DMat& a, const DMat& b, double tol = kTol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (std::fabs(a[i][j] - b[i][j]) > tol) return false;
    }
    return true;
}

inline bool close(const rcch::RingMatrix& a, const DMat& b, double tol = kTol) {
    return close(to_dmat(a), b, tol);
}

inline std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

// Kronecker product.
inline DMat kron(const DMat& a, const DMat& b) {
    const std::size_t ra = a.size(), rb = b.size();
    DMat c(ra * rb, std::vector<double>(ra * rb, 0.0));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < rb; ++l) c[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return c;
}

inline DMat h1() {
    const double r = 1.0 / std::sqrt(2.0);
    return {{r, r}, {r, -r}};
}
inline DMat z1() { return {{1, 0}, {0, -1}}; }
inline DMat x1() { return {{0, 1}, {1, 0}}; }

// Permutation matrix sending basis state s to perm(s) (column s, row perm(s)).
template <class F>
DMat permutation(int n, F perm) {
    const int dim = 1 << n;
    DMat m(dim, std::vector<double>(dim, 0.0));
    for (int s = 0; s < dim; ++s) m[perm(s)][s] = 1.0;
    return m;
}

// Swap of wires a and b as a state permutation; wire 0 is the top bit.
inline DMat wire_swap(int n, int a, int b) {
    return permutation(n, [&](int s) {
        int ba = (s >> (n - 1 - a)) & 1, bb = (s >> (n - 1 - b)) & 1;
        int t = s & ~((1 << (n - 1 - a)) | (1 << (n - 1 - b)));
        return t | (ba << (n - 1 - b)) | (bb << (n - 1 - a));
    });
}

// One-qubit gate u on wire q as id (x) u (x) id.
inline DMat on_wire(int n, int q, const DMat& u) {
    DMat m = eye(1);
    for (int w = 0; w < n; ++w) m = kron(m, w == q ? u : eye(2));
    return m;
}

// Controlled u with control c and target t, built on wires (0, 1) and moved
// into place by conjugating with wire swaps.
inline DMat controlled(int n, int c, int t, const DMat& u) {
    DMat cu = eye(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) cu[2 + i][2 + j] = u[i][j];
    DMat base = kron(cu, eye(1 << (n - 2)));
    // permutation p taking wire 0 -> c, wire 1 -> t
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[i] = i;
    DMat p = eye(1 << n);
    auto place = [&](int from, int to) {
        if (where[from] == to) return;
        int other = -1;
        for (int i = 0; i < n; ++i)
            if (where[i] == to) other = i;
        p = mul(wire_swap(n, where[from], to), p);
        where[other] = where[from];
        where[from] = to;
    };
    place(0, c);
    place(1, t);
    DMat pt(p.size(), std::vector<double>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) pt[i][j] = p[j][i];
    return mul(mul(p, base), pt);
}

inline DMat gate(int n, const rcch::Gate& g) {
    using K = rcch::GateKind;
    switch (g.kind) {
        case K::H: return on_wire(n, g.q0, h1());
        case K::Z: return on_wire(n, g.q0, z1());
        case K::X: return on_wire(n, g.q0, x1());
        case K::CZ: return controlled(n, g.q0, g.q1, z1());
        case K::CH: return controlled(n, g.q0, g.q1, h1());
        case K::Cnot: return controlled(n, g.q0, g.q1, x1());
        case K::Swap: return wire_swap(n, g.q0, g.q1);
        default: return {};
    }
}

// Gates act in time order, so later gates multiply on the left.
inline DMat circuit(const rcch::Circuit& c) {
    DMat m = eye(1 << c.n_qubits);
    for (const auto& g : c.gates) m = mul(gate(c.n_qubits, g), m);
    return m;
}

inline DMat gen(const rcch::Gen& g, int dim) {
    DMat m = eye(dim);
    switch (g.kind) {
        case rcch::GenKind::Neg: m[g.a][g.a] = -1; break;
        case rcch::GenKind::X:
            m[g.a][g.a] = m[g.b][g.b] = 0;
            m[g.a][g.b] = m[g.b][g.a] = 1;
            break;
        case rcch::GenKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            m[g.a][g.a] = r;
            m[g.a][g.b] = r;
            m[g.b][g.a] = r;
            m[g.b][g.b] = -r;
            break;
        }
    }
    return m;
}

inline DMat word(const rcch::Word& w) {
    DMat m = eye(w.dim);
    for (const auto& g : w.gens) m = mul(m, gen(g, w.dim));
    return m;
}

// Re-index a Gray-ordered word matrix into the circuit basis.
inline DMat from_gray(const DMat& w) {
    const std::size_t dim = w.size();
    DMat m(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m[gray(i)][gray(j)] = w[i][j];
    return m;
}

}  // namespace oracle
