// SPDX-License-Identifier: Apache-2.0
#include "rcch/codec.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <map>
#include <optional>

#include "rcch/error.hpp"
#include "rcch/graycode.hpp"

namespace rcch {

namespace {

using U64 = std::uint64_t;

U64 wire_bit(int n, int q) { return U64{1} << (n - 1 - q); }

int gi(int n, U64 state) { return static_cast<int>(gray_index(n, state)); }
U64 gv(int n, int k) { return gray_value(n, static_cast<U64>(k)); }

void require_primitive(const Gate& g) {
    if (!g.is_primitive()) throw Error(ErrorKind::UnsupportedGate, gate_str(g) + " is not a primitive gate");
}

// Word product u1 u2 ... uk as a circuit: uk acts first.
Circuit product(int n, const std::vector<Circuit>& factors) {
    Circuit c;
    c.n_qubits = n;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        c.gates.insert(c.gates.end(), it->gates.begin(), it->gates.end());
    return c;
}

Circuit single(int n, Gate g) {
    Circuit c;
    c.n_qubits = n;
    c.gates.push_back(std::move(g));
    return c;
}

std::vector<Control> controls_except(int n, U64 pattern, std::initializer_list<int> skip) {
    std::vector<Control> cs;
    for (int q = 0; q < n; ++q) {
        if (std::find(skip.begin(), skip.end(), q) != skip.end()) continue;
        cs.push_back({q, (pattern & wire_bit(n, q)) != 0});
    }
    return cs;
}

// Wire where two basis states differ, when they differ in exactly one bit.
std::optional<int> single_flip(int n, U64 x, U64 y) {
    U64 d = x ^ y;
    if (std::popcount(d) != 1) return std::nullopt;
    return n - 1 - std::countr_zero(d);
}

// ------------------------------------------------------------------ two qubits

using Perm = std::array<int, 4>;

Perm gate_perm(const Gate& g) {
    Circuit c = single(2, g);
    RingMatrix m = semantics(c);
    Perm p{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            if (!m.at(i, j).is_zero()) p[j] = i;
    return p;
}

struct PermCircuit {
    Perm perm;
    std::vector<Gate> gates;
};

// Shortest permutation circuit for every element of S4, in BFS order.
std::vector<PermCircuit> permutation_circuits() {
    const std::vector<Gate> gens = {Gate::x(0), Gate::x(1), Gate::swap(0, 1), Gate::cnot(0, 1),
                                    Gate::cnot(1, 0)};
    std::vector<Perm> gp;
    for (const Gate& g : gens) gp.push_back(gate_perm(g));
    std::vector<PermCircuit> out;
    std::map<Perm, bool> seen;
    std::deque<PermCircuit> q;
    q.push_back({{0, 1, 2, 3}, {}});
    seen[{0, 1, 2, 3}] = true;
    while (!q.empty()) {
        PermCircuit cur = q.front();
        q.pop_front();
        out.push_back(cur);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            PermCircuit nxt = cur;
            for (int s = 0; s < 4; ++s) nxt.perm[s] = gp[i][cur.perm[s]];
            if (seen[nxt.perm]) continue;
            seen[nxt.perm] = true;
            nxt.gates.push_back(gens[i]);
            q.push_back(nxt);
        }
    }
    return out;
}

// P g0 P^-1 with P the permutation circuit.
Circuit conjugate(const PermCircuit& p, const Gate& g0) {
    Circuit c;
    c.n_qubits = 2;
    for (auto it = p.gates.rbegin(); it != p.gates.rend(); ++it) c.gates.push_back(*it);
    c.gates.push_back(g0);
    c.gates.insert(c.gates.end(), p.gates.begin(), p.gates.end());
    return expand_shortcuts(c);
}

std::vector<std::pair<Gen, Circuit>> build_decode2_table() {
    std::vector<PermCircuit> perms = permutation_circuits();
    std::vector<Gen> keys;
    for (int a = 0; a < 4; ++a) keys.push_back(Gen::neg(a));
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) keys.push_back(Gen::x(a, b));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) keys.push_back(Gen::h(a, b));

    std::vector<std::pair<Gen, Circuit>> table;
    for (const Gen& g : keys) {
        RingMatrix want = gen_matrix(g, 4);
        const PermCircuit* chosen = nullptr;
        Gate base;
        for (const PermCircuit& p : perms) {
            const Perm& s = p.perm;
            bool ok = false;
            switch (g.kind) {
                case GenKind::Neg: ok = s[3] == g.a; base = Gate::cz(0, 1); break;
                case GenKind::X:
                    ok = std::min(s[2], s[3]) == g.a && std::max(s[2], s[3]) == g.b;
                    base = Gate::cnot(0, 1);
                    break;
                case GenKind::H: ok = s[2] == g.a && s[3] == g.b; base = Gate::ch(0, 1); break;
            }
            if (ok) {
                chosen = &p;
                break;
            }
        }
        if (!chosen) throw Error(ErrorKind::InternalProgressFailure, "no conjugator for " + gen_str(g));
        Circuit c = conjugate(*chosen, base);
        if (semantics(c) != want)
            throw Error(ErrorKind::InternalProgressFailure, "decode table entry for " + gen_str(g));
        table.emplace_back(g, std::move(c));
    }
    return table;
}

}  // namespace

const std::vector<std::pair<Gen, Circuit>>& decode2_table() {
    static const std::vector<std::pair<Gen, Circuit>> table = build_decode2_table();
    return table;
}

Circuit decode2_gen(const Gen& g) {
    validate(g, 4);
    Gen key = g;
    if (key.kind == GenKind::X && key.a > key.b) std::swap(key.a, key.b);
    for (const auto& [k, c] : decode2_table())
        if (k == key) return c;
    throw Error(ErrorKind::InternalProgressFailure, "missing decode entry for " + gen_str(g));
}

Circuit decode2(const Word& w) {
    if (w.dim != 4) throw Error(ErrorKind::DimensionMismatch, "two-qubit decoding needs dimension 4");
    std::vector<Circuit> parts;
    for (const Gen& g : w.gens) parts.push_back(decode2_gen(g));
    return product(2, parts);
}

Word encode2(const Circuit& c) {
    if (c.n_qubits != 2) throw Error(ErrorKind::DimensionMismatch, "two-qubit encoding needs 2 qubits");
    validate(c);
    Word w;
    w.dim = 4;
    // later gates go to the left
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        const Gate& g = *it;
        require_primitive(g);
        std::vector<Gen> part;
        switch (g.kind) {
            case GateKind::Swap: part = {Gen::x(1, 2)}; break;
            case GateKind::H:
                part = g.q0 == 1 ? std::vector<Gen>{Gen::h(0, 1), Gen::h(2, 3)}
                                 : std::vector<Gen>{Gen::h(0, 2), Gen::h(1, 3)};
                break;
            case GateKind::Z:
                part = g.q0 == 1 ? std::vector<Gen>{Gen::neg(1), Gen::neg(3)}
                                 : std::vector<Gen>{Gen::neg(2), Gen::neg(3)};
                break;
            case GateKind::CZ: part = {Gen::neg(3)}; break;
            case GateKind::CH:
                part = g.q0 == 0 ? std::vector<Gen>{Gen::h(2, 3)}
                                 : std::vector<Gen>{Gen::x(1, 2), Gen::h(2, 3), Gen::x(1, 2)};
                break;
            default: break;
        }
        w.gens.insert(w.gens.end(), part.begin(), part.end());
    }
    return w;
}

// ------------------------------------------------------------------ n qubits

int log2_dim(int dim) {
    if (dim < 1 || (dim & (dim - 1)) != 0)
        throw Error(ErrorKind::DimensionNotPowerOfTwo, "dimension " + std::to_string(dim));
    return std::countr_zero(static_cast<unsigned>(dim));
}

PWord encode_gate(const Gate& g, int n) {
    if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "n-qubit encoding needs at least 3 qubits");
    require_primitive(g);
    Circuit probe = single(n, g);
    validate(probe);
    const U64 dim = U64{1} << n;
    std::vector<int> ws = g.wires();
    int r = *std::max_element(ws.begin(), ws.end()) + 1;
    if (r >= n) {
        r = 0;
        while (std::find(ws.begin(), ws.end(), r) != ws.end()) ++r;
    }
    const U64 br = wire_bit(n, r);
    PWord out;
    out.dim = static_cast<int>(dim);
    auto on = [&](U64 s, int q) { return (s & wire_bit(n, q)) != 0; };

    switch (g.kind) {
        case GateKind::Z:
            for (U64 s = 0; s < dim; ++s)
                if (on(s, g.q0) && !(s & br)) out.pgens.push_back(PairedGen::zz(gi(n, s), gi(n, s | br)));
            break;
        case GateKind::CZ:
            for (U64 s = 0; s < dim; ++s)
                if (on(s, g.q0) && on(s, g.q1) && !(s & br))
                    out.pgens.push_back(PairedGen::zz(gi(n, s), gi(n, s | br)));
            break;
        case GateKind::H:
        case GateKind::CH: {
            int t = g.kind == GateKind::H ? g.q0 : g.q1;
            U64 bt = wire_bit(n, t);
            for (U64 s = 0; s < dim; ++s) {
                if (on(s, t) || (s & br)) continue;
                if (g.kind == GateKind::CH && !on(s, g.q0)) continue;
                out.pgens.push_back(
                    PairedGen::hh(gi(n, s), gi(n, s | bt), gi(n, s | br), gi(n, s | bt | br)));
            }
            break;
        }
        case GateKind::Swap: {
            out = encode_gate(Gate::cz(g.q0, g.q1), n);
            U64 ba = wire_bit(n, g.q0), bb = wire_bit(n, g.q1);
            auto p1 = [&]() {
                for (U64 s = 0; s < dim; ++s)
                    if ((s & ba) && (s & bb)) out.pgens.push_back(PairedGen::zx(gi(n, s), gi(n, s ^ bb), gi(n, s)));
            };
            p1();
            for (U64 s = 0; s < dim; ++s)
                if ((s & ba) && (s & bb))
                    out.pgens.push_back(PairedGen::zx(gi(n, s ^ ba), gi(n, s ^ ba), gi(n, s)));
            p1();
            break;
        }
        default: break;
    }
    return out;
}

PWord encode_n(const Circuit& c) {
    if (c.n_qubits < 3) throw Error(ErrorKind::DimensionTooSmall, "n-qubit encoding needs at least 3 qubits");
    validate(c);
    PWord w;
    w.dim = 1 << c.n_qubits;
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        PWord part = encode_gate(*it, c.n_qubits);
        w.pgens.insert(w.pgens.end(), part.pgens.begin(), part.pgens.end());
    }
    return w;
}

Gate base_hh_gate(int n) {
    std::vector<Control> cs;
    for (int q = 0; q + 2 < n; ++q) cs.push_back({q, false});
    return Gate::mch(cs, n - 1, n - 2);
}

namespace {

Circuit mcz_adjacent(int a, int b, int n) {
    U64 va = gv(n, a), vb = gv(n, b);
    int p = *single_flip(n, va, vb);
    return single(n, Gate::mcz(controls_except(n, va, {p}), p));
}

Circuit mczx_adjacent(int e, int a, int b, int n) {
    U64 va = gv(n, a), vb = gv(n, b);
    int p = *single_flip(n, va, vb);
    int sign = (gv(n, e) & wire_bit(n, p)) ? 0 : 1;
    return single(n, Gate::mczx(controls_except(n, va, {p}), p, sign));
}

void check_in_range(const PairedGen& g, int n) { validate(g, 1 << n); }

int tau(int k, int i, int x) { return x == k ? i : x == i ? k : x; }

struct SigmaData {
    int e[4], m[4], mp[4], i[3];
};

SigmaData sigma_data(int a, int b, int c, int d, int dim) {
    if (dim < 8) throw Error(ErrorKind::DimensionTooSmall, "sigma needs dimension at least 8");
    std::array<int, 4> t = {a, b, c, d};
    for (int x : t)
        if (x < 0 || x >= dim) throw Error(ErrorKind::IndexOutOfRange, "sigma index " + std::to_string(x));
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
            if (t[p] == t[q]) throw Error(ErrorKind::IndicesNotDistinct, "sigma indices must be distinct");

    SigmaData s{};
    // composite of the transpositions applied so far, innermost first
    std::vector<std::pair<int, int>> ts;
    auto apply = [&](int x) {
        for (auto [k, i] : ts) x = tau(k, i, x);
        return x;
    };
    s.e[3] = d != 2;
    if (s.e[3]) ts.emplace_back(d, 2);
    s.m[3] = apply(4);
    s.i[2] = apply(3);
    s.e[2] = c != s.i[2];
    if (s.e[2]) ts.emplace_back(c, s.i[2]);
    s.m[2] = apply(4);
    s.i[1] = apply(1);
    s.e[1] = b != s.i[1];
    if (s.e[1]) ts.emplace_back(b, s.i[1]);
    s.m[1] = apply(4);
    s.i[0] = apply(0);
    s.e[0] = a != s.i[0];
    if (s.e[0]) ts.emplace_back(a, s.i[0]);
    s.m[0] = apply(4);
    s.mp[3] = 4;
    s.mp[2] = s.m[3];
    s.mp[1] = s.m[2];
    s.mp[0] = s.m[1];
    return s;
}

}  // namespace

PWord sigma_pword(int a, int b, int c, int d, int dim) {
    SigmaData s = sigma_data(a, b, c, d, dim);
    int k[4] = {a, b, c, d};
    int i[4] = {s.i[0], s.i[1], s.i[2], 2};
    PWord w;
    w.dim = dim;
    for (int t = 0; t < 4; ++t)
        if (s.e[t]) w.pgens.push_back(PairedGen::zx(s.m[t], k[t], i[t]));
    return w;
}

PWord sigma_prime_pword(int a, int b, int c, int d, int dim) {
    SigmaData s = sigma_data(a, b, c, d, dim);
    int k[4] = {a, b, c, d};
    int i[4] = {s.i[0], s.i[1], s.i[2], 2};
    PWord w;
    w.dim = dim;
    for (int t = 3; t >= 0; --t)
        if (s.e[t]) w.pgens.push_back(PairedGen::zx(s.mp[t], k[t], i[t]));
    return w;
}

SigmaPair sigma(int a, int b, int c, int d, int dim) {
    SigmaPair p;
    p.dim = dim;
    p.forward = flatten(sigma_pword(a, b, c, d, dim));
    p.backward = flatten(sigma_prime_pword(a, b, c, d, dim));
    return p;
}

PWord zx_ladder(int e, int a, int b, int dim) {
    if (a > b) std::swap(a, b);
    if (e != a && e != b) throw Error(ErrorKind::PreconditionViolated, "ladder sign must sit on an endpoint");
    PWord w;
    w.dim = dim;
    if (b - a == 1) {
        w.pgens.push_back(PairedGen::zx(e, a, b));
        return w;
    }
    PairedGen left, right;
    PWord mid;
    if ((b - a) % 2 == 1) {
        left = PairedGen::zx(a + 1, a, a + 1);
        right = PairedGen::zx(a, a, a + 1);
        mid = zx_ladder(e == a ? a + 1 : b, a + 1, b, dim);
    } else {
        left = PairedGen::zx(b - 1, b - 1, b);
        right = PairedGen::zx(b, b - 1, b);
        mid = zx_ladder(e == a ? a : b - 1, a, b - 1, dim);
    }
    w.pgens.push_back(left);
    w.pgens.insert(w.pgens.end(), mid.pgens.begin(), mid.pgens.end());
    w.pgens.push_back(right);
    return w;
}

Circuit decode_zx_ladder(int e, int a, int b, int n) {
    PWord w = zx_ladder(e, a, b, 1 << n);
    std::vector<Circuit> parts;
    for (const PairedGen& g : w.pgens) parts.push_back(mczx_adjacent(g.p[0], g.p[1], g.p[2], n));
    return product(n, parts);
}

Circuit decode_zz_telescoped(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    std::vector<Circuit> parts;
    for (int k = a; k < b; ++k) parts.push_back(mcz_adjacent(k, k + 1, n));
    return product(n, parts);
}

Circuit decode_pair(const PairedGen& g, int n) {
    if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "n-qubit decoding needs at least 3 qubits");
    check_in_range(g, n);
    const int dim = 1 << n;
    switch (g.kind) {
        case PairKind::ZZ: {
            int a = g.p[0], b = g.p[1];
            if (a == b) return product(n, {});
            if (single_flip(n, gv(n, a), gv(n, b))) return mcz_adjacent(a, b, n);
            return decode_zz_telescoped(a, b, n);
        }
        case PairKind::ZX: {
            int e = g.p[0], a = std::min(g.p[1], g.p[2]), b = std::max(g.p[1], g.p[2]);
            if (e != a && e != b)
                return product(n, {decode_pair(PairedGen::zz(e, a), n), decode_pair(PairedGen::zx(a, a, b), n)});
            if (single_flip(n, gv(n, a), gv(n, b))) return mczx_adjacent(e, a, b, n);
            return decode_zx_ladder(e, a, b, n);
        }
        case PairKind::XX: {
            int a = g.p[0], b = g.p[1], c = g.p[2], d = g.p[3];
            return product(n, {decode_pair(PairedGen::zx(a, a, b), n), decode_pair(PairedGen::zx(b, c, d), n)});
        }
        case PairKind::HH: {
            int a = g.p[0], b = g.p[1], c = g.p[2], d = g.p[3];
            if (a == c || a == d || b == c || b == d) {
                int e = -1, f = -1;
                for (int x = 0; x < dim && f < 0; ++x) {
                    if (x == a || x == b || x == c || x == d) continue;
                    if (e < 0)
                        e = x;
                    else
                        f = x;
                }
                return product(n, {decode_pair(PairedGen::hh(a, b, e, f), n),
                                   decode_pair(PairedGen::hh(e, f, c, d), n)});
            }
            U64 va = gv(n, a), vb = gv(n, b), vc = gv(n, c), vd = gv(n, d);
            auto u = single_flip(n, va, vb);
            auto v = single_flip(n, va, vc);
            if (u && v && *u != *v && (va & wire_bit(n, *u)) == 0 && (va & wire_bit(n, *v)) == 0 &&
                vd == (va | wire_bit(n, *u) | wire_bit(n, *v)))
                return single(n, Gate::mch(controls_except(n, va, {*u, *v}), *u, *v));
            std::vector<Circuit> parts;
            for (const PairedGen& s : sigma_pword(a, b, c, d, dim).pgens) parts.push_back(decode_pair(s, n));
            parts.push_back(single(n, base_hh_gate(n)));
            for (const PairedGen& s : sigma_prime_pword(a, b, c, d, dim).pgens) parts.push_back(decode_pair(s, n));
            return product(n, parts);
        }
    }
    return product(n, {});
}

Circuit decode_n(const PWord& w) {
    int n = log2_dim(w.dim);
    if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "n-qubit decoding needs at least 3 qubits");
    std::vector<Circuit> parts;
    parts.reserve(w.pgens.size());
    for (const PairedGen& g : w.pgens) parts.push_back(decode_pair(g, n));
    return product(n, parts);
}

RingMatrix gray_to_circuit_basis(const RingMatrix& w, int n) {
    const std::size_t dim = std::size_t{1} << n;
    if (w.rows() != dim || w.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "relabelling");
    std::vector<std::size_t> g(dim);
    for (std::size_t i = 0; i < dim; ++i) g[i] = gv(n, static_cast<int>(i));
    RingMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(g[i], g[j]) = w.at(i, j);
    return m;
}

RingMatrix circuit_to_gray_basis(const RingMatrix& m, int n) {
    const std::size_t dim = std::size_t{1} << n;
    if (m.rows() != dim || m.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "relabelling");
    std::vector<std::size_t> g(dim);
    for (std::size_t i = 0; i < dim; ++i) g[i] = gv(n, static_cast<int>(i));
    RingMatrix w(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) w.at(i, j) = m.at(g[i], g[j]);
    return w;
}

RingMatrix word_as_circuit_matrix(const Word& w, int n) {
    RingMatrix m = word_semantics(w);
    return n <= 2 ? m : gray_to_circuit_basis(m, n);
}

bool roundtrip(const Circuit& c) {
    validate(c);
    for (const Gate& g : c.gates) require_primitive(g);
    if (c.n_qubits < 2) throw Error(ErrorKind::PreconditionViolated, "round trip needs at least 2 qubits");
    RingMatrix want = semantics(c);
    if (c.n_qubits == 2) return semantics(decode2(encode2(c))) == want;
    return semantics(decode_n(encode_n(c))) == want;
}

}  // namespace rcch
