// SPDX-License-Identifier: Apache-2.0
//
// Circuits over H, Z, CZ, CH plus shortcut and macro gates.
// Basis states are indexed with wire 0 as the most significant bit.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rcch/ring.hpp"

namespace rcch {

enum class GateKind { H, Z, CZ, CH, Swap, X, Cnot, McZ, McH, McZX, PPair };

struct Control {
    int qubit = 0;
    bool black = true;  // fires on |1> when black, on |0> when white

    bool operator==(const Control& o) const { return qubit == o.qubit && black == o.black; }
};

struct Gate {
    GateKind kind = GateKind::H;
    // H/Z/X: q0. CZ/Swap/PPair: q0,q1. CH/Cnot: q0 = control, q1 = target.
    int q0 = 0;
    int q1 = -1;
    std::vector<Control> controls;  // macro gates
    int target = -1;                // McH, McZX
    int dashed = -1;                // McZ, McH
    int sign = 0;                   // McZX: applies (-1)^sign Z X

    static Gate make(GateKind k, int a = 0, int b = -1) {
        Gate g;
        g.kind = k;
        g.q0 = a;
        g.q1 = b;
        return g;
    }
    static Gate h(int q) { return make(GateKind::H, q); }
    static Gate z(int q) { return make(GateKind::Z, q); }
    static Gate x(int q) { return make(GateKind::X, q); }
    static Gate cz(int a, int b) { return make(GateKind::CZ, a, b); }
    static Gate ch(int c, int t) { return make(GateKind::CH, c, t); }
    static Gate cnot(int c, int t) { return make(GateKind::Cnot, c, t); }
    static Gate swap(int a, int b) { return make(GateKind::Swap, a, b); }
    static Gate pp(int a, int b) { return make(GateKind::PPair, a, b); }
    static Gate mcz(std::vector<Control> cs, int dashed);
    static Gate mch(std::vector<Control> cs, int target, int dashed);
    static Gate mczx(std::vector<Control> cs, int target, int sign);

    bool is_primitive() const {
        return kind == GateKind::H || kind == GateKind::Z || kind == GateKind::CZ ||
               kind == GateKind::CH || kind == GateKind::Swap;
    }
    std::vector<int> wires() const;

    bool operator==(const Gate& o) const;
};

struct Circuit {
    int n_qubits = 1;
    std::vector<Gate> gates;

    bool operator==(const Circuit& o) const {
        return n_qubits == o.n_qubits && gates == o.gates;
    }
};

// Throws IndexOutOfRange/IndicesNotDistinct for malformed gates.
void validate(const Circuit& c);

inline constexpr int kDefaultWidthCap = 12;

RingMatrix semantics(const Circuit& c, int width_cap = kDefaultWidthCap);
Circuit dagger(const Circuit& c);
Circuit random_circuit(int n, int len, std::uint64_t seed);

// Rewrite X and Cnot into H, Z, CZ.
Circuit expand_shortcuts(const Circuit& c);

// Append `later` after `earlier` in time.
Circuit then(const Circuit& earlier, const Circuit& later);

std::string print_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

std::string gate_str(const Gate& g);

}  // namespace rcch
