// SPDX-License-Identifier: Apache-2.0
#include "rcch/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "rcch/error.hpp"

namespace rcch {

Gate Gate::mcz(std::vector<Control> cs, int dashed) {
    Gate g = make(GateKind::McZ);
    g.controls = std::move(cs);
    g.dashed = dashed;
    return g;
}

Gate Gate::mch(std::vector<Control> cs, int target, int dashed) {
    Gate g = make(GateKind::McH);
    g.controls = std::move(cs);
    g.target = target;
    g.dashed = dashed;
    return g;
}

Gate Gate::mczx(std::vector<Control> cs, int target, int sign) {
    Gate g = make(GateKind::McZX);
    g.controls = std::move(cs);
    g.target = target;
    g.sign = sign;
    return g;
}

std::vector<int> Gate::wires() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::Z:
        case GateKind::X: return {q0};
        case GateKind::CZ:
        case GateKind::CH:
        case GateKind::Swap:
        case GateKind::Cnot:
        case GateKind::PPair: return {q0, q1};
        case GateKind::McZ:
        case GateKind::McH:
        case GateKind::McZX: {
            std::vector<int> w;
            for (const Control& c : controls) w.push_back(c.qubit);
            if (target >= 0) w.push_back(target);
            if (dashed >= 0) w.push_back(dashed);
            return w;
        }
    }
    return {};
}

bool Gate::operator==(const Gate& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case GateKind::H:
        case GateKind::Z:
        case GateKind::X: return q0 == o.q0;
        case GateKind::CZ:
        case GateKind::CH:
        case GateKind::Swap:
        case GateKind::Cnot:
        case GateKind::PPair: return q0 == o.q0 && q1 == o.q1;
        case GateKind::McZ: return controls == o.controls && dashed == o.dashed;
        case GateKind::McH:
            return controls == o.controls && target == o.target && dashed == o.dashed;
        case GateKind::McZX:
            return controls == o.controls && target == o.target && sign == o.sign;
    }
    return false;
}

namespace {

void validate_gate(const Gate& g, int n) {
    std::vector<int> w = g.wires();
    for (int q : w)
        if (q < 0 || q >= n)
            throw Error(ErrorKind::IndexOutOfRange,
                        "qubit " + std::to_string(q) + " in " + gate_str(g) + " for width " +
                            std::to_string(n));
    std::set<int> seen(w.begin(), w.end());
    if (seen.size() != w.size())
        throw Error(ErrorKind::IndicesNotDistinct, "repeated qubit in " + gate_str(g));
    if ((g.kind == GateKind::McH || g.kind == GateKind::McZ) && g.dashed < 0)
        throw Error(ErrorKind::IndexOutOfRange, "missing dashed wire in " + gate_str(g));
    if ((g.kind == GateKind::McH || g.kind == GateKind::McZX) && g.target < 0)
        throw Error(ErrorKind::IndexOutOfRange, "missing target in " + gate_str(g));
}

using Amp = std::pair<std::uint64_t, RingElem>;

struct Action {
    int n;
    std::uint64_t bit(int q) const { return std::uint64_t{1} << (n - 1 - q); }
    bool on(std::uint64_t idx, int q) const { return (idx & bit(q)) != 0; }

    bool fires(const std::vector<Control>& cs, std::uint64_t idx) const {
        for (const Control& c : cs)
            if (on(idx, c.qubit) != c.black) return false;
        return true;
    }

    void hadamard(std::uint64_t idx, const RingElem& amp, int t, std::vector<Amp>& out) const {
        RingElem h = amp.div_sqrt2();
        std::uint64_t zero = idx & ~bit(t), one = idx | bit(t);
        out.emplace_back(zero, h);
        out.emplace_back(one, on(idx, t) ? -h : h);
    }

    void apply(const Gate& g, std::uint64_t idx, const RingElem& amp, std::vector<Amp>& out) const {
        switch (g.kind) {
            case GateKind::H: hadamard(idx, amp, g.q0, out); return;
            case GateKind::Z: out.emplace_back(idx, on(idx, g.q0) ? -amp : amp); return;
            case GateKind::CZ:
                out.emplace_back(idx, on(idx, g.q0) && on(idx, g.q1) ? -amp : amp);
                return;
            case GateKind::CH:
                if (on(idx, g.q0))
                    hadamard(idx, amp, g.q1, out);
                else
                    out.emplace_back(idx, amp);
                return;
            case GateKind::Swap: {
                std::uint64_t r = idx & ~(bit(g.q0) | bit(g.q1));
                if (on(idx, g.q0)) r |= bit(g.q1);
                if (on(idx, g.q1)) r |= bit(g.q0);
                out.emplace_back(r, amp);
                return;
            }
            case GateKind::X: out.emplace_back(idx ^ bit(g.q0), amp); return;
            case GateKind::Cnot:
                out.emplace_back(on(idx, g.q0) ? idx ^ bit(g.q1) : idx, amp);
                return;
            case GateKind::McZ: out.emplace_back(idx, fires(g.controls, idx) ? -amp : amp); return;
            case GateKind::McH:
                if (fires(g.controls, idx))
                    hadamard(idx, amp, g.target, out);
                else
                    out.emplace_back(idx, amp);
                return;
            case GateKind::McZX: {
                if (!fires(g.controls, idx)) {
                    out.emplace_back(idx, amp);
                    return;
                }
                // X then Z, times (-1)^sign
                std::uint64_t r = idx ^ bit(g.target);
                bool neg = on(r, g.target) != (g.sign != 0);
                out.emplace_back(r, neg ? -amp : amp);
                return;
            }
            case GateKind::PPair: {
                static const RingMatrix pp = pp_matrix();
                std::uint64_t base = idx & ~(bit(g.q0) | bit(g.q1));
                int col = (on(idx, g.q0) ? 2 : 0) + (on(idx, g.q1) ? 1 : 0);
                for (int row = 0; row < 4; ++row) {
                    std::uint64_t r = base;
                    if (row & 2) r |= bit(g.q0);
                    if (row & 1) r |= bit(g.q1);
                    out.emplace_back(r, pp.at(row, col) * amp);
                }
                return;
            }
        }
    }
};

void merge(std::vector<Amp>& v) {
    std::sort(v.begin(), v.end(),
              [](const Amp& x, const Amp& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::uint64_t idx = v[i].first;
        RingElem sum = v[i].second;
        std::size_t j = i + 1;
        for (; j < v.size() && v[j].first == idx; ++j) sum += v[j].second;
        if (!sum.is_zero()) v[w++] = Amp(idx, std::move(sum));
        i = j;
    }
    v.resize(w);
}

}  // namespace

void validate(const Circuit& c) {
    if (c.n_qubits < 1) throw Error(ErrorKind::IndexOutOfRange, "circuit width must be positive");
    for (const Gate& g : c.gates) validate_gate(g, c.n_qubits);
}

RingMatrix semantics(const Circuit& c, int width_cap) {
    if (c.n_qubits > width_cap)
        throw Error(ErrorKind::WidthTooLarge,
                    std::to_string(c.n_qubits) + " qubits exceeds cap " + std::to_string(width_cap));
    validate(c);
    Action act{c.n_qubits};
    std::uint64_t dim = std::uint64_t{1} << c.n_qubits;
    RingMatrix m(dim, dim);
    std::vector<Amp> cur, next;
    for (std::uint64_t j = 0; j < dim; ++j) {
        cur.assign(1, Amp(j, RingElem(1)));
        for (const Gate& g : c.gates) {
            next.clear();
            for (const Amp& a : cur) act.apply(g, a.first, a.second, next);
            merge(next);
            std::swap(cur, next);
        }
        for (const Amp& a : cur) m.at(a.first, j) = a.second;
    }
    return m;
}

Circuit dagger(const Circuit& c) {
    Circuit d = c;
    std::reverse(d.gates.begin(), d.gates.end());
    return d;
}

Circuit random_circuit(int n, int len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
    auto pair = [&](int& a, int& b) {
        a = pick(n);
        b = pick(n - 1);
        if (b >= a) ++b;
    };
    Circuit c;
    c.n_qubits = n;
    for (int i = 0; i < len; ++i) {
        int kind = pick(n >= 2 ? 5 : 2);
        int a = 0, b = 0;
        switch (kind) {
            case 0: c.gates.push_back(Gate::h(pick(n))); break;
            case 1: c.gates.push_back(Gate::z(pick(n))); break;
            case 2: pair(a, b); c.gates.push_back(Gate::cz(a, b)); break;
            case 3: pair(a, b); c.gates.push_back(Gate::ch(a, b)); break;
            default: pair(a, b); c.gates.push_back(Gate::swap(a, b)); break;
        }
    }
    return c;
}

Circuit expand_shortcuts(const Circuit& c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::X) {
            out.gates.push_back(Gate::h(g.q0));
            out.gates.push_back(Gate::z(g.q0));
            out.gates.push_back(Gate::h(g.q0));
        } else if (g.kind == GateKind::Cnot) {
            out.gates.push_back(Gate::h(g.q1));
            out.gates.push_back(Gate::cz(g.q0, g.q1));
            out.gates.push_back(Gate::h(g.q1));
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

Circuit then(const Circuit& earlier, const Circuit& later) {
    Circuit out = earlier;
    out.gates.insert(out.gates.end(), later.gates.begin(), later.gates.end());
    return out;
}

namespace {

std::string controls_str(const std::vector<Control>& cs) {
    std::string s = "[";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ',';
        s += cs[i].black ? '+' : '-';
        s += std::to_string(cs[i].qubit);
    }
    return s + "]";
}

}  // namespace

std::string gate_str(const Gate& g) {
    auto one = [&](const char* name) { return std::string(name) + " " + std::to_string(g.q0); };
    auto two = [&](const char* name) {
        return std::string(name) + " " + std::to_string(g.q0) + " " + std::to_string(g.q1);
    };
    switch (g.kind) {
        case GateKind::H: return one("H");
        case GateKind::Z: return one("Z");
        case GateKind::X: return one("X");
        case GateKind::CZ: return two("CZ");
        case GateKind::CH: return two("CH");
        case GateKind::Swap: return two("SWAP");
        case GateKind::Cnot: return two("CNOT");
        case GateKind::PPair: return two("PP");
        case GateKind::McZ: return "MCZ " + controls_str(g.controls) + " dashed=" + std::to_string(g.dashed);
        case GateKind::McH:
            return "MCH " + controls_str(g.controls) + " " + std::to_string(g.target) +
                   " dashed=" + std::to_string(g.dashed);
        case GateKind::McZX:
            return "MCZX " + controls_str(g.controls) + " " + std::to_string(g.target) +
                   " sign=" + std::to_string(g.sign);
    }
    return "?";
}

std::string print_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
    for (const Gate& g : c.gates) out += gate_str(g) + "\n";
    return out;
}

namespace {

class LineParser {
  public:
    LineParser(std::string_view s, int line) : s_(s), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line_, static_cast<int>(i_) + 1, what);
    }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }

    std::string word() {
        skip_ws();
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        if (j == i_) fail("expected a keyword");
        std::string w(s_.substr(i_, j - i_));
        i_ = j;
        return w;
    }

    int number() {
        skip_ws();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected a non-negative integer");
        int v = std::stoi(std::string(s_.substr(i_, j - i_)));
        i_ = j;
        return v;
    }

    void expect(char ch) {
        skip_ws();
        if (i_ >= s_.size() || s_[i_] != ch) fail(std::string("expected '") + ch + "'");
        ++i_;
    }

    bool peek(char ch) {
        skip_ws();
        return i_ < s_.size() && s_[i_] == ch;
    }

    void keyword(const char* kw) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(kw);
        if (s_.substr(i_, len) != kw) fail(std::string("expected '") + kw + "'");
        i_ += len;
    }

    std::vector<Control> controls() {
        expect('[');
        std::vector<Control> cs;
        if (peek(']')) {
            ++i_;
            return cs;
        }
        while (true) {
            skip_ws();
            if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) fail("expected '+' or '-'");
            bool black = s_[i_] == '+';
            ++i_;
            cs.push_back(Control{number(), black});
            if (peek(',')) {
                ++i_;
                continue;
            }
            expect(']');
            break;
        }
        return cs;
    }

    std::size_t pos() const { return i_; }

  private:
    std::string_view s_;
    std::size_t i_ = 0;
    int line_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        LineParser p(line, lineno);
        if (p.done()) continue;
        std::size_t start = p.pos();
        std::string kw = p.word();
        if (!have_header) {
            if (kw != "qubits") p.fail("expected header 'qubits N'");
            c.n_qubits = p.number();
            if (c.n_qubits < 1) p.fail("width must be positive");
            if (!p.done()) p.fail("trailing characters");
            have_header = true;
            continue;
        }
        Gate g;
        if (kw == "H") {
            g = Gate::h(p.number());
        } else if (kw == "Z") {
            g = Gate::z(p.number());
        } else if (kw == "X") {
            g = Gate::x(p.number());
        } else if (kw == "CZ" || kw == "CH" || kw == "SWAP" || kw == "CNOT" || kw == "PP") {
            int a = p.number();
            int b = p.number();
            g = kw == "CZ"     ? Gate::cz(a, b)
                : kw == "CH"   ? Gate::ch(a, b)
                : kw == "SWAP" ? Gate::swap(a, b)
                : kw == "CNOT" ? Gate::cnot(a, b)
                               : Gate::pp(a, b);
        } else if (kw == "MCZ") {
            auto cs = p.controls();
            p.keyword("dashed=");
            g = Gate::mcz(std::move(cs), p.number());
        } else if (kw == "MCH") {
            auto cs = p.controls();
            int t = p.number();
            p.keyword("dashed=");
            g = Gate::mch(std::move(cs), t, p.number());
        } else if (kw == "MCZX") {
            auto cs = p.controls();
            int t = p.number();
            p.keyword("sign=");
            int s = p.number();
            if (s > 1) p.fail("sign must be 0 or 1");
            g = Gate::mczx(std::move(cs), t, s);
        } else {
            throw ParseError(lineno, static_cast<int>(start) + 1, "unknown gate '" + kw + "'");
        }
        if (!p.done()) p.fail("trailing characters");
        try {
            validate_gate(g, c.n_qubits);
        } catch (const Error& e) {
            throw ParseError(lineno, static_cast<int>(start) + 1, e.what());
        }
        c.gates.push_back(std::move(g));
    }
    if (!have_header) throw ParseError(lineno + 1, 1, "missing header 'qubits N'");
    return c;
}

}  // namespace rcch
