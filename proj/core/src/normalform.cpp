// SPDX-License-Identifier: Apache-2.0
#include "rcch/normalform.hpp"

#include <algorithm>

#include "rcch/error.hpp"

namespace rcch {

bool NormalFormB::is_identity() const {
    if (!sign_pairs.empty()) return false;
    for (int i = 1; i < dim; ++i)
        if (d[i - 1] != dim - i) return false;
    return true;
}

PWord to_pword(const NormalFormB& nf) {
    PWord w;
    w.dim = nf.dim;
    for (auto [a, b] : nf.sign_pairs) w.pgens.push_back(PairedGen::zz(a, b));
    for (int i = 1; i < nf.dim; ++i)
        for (int j = nf.d[i - 1]; j <= nf.dim - i - 1; ++j) w.pgens.push_back(PairedGen::zx(j, j, j + 1));
    return w;
}

Word to_word(const NormalFormB& nf) { return flatten(to_pword(nf)); }

std::string nf_summary(const NormalFormB& nf) {
    std::string s = "signs=[";
    for (std::size_t i = 0; i < nf.sign_pairs.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(nf.sign_pairs[i].first) + "," + std::to_string(nf.sign_pairs[i].second) + ")";
    }
    s += "] d=[";
    for (std::size_t i = 0; i < nf.d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(nf.d[i]);
    }
    return s + "]";
}

NormalFormB nf_signed_permutation(const RingMatrix& m) {
    if (m.rows() != m.cols() || !m.is_signed_permutation())
        throw Error(ErrorKind::PreconditionViolated, "not a signed permutation matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<int> p(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!m.at(i, j).is_zero()) p[j] = i;

    NormalFormB nf;
    nf.dim = n;
    nf.d.assign(std::max(n - 1, 0), 0);
    // peel the staircase from the highest basis state down
    for (int i = 1; i < n; ++i) {
        int top = n - i;
        int d = p[top];
        nf.d[i - 1] = d;
        for (int& v : p) {
            if (v == d)
                v = top;
            else if (v > d && v <= top)
                --v;
        }
    }
    // signs sit on the left: M = S T, so S = M T^t
    Word staircase = to_word(nf);
    RingMatrix s = mat_mul(m, word_semantics(staircase).transpose());
    std::vector<int> neg;
    for (int i = 0; i < n; ++i)
        if (s.at(i, i).is_minus_one()) neg.push_back(i);
    if (neg.size() % 2)
        throw Error(ErrorKind::OddParity, "odd number of signs left after the permutation part");
    for (std::size_t i = 0; i < neg.size(); i += 2) nf.sign_pairs.emplace_back(neg[i], neg[i + 1]);
    return nf;
}

NormalFormB nf_hfree(const Word& w) {
    for (const Gen& g : w.gens)
        if (g.kind == GenKind::H) throw Error(ErrorKind::ContainsH, "word contains " + gen_str(g));
    return nf_signed_permutation(word_semantics(w));
}

PWord to_pword(const LowHNormalForm& nf) {
    PWord w = to_pword(nf.tail);
    if (nf.head) {
        const auto& h = *nf.head;
        w.pgens.insert(w.pgens.begin(), PairedGen::hh(h[0], h[1], h[2], h[3]));
    }
    return w;
}

Word to_word(const LowHNormalForm& nf) { return flatten(to_pword(nf)); }

std::string nf_summary(const LowHNormalForm& nf) {
    std::string s = "head=";
    if (nf.head) {
        const auto& h = *nf.head;
        s += "(" + std::to_string(h[0]) + "," + std::to_string(h[1]) + "," + std::to_string(h[2]) + "," +
             std::to_string(h[3]) + ")";
    } else {
        s += "none";
    }
    return s + " " + nf_summary(nf.tail);
}

namespace {

int count_h(const Word& w) {
    return static_cast<int>(std::count_if(w.gens.begin(), w.gens.end(),
                                          [](const Gen& g) { return g.kind == GenKind::H; }));
}

}  // namespace

LowHNormalForm nf_low_h(const Word& w) {
    int h = count_h(w);
    if (h != 0 && h != 2) throw Error(ErrorKind::TooManyH, std::to_string(h) + " H generators");
    RingMatrix m = word_semantics(w);
    LowHNormalForm nf;
    if (m.is_signed_permutation()) {
        nf.tail = nf_signed_permutation(m);
        return nf;
    }
    const int n = w.dim;
    std::vector<int> cand;
    for (int i = 0; i < n; ++i) {
        int nz = 0;
        for (int j = 0; j < n; ++j) nz += !m.at(i, j).is_zero();
        if (nz >= 2) cand.push_back(i);
    }
    auto search = [&](const std::vector<int>& idx) -> std::optional<std::array<int, 4>> {
        // tuples in lexicographic order; the first hit wins
        std::vector<int> s = idx;
        std::sort(s.begin(), s.end());
        for (int a : s)
            for (int b : s) {
                if (b <= a) continue;
                for (int c : s)
                    for (int d : s) {
                        if (d <= c || (a == c && b == d)) continue;
                        bool disjoint = a != c && a != d && b != c && b != d;
                        if (disjoint && a > c) continue;
                        RingMatrix r = m;
                        apply_left(Gen::h(a, b), r);
                        apply_left(Gen::h(c, d), r);
                        if (r.is_signed_permutation()) return std::array<int, 4>{a, b, c, d};
                    }
            }
        return std::nullopt;
    };
    auto head = search(cand);
    if (!head) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        head = search(all);
    }
    if (!head) throw Error(ErrorKind::PreconditionViolated, "no single H pair explains the matrix");
    RingMatrix r = m;
    apply_left(Gen::h((*head)[0], (*head)[1]), r);
    apply_left(Gen::h((*head)[2], (*head)[3]), r);
    nf.head = head;
    nf.tail = nf_signed_permutation(r);
    return nf;
}

bool decide_equiv_low_h(const Word& w1, const Word& w2) {
    if (w1.dim != w2.dim) throw Error(ErrorKind::PreconditionViolated, "dimensions differ");
    int p1 = (count_h(w1) + 1) / 2, p2 = (count_h(w2) + 1) / 2;
    if (std::max(p1, p2) > 2 || std::min(p1, p2) > 1)
        throw Error(ErrorKind::PreconditionViolated,
                    "H pair counts " + std::to_string(p1) + " and " + std::to_string(p2));
    return word_semantics(w1) == word_semantics(w2);
}

OneQubitNF nf_1qubit(const std::vector<Gate>& gates) {
    std::vector<GateKind> st;
    for (const Gate& g : gates) {
        if ((g.kind != GateKind::H && g.kind != GateKind::Z) || g.q0 != 0)
            throw Error(ErrorKind::BadAlphabet, gate_str(g) + " is not H or Z on wire 0");
        if (!st.empty() && st.back() == g.kind)
            st.pop_back();
        else
            st.push_back(g.kind);
    }
    const int len = static_cast<int>(st.size());
    if (len == 0) return {OneQubitFamily::Plain, 0};
    const int k = len / 2;
    auto mod8 = [](int v) { return ((v % 8) + 8) % 8; };
    if (st.front() == GateKind::H) {
        if (len % 2 == 0) return {OneQubitFamily::Plain, mod8(k)};
        // (HZ)^k H
        return {OneQubitFamily::ZPrefixed, mod8(7 - k)};
    }
    if (len % 2 == 1) return {OneQubitFamily::ZPrefixed, mod8(k)};
    // (ZH)^k
    return {OneQubitFamily::Plain, mod8(8 - k)};
}

Circuit to_circuit(const OneQubitNF& nf) {
    Circuit c;
    c.n_qubits = 1;
    if (nf.family == OneQubitFamily::ZPrefixed) c.gates.push_back(Gate::z(0));
    for (int i = 0; i < nf.k; ++i) {
        c.gates.push_back(Gate::h(0));
        c.gates.push_back(Gate::z(0));
    }
    return c;
}

std::string nf_summary(const OneQubitNF& nf) {
    return std::string(nf.family == OneQubitFamily::Plain ? "plain" : "z_prefixed") + " k=" + std::to_string(nf.k);
}

}  // namespace rcch
