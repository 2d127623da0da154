// SPDX-License-Identifier: Apache-2.0
#include "rcch/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rcch/axioms.hpp"
#include "rcch/circuit.hpp"
#include "rcch/codec.hpp"
#include "rcch/error.hpp"
#include "rcch/graycode.hpp"
#include "rcch/normalform.hpp"
#include "rcch/synth.hpp"

namespace rcch {

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    std::size_t checked = 0, failed = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first = what;
    }
    bool ok() const { return failed == 0; }
    std::string summary() const {
        std::string s = std::to_string(checked - failed) + "/" + std::to_string(checked) + " checks";
        if (failed) s += "; first failure: " + first;
        return s;
    }
};

// Insert a few cancelling pairs g g at random positions.
Word pad(Word w, std::mt19937_64& rng, bool allow_h) {
    int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
        Word g = random_word(w.dim, 1, rng(), allow_h);
        auto pos = w.gens.begin() + static_cast<long>(rng() % (w.gens.size() + 1));
        pos = w.gens.insert(pos, g.gens[0]);
        w.gens.insert(pos, g.gens[0]);
    }
    return w;
}

CriterionResult c1_axioms(std::uint64_t seed) {
    CriterionResult r{1, "axiom soundness: fig6-fig11 and a32_raw at N=8, budget 2000", false, "", 0, 300};
    std::size_t insts = 0, schemas = 0;
    std::vector<std::string> bad;
    for (const char* id : {"fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "a32_raw"}) {
        CatalogReport rep = check_catalog(id, 8, kDefaultBudget, seed);
        insts += rep.total_instances();
        for (const auto& s : rep.schemas) {
            ++schemas;
            if (s.failed) bad.push_back(s.name);
        }
    }
    r.pass = bad.empty();
    r.detail = std::to_string(schemas) + " schemas, " + std::to_string(insts) + " instances";
    if (!bad.empty()) {
        r.detail += "; failing:";
        for (const auto& b : bad) r.detail += " " + b;
    }
    return r;
}

CriterionResult c2_transport(std::uint64_t seed) {
    CriterionResult r{2, "transport: generated theory sound, listing spot checks, h table", false, "", 0, 0};
    Catalog gen = rs_transport();
    CatalogReport rep = check_catalog(gen, 8, kDefaultBudget, seed);
    Tally t;
    for (const auto& s : rep.schemas) t.check(s.failed == 0, s.name + " unsound");
    const Catalog& listed = builtin_catalog("a32_raw");
    auto find = [](const Catalog& c, const std::string& n) -> const EquationSchema* {
        for (const auto& s : c.schemas)
            if (s.name == n) return &s;
        return nullptr;
    };
    const std::pair<const char*, const char*> spots[] = {{"rs:DE-ZZ", "a32:DE-ZZ"},
                                                         {"rs:DE-HH", "a32:DE-HH"},
                                                         {"rs:eps-a1*", "a32:eps-a1"},
                                                         {"rs:H-a3", "a32:H-a3"},
                                                         {"rs:Z-a3-2", "a32:Z-a3-2"}};
    for (const auto& [g, l] : spots) {
        const EquationSchema* gs = find(gen, g);
        const EquationSchema* ls = find(listed, l);
        std::string why = "missing";
        t.check(gs && ls && schemas_match(*gs, *ls, 8, &why), std::string(g) + ": " + why);
    }
    auto h = check_h_table(8);
    t.check(h.empty(), h.empty() ? "" : h.front());
    r.pass = t.ok();
    r.detail = std::to_string(gen.schemas.size()) + " generated schemas; " + t.summary();
    return r;
}

CriterionResult c3_synthesis(std::uint64_t seed) {
    CriterionResult r{3, "synthesis round trip: 500 words, N in {2,4,8,16}, length <= 30", false, "", 0, 120};
    std::mt19937_64 rng(seed);
    Tally t;
    const int dims[] = {2, 4, 8, 16};
    for (int i = 0; i < 500; ++i) {
        int dim = dims[i % 4];
        int len = static_cast<int>(rng() % 31);
        Word w = random_word(dim, len, rng());
        RingMatrix m = word_semantics(w);
        Word s = exact_synthesize(m);
        t.check(word_semantics(s) == m, "product at word " + std::to_string(i));
        Parities p = word_parities(w);
        t.check(p == word_parities(s) && p == matrix_parities(m), "parity at word " + std::to_string(i));
    }
    RingMatrix pp = pp_matrix();
    t.check(word_semantics(exact_synthesize(pp)) == pp, "P(x)P");
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult c4_parity(std::uint64_t seed) {
    CriterionResult r{4, "parity: 200 random 3-qubit circuits even; odd diagonal rejected", false, "", 0, 0};
    std::mt19937_64 rng(seed);
    Tally t;
    for (int i = 0; i < 200; ++i) {
        Circuit c = random_circuit(3, 1 + static_cast<int>(rng() % 20), rng());
        t.check(matrix_parities(semantics(c)) == Parities{0, 0}, "circuit " + std::to_string(i));
    }
    RingMatrix d = RingMatrix::identity(8);
    d.at(7, 7) = RingElem(-1);
    bool rejected = false;
    try {
        synthesize_even(d);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::OddParity;
    }
    t.check(rejected, "diag(1,...,1,-1) accepted");
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult c5_codec(std::uint64_t seed) {
    CriterionResult r{5, "codec: random round trips at 2 and 3 qubits, per-clause contracts", false, "", 0, 0};
    std::mt19937_64 rng(seed);
    Tally t;
    for (int i = 0; i < 200; ++i)
        t.check(roundtrip(random_circuit(2, static_cast<int>(rng() % 21), rng())),
                "2-qubit circuit " + std::to_string(i));
    for (int i = 0; i < 50; ++i)
        t.check(roundtrip(random_circuit(3, static_cast<int>(rng() % 11), rng())),
                "3-qubit circuit " + std::to_string(i));

    for (const auto& [g, c] : decode2_table()) {
        Word w{4, {g}};
        t.check(semantics(c) == word_as_circuit_matrix(w, 2), "decode2 " + gen_str(g));
    }

    const int n = 3;
    std::vector<Gate> gates;
    for (int q = 0; q < n; ++q) {
        gates.push_back(Gate::h(q));
        gates.push_back(Gate::z(q));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) {
                gates.push_back(Gate::cz(a, b));
                gates.push_back(Gate::ch(a, b));
                gates.push_back(Gate::swap(a, b));
            }
    for (const Gate& g : gates) {
        Circuit c{n, {g}};
        t.check(word_as_circuit_matrix(flatten(encode_gate(g, n)), n) == semantics(c),
                "encode " + gate_str(g));
    }

    const int dim = 1 << n;
    std::vector<PairedGen> pgs;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            pgs.push_back(PairedGen::zz(a, b));
            for (int c = 0; c < dim; ++c)
                if (b != c) pgs.push_back(PairedGen::zx(a, b, c));
        }
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d)
                    if (a != b && c != d) {
                        pgs.push_back(PairedGen::xx(a, b, c, d));
                        pgs.push_back(PairedGen::hh(a, b, c, d));
                    }
    for (const auto& p : pgs) {
        PWord pw{dim, {p}};
        t.check(semantics(decode_pair(p, n)) == word_as_circuit_matrix(flatten(pw), n),
                "decode " + pair_str(p));
    }
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult c6_normal_forms(std::uint64_t seed) {
    CriterionResult r{6, "normal forms: H-free uniqueness, one H pair, 1-qubit classes", false, "", 0, 0};
    std::mt19937_64 rng(seed);
    Tally t;
    const int dim = 8;
    for (int i = 0; i < 200; ++i) {
        Word w1 = random_word(dim, 2 * static_cast<int>(rng() % 16), rng(), false);
        Word w2 = pad(exact_synthesize(word_semantics(w1)), rng, false);
        NormalFormB a = nf_hfree(w1), b = nf_hfree(w2);
        t.check(a == b, "H-free pair " + std::to_string(i));
        t.check(word_semantics(to_word(a)) == word_semantics(w1), "H-free semantics " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        int la = static_cast<int>(rng() % 10), lb = static_cast<int>(rng() % 10);
        if ((la + lb) % 2) ++lb;
        Word a = random_word(dim, la, rng(), false), b = random_word(dim, lb, rng(), false);
        Word hh = random_word(dim, 0, 0);
        int x = static_cast<int>(rng() % dim), y = static_cast<int>(rng() % (dim - 1));
        if (y >= x) ++y;
        int u = static_cast<int>(rng() % dim), v = static_cast<int>(rng() % (dim - 1));
        if (v >= u) ++v;
        hh.gens = {Gen::h(x, y), Gen::h(u, v)};
        Word w1 = concat(concat(a, hh), b);
        Word w2 = concat(concat(pad(exact_synthesize(word_semantics(a)), rng, false), hh),
                         pad(exact_synthesize(word_semantics(b)), rng, false));
        LowHNormalForm n1 = nf_low_h(w1), n2 = nf_low_h(w2);
        t.check(n1 == n2, "one-H pair " + std::to_string(i));
        t.check(word_semantics(to_word(n1)) == word_semantics(w1), "one-H semantics " + std::to_string(i));
    }

    std::map<OneQubitNF, RingMatrix> classes;
    for (int len = 0; len <= 12; ++len) {
        for (int bits = 0; bits < (1 << len); ++bits) {
            Circuit c{1, {}};
            for (int j = 0; j < len; ++j) c.gates.push_back((bits >> j) & 1 ? Gate::z(0) : Gate::h(0));
            RingMatrix m = semantics(c);
            OneQubitNF nf = nf_1qubit(c.gates);
            auto [it, fresh] = classes.emplace(nf, m);
            t.check(it->second == m, "1-qubit class " + nf_summary(nf));
            if (fresh) t.check(semantics(to_circuit(nf)) == m, "1-qubit representative " + nf_summary(nf));
        }
    }
    std::set<std::string> mats;
    for (const auto& [nf, m] : classes) mats.insert(m.str());
    t.check(classes.size() == 16 && mats.size() == 16,
            std::to_string(classes.size()) + " classes, " + std::to_string(mats.size()) + " matrices");
    Circuit hz8{1, {}};
    for (int i = 0; i < 8; ++i) {
        hz8.gates.push_back(Gate::h(0));
        hz8.gates.push_back(Gate::z(0));
    }
    t.check(semantics(hz8).is_identity(), "(HZ)^8 != I");
    r.pass = t.ok();
    r.detail = std::to_string(classes.size()) + " one-qubit classes; " + t.summary();
    return r;
}

CriterionResult c7_gray(std::uint64_t) {
    CriterionResult r{7, "Gray code: bijectivity, unit distance, popcount parity for n <= 12", false, "", 0, 10};
    Tally t;
    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<bool> seen(dim, false);
        bool bij = true, unit = true, par = true, inv = true;
        for (std::uint64_t k = 0; k < dim; ++k) {
            std::uint64_t g = gray_value(n, k);
            if (g >= dim || seen[g]) bij = false;
            else seen[g] = true;
            if (k + 1 < dim && std::popcount(g ^ gray_value(n, k + 1)) != 1) unit = false;
            if (static_cast<std::uint64_t>(std::popcount(g) % 2) != k % 2) par = false;
            if (gray_index(n, g) != k || gray_inv(n, gray(n, k)) != k) inv = false;
        }
        std::string tag = " at n=" + std::to_string(n);
        t.check(bij, "bijectivity" + tag);
        t.check(unit, "unit distance" + tag);
        t.check(par, "popcount parity" + tag);
        t.check(inv, "inverse" + tag);
    }
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult c8_sigma(std::uint64_t seed) {
    CriterionResult r{8, "sigma: 100 random tuples at N in {8,16}", false, "", 0, 0};
    std::mt19937_64 rng(seed);
    Tally t;
    for (int i = 0; i < 100; ++i) {
        int dim = i % 2 ? 16 : 8;
        std::vector<int> v;
        while (v.size() < 4) {
            int x = static_cast<int>(rng() % dim);
            if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        SigmaPair sp = sigma(v[0], v[1], v[2], v[3], dim);
        RingMatrix f = word_semantics(sp.forward), b = word_semantics(sp.backward);
        std::string tag = " at (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                          std::to_string(v[2]) + "," + std::to_string(v[3]) + ") N=" + std::to_string(dim);
        t.check(mat_mul(b, f).is_identity() && mat_mul(f, b).is_identity(), "inverse" + tag);
        // Columns 0, 1, 3, 2 of the forward factor land on a, b, c, d.
        const int src[4] = {0, 1, 3, 2};
        bool perm = f.is_signed_permutation();
        for (int j = 0; j < 4 && perm; ++j) perm = f.at(v[j], src[j]).is_unit_sign();
        t.check(perm, "signed permutation" + tag);
        Word hh{dim, {Gen::h(0, 1), Gen::h(3, 2)}};
        Word target{dim, {Gen::h(v[0], v[1]), Gen::h(v[2], v[3])}};
        t.check(word_semantics(concat(concat(sp.forward, hh), sp.backward)) == word_semantics(target),
                "conjugation" + tag);
    }
    for (int dim : {8, 16}) {
        SigmaPair sp = sigma(0, 1, 3, 2, dim);
        t.check(sp.forward.gens.empty() && sp.backward.gens.empty(), "(0,1,3,2) not empty");
    }
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    using Fn = CriterionResult (*)(std::uint64_t);
    static const Fn fns[kCriteria] = {c1_axioms, c2_transport, c3_synthesis, c4_parity,
                                      c5_codec,  c6_normal_forms, c7_gray,    c8_sigma};
    if (id < 1 || id > kCriteria) throw Error(ErrorKind::OutOfRange, "criterion " + std::to_string(id));
    auto t0 = Clock::now();
    CriterionResult r;
    try {
        r = fns[id - 1](seed);
    } catch (const std::exception& e) {
        r.id = id;
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
        r.pass = false;
        r.detail += "; over the time bound";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, seed));
    return out;
}

std::string criterion_line(const CriterionResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    std::string line = "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + "  " +
                       r.title + "  [" + r.detail + "]  " + secs;
    if (r.limit_seconds > 0) {
        char lim[32];
        std::snprintf(lim, sizeof lim, " (limit %.0fs)", r.limit_seconds);
        line += lim;
    }
    return line;
}

}  // namespace rcch
