// SPDX-License-Identifier: Apache-2.0
#include "rcch/axioms.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "rcch/circuit.hpp"
#include "rcch/codec.hpp"
#include "rcch/error.hpp"
#include "rcch/graycode.hpp"

namespace rcch {

bool check_sound(const Word& lhs, const Word& rhs) {
    if (lhs.dim != rhs.dim)
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(lhs.dim) + " vs " + std::to_string(rhs.dim));
    return word_semantics(lhs) == word_semantics(rhs);
}

bool CatalogReport::all_pass() const {
    for (const auto& s : schemas)
        if (s.failed) return false;
    return true;
}

std::size_t CatalogReport::total_instances() const {
    std::size_t n = 0;
    for (const auto& s : schemas) n += s.instances;
    return n;
}

CatalogReport check_catalog(const Catalog& c, int dim, std::size_t budget, std::uint64_t seed) {
    CatalogReport rep;
    rep.id = c.id;
    rep.dim = dim;
    rep.budget = budget;
    rep.seed = seed;
    rep.unreadable = c.unreadable;
    for (const auto& s : c.schemas) {
        SchemaReport sr;
        sr.name = s.name;
        if (dim < s.min_dim) {
            sr.skipped = "needs dimension " + std::to_string(s.min_dim);
            rep.schemas.push_back(std::move(sr));
            continue;
        }
        InstantiateStats st;
        auto insts = instantiate(s, dim, budget, seed, &st);
        sr.sampled = st.sampled;
        sr.instances = insts.size();
        for (const auto& in : insts) {
            if (check_sound(in.lhs, in.rhs)) {
                ++sr.passed;
            } else {
                ++sr.failed;
                if (sr.failures.size() < kMaxReportedFailures)
                    sr.failures.push_back(
                        {binding_str(s, in.values), word_body_str(in.lhs), word_body_str(in.rhs)});
            }
        }
        rep.schemas.push_back(std::move(sr));
    }
    std::sort(rep.schemas.begin(), rep.schemas.end(),
              [](const SchemaReport& a, const SchemaReport& b) { return a.name < b.name; });
    return rep;
}

namespace {

CatalogReport check_circuit_equations(int dim) {
    CatalogReport rep;
    rep.id = "fig12_13_semantic";
    rep.dim = dim;
    rep.unreadable = fig12_13_unreadable();
    for (const auto& e : fig12_13_equations()) {
        SchemaReport sr;
        sr.name = e.name;
        sr.instances = 1;
        Circuit l = parse_circuit(e.lhs), r = parse_circuit(e.rhs);
        if (semantics(l) == semantics(r)) {
            sr.passed = 1;
        } else {
            sr.failed = 1;
            sr.failures.push_back({"", print_circuit(l), print_circuit(r)});
        }
        rep.schemas.push_back(std::move(sr));
    }
    return rep;
}

}  // namespace

CatalogReport check_catalog(const std::string& id, int dim, std::size_t budget, std::uint64_t seed) {
    if (id == "fig12_13_semantic") {
        CatalogReport r = check_circuit_equations(dim);
        r.budget = budget;
        r.seed = seed;
        return r;
    }
    if (id == "rs") return check_catalog(rs_transport(), dim, budget, seed);
    return check_catalog(builtin_catalog(id), dim, budget, seed);
}

std::string report_text(const CatalogReport& r) {
    std::ostringstream o;
    o << "catalog " << r.id << "  dim " << r.dim << "  budget " << r.budget << "  seed " << r.seed
      << '\n';
    std::size_t bad = 0;
    for (const auto& s : r.schemas) {
        o << "  " << s.name << "  ";
        if (!s.skipped.empty()) {
            o << "skipped (" << s.skipped << ")\n";
            continue;
        }
        o << (s.failed ? "FAIL" : "pass") << "  " << s.passed << '/' << s.instances;
        if (s.sampled) o << " (sampled)";
        o << '\n';
        if (s.failed) ++bad;
        for (const auto& f : s.failures) {
            o << "    at " << (f.binding.empty() ? "-" : f.binding) << '\n'
              << "      lhs " << f.lhs << '\n'
              << "      rhs " << f.rhs << '\n';
        }
    }
    for (const auto& u : r.unreadable) o << "  " << u << "  source-unreadable\n";
    if (bad == 0)
        o << "all schemas pass (" << r.total_instances() << " instances)\n";
    else
        o << bad << " schema" << (bad == 1 ? "" : "s") << " failed\n";
    return o.str();
}

std::string report_json(const CatalogReport& r) {
    using nlohmann::json;
    std::string out;
    for (const auto& s : r.schemas) {
        json j = {{"record", "schema"}, {"catalog", r.id}, {"name", s.name},
                  {"instances", s.instances}, {"passed", s.passed}, {"failed", s.failed},
                  {"sampled", s.sampled}};
        if (!s.skipped.empty()) j["skipped"] = s.skipped;
        json fs = json::array();
        for (const auto& f : s.failures)
            fs.push_back({{"binding", f.binding}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        j["failures"] = fs;
        out += j.dump() + '\n';
    }
    for (const auto& u : r.unreadable)
        out += json({{"record", "unreadable"}, {"catalog", r.id}, {"name", u}}).dump() + '\n';
    json sum = {{"record", "summary"}, {"catalog", r.id}, {"dim", r.dim}, {"budget", r.budget},
                {"seed", r.seed}, {"instances", r.total_instances()}, {"all_pass", r.all_pass()}};
    out += sum.dump() + '\n';
    return out;
}

// ---- W words ----

namespace {

using U64 = std::uint64_t;

U64 wbit(int n, int q) { return U64{1} << (n - 1 - q); }

int wire_of(int n, U64 bit) {
    for (int q = 0; q < n; ++q)
        if (wbit(n, q) == bit) return q;
    return -1;
}

bool single_bit(U64 x) { return x && !(x & (x - 1)); }

void append(PWord& w, const PWord& tail) {
    w.pgens.insert(w.pgens.end(), tail.pgens.begin(), tail.pgens.end());
}

}  // namespace

int gray_hh_form(int a, int b, int c, int d, int n) {
    const int dim = 1 << n;
    for (int v : {a, b, c, d})
        if (v < 0 || v >= dim) return 0;
    U64 ga = gray_value(n, a), gb = gray_value(n, b), gc = gray_value(n, c), gd = gray_value(n, d);
    U64 x = ga ^ gb, y = ga ^ gc;
    if (!single_bit(x) || !single_bit(y) || x == y) return 0;
    if (gd != (ga ^ x ^ y)) return 0;
    if (ga & (x | y)) return 0;
    // x sits on an earlier wire than y for the first form
    return wire_of(n, x) < wire_of(n, y) ? 1 : 2;
}

PWord x_shortcut(int j, int bit, int n) {
    PWord w;
    w.dim = 1 << n;
    if (!bit) return w;
    w = encode_gate(Gate::z(j), n);
    const U64 bj = wbit(n, j);
    for (U64 s = 0; s < U64(w.dim); ++s) {
        if (s & bj) continue;
        int i0 = static_cast<int>(gray_index(n, s)), i1 = static_cast<int>(gray_index(n, s | bj));
        w.pgens.push_back(PairedGen::zx(i1, i0, i1));
    }
    return w;
}

WWords build_w1_w2(int a, int b, int c, int d, int n) {
    int form = gray_hh_form(a, b, c, d, n);
    if (form == 0 || n < 3)
        throw Error(ErrorKind::FormMismatch,
                    "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                        "," + std::to_string(d) + ") has neither Gray form");
    U64 ga = gray_value(n, a);
    int u = wire_of(n, ga ^ gray_value(n, b)), v = wire_of(n, ga ^ gray_value(n, c));
    // (u, v) are the wires of the inner and outer flip; they go to n-1 and n-2.

    // Preparation in time order: adjacent swaps, then X where the image of a has a 1.
    std::vector<PWord> steps;
    U64 s = ga;
    std::vector<int> at(n);
    for (int q = 0; q < n; ++q) at[q] = q;
    auto move_to = [&](int wire, int target) {
        int p = at[wire];
        for (; p < target; ++p) {
            steps.push_back(encode_gate(Gate::swap(p, p + 1), n));
            U64 b0 = wbit(n, p), b1 = wbit(n, p + 1);
            bool x0 = s & b0, x1 = s & b1;
            s &= ~(b0 | b1);
            if (x0) s |= b1;
            if (x1) s |= b0;
            for (auto& q : at) {
                if (q == p) q = p + 1;
                else if (q == p + 1) q = p;
            }
        }
    };
    move_to(u, n - 1);
    move_to(v, n - 2);
    for (int j = 0; j <= n - 3; ++j) {
        PWord x = x_shortcut(j, (s & wbit(n, j)) ? 1 : 0, n);
        if (!x.pgens.empty()) steps.push_back(std::move(x));
    }

    // enc(C) lists later steps first; the inverse of C lists them the other way.
    PWord w;
    w.dim = 1 << n;
    for (const auto& st : steps) append(w, inverse(st));
    w.pgens.push_back(PairedGen::hh(0, 1, 3, 2));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) append(w, *it);

    WWords out;
    (form == 1 ? out.w1 : out.w2) = std::move(w);
    return out;
}

PWord build_w(int a, int b, int c, int d, int n) {
    WWords w = build_w1_w2(a, b, c, d, n);
    return w.w1 ? *w.w1 : *w.w2;
}

// ---- two-qubit circuit equations ----

const std::vector<CircuitEquation>& fig12_13_equations() {
    static const std::vector<CircuitEquation> eqs = {
        {"fig12:81", 2, "qubits 2\nCNOT 0 1\nCNOT 0 1\n", "qubits 2\n"},
        {"fig12:81-expanded", 2, "qubits 2\nH 1\nCZ 0 1\nH 1\nH 1\nCZ 0 1\nH 1\n", "qubits 2\n"},
    };
    return eqs;
}

const std::vector<std::string>& fig12_13_unreadable() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int i = 82; i <= 110; ++i) v.push_back("fig12:" + std::to_string(i));
        for (int i = 111; i <= 116; ++i) v.push_back("fig13:" + std::to_string(i));
        return v;
    }();
    return names;
}

}  // namespace rcch
