// SPDX-License-Identifier: Apache-2.0
//
// Coset transport over the four representatives E, Z[1], H[0,1], H[0,1] Z[1].
// Index variables are resolved lazily: a case split happens the first time
// h asks whether a variable is 0, 1 or neither.
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rcch/axioms.hpp"
#include "rcch/error.hpp"

namespace rcch {

const char* coset_label(Coset c) {
    switch (c) {
        case Coset::E: return "eps";
        case Coset::Z: return "Z";
        case Coset::H: return "H";
        case Coset::HZ: return "HZ";
    }
    return "?";
}

Word coset_word(Coset c, int dim) {
    Word w;
    w.dim = dim;
    if (c == Coset::Z) w.gens = {Gen::neg(1)};
    if (c == Coset::H) w.gens = {Gen::h(0, 1)};
    if (c == Coset::HZ) w.gens = {Gen::h(0, 1), Gen::neg(1)};
    return w;
}

namespace {

TermGen tz(Term a) { return {GenKind::Neg, std::move(a), Term::l(0)}; }
TermGen tx(Term a, Term b) { return {GenKind::X, std::move(a), std::move(b)}; }
TermGen th(Term a, Term b) { return {GenKind::H, std::move(a), std::move(b)}; }
TermPair tp(TermGen f, TermGen s) { return {std::move(f), std::move(s)}; }

// The element of {a, b} that is not `v`, given that one of them is. Two
// variables give the product (v = 1) or the sum (v = 0), both of which equal it.
Term other(const Term& a, const Term& b, long v) {
    if (b.is_var() && a.is_var()) return Term::v(a.var + (v == 1 ? "*" : "+") + b.var);
    if (!b.is_var()) return b.lit == v ? a : b;
    return a.lit == v ? b : a;
}

int lit_class(long x) { return x == 0 ? 0 : x == 1 ? 1 : 2; }

int literal_only(const Term& t, void*) {
    if (t.is_var()) throw Error(ErrorKind::PreconditionViolated, "variable in a concrete h step");
    return lit_class(t.lit);
}

Term term_of(int x) { return Term::l(x); }

}  // namespace

HResult h_step(Coset c, const TermGen& g, Classifier cls, void* ctx) {
    auto k = [&](const Term& t) { return cls(t, ctx); };
    const Term zero = Term::l(0), one = Term::l(1);
    const TermGen h01 = th(zero, one), x01 = tx(zero, one);
    HResult r;
    auto& p = r.pairs;
    const Term& a = g.a;
    const Term& b = g.b;

    auto has = [&](int v) { return k(a) == v || k(b) == v; };

    switch (c) {
        case Coset::E:
            if (g.kind == GenKind::Neg) {
                p.push_back(tp(tz(one), tz(a)));
                r.next = Coset::Z;
            } else if (g.kind == GenKind::X) {
                p.push_back(tp(tz(has(1) ? other(a, b, 1) : one), tx(a, b)));
                r.next = Coset::Z;
            } else {
                p.push_back(tp(th(a, b), h01));
                r.next = Coset::H;
            }
            break;
        case Coset::Z:
            if (g.kind == GenKind::Neg) {
                p.push_back(tp(tz(one), tz(a)));
                r.next = Coset::E;
            } else if (g.kind == GenKind::X) {
                p.push_back(tp(tz(one), tx(a, b)));
                r.next = Coset::E;
            } else {
                if (has(1)) p.push_back(tp(tz(b), tx(a, b)));
                p.push_back(tp(th(a, b), h01));
                r.next = Coset::HZ;
            }
            break;
        case Coset::H:
        case Coset::HZ: {
            const bool plain = c == Coset::H;
            r.next = plain ? Coset::HZ : Coset::H;
            if (g.kind == GenKind::Neg) {
                if (k(a) != 2)
                    p.push_back(tp(tz(one), tz(a)));
                else
                    p.push_back(tp(tz(a), x01));
            } else if (g.kind == GenKind::X) {
                bool h0 = has(0), h1 = has(1);
                if (h0 && h1) {
                    p.push_back(tp(tz(plain ? one : zero), x01));
                } else if (h0) {
                    p.push_back(tp(x01, tx(a, b)));
                    p.push_back(tp(th(other(a, b, 0), one), h01));
                } else if (h1) {
                    if (plain)
                        p.push_back(tp(tz(other(a, b, 1)), tx(a, b)));
                    else
                        p.push_back(tp(x01, tx(a, b)));
                    p.push_back(tp(th(zero, other(a, b, 1)), h01));
                } else {
                    p.push_back(tp(tx(a, b), x01));
                }
            } else {
                p.push_back(tp(h01, th(a, b)));
                if (!plain && has(1)) p.push_back(tp(tz(a), tx(a, b)));
                r.next = plain ? Coset::E : Coset::Z;
            }
            break;
        }
    }
    return r;
}

HResult h_step(Coset c, const Gen& g) {
    TermGen t{g.kind, term_of(g.a), term_of(g.kind == GenKind::Neg ? 0 : g.b)};
    return h_step(c, t, &literal_only, nullptr);
}

Word term_pairs_word(const std::vector<TermPair>& pairs, int dim) {
    Word w;
    w.dim = dim;
    auto lit = [](const Term& t) {
        if (t.is_var()) throw Error(ErrorKind::PreconditionViolated, "symbolic term " + t.var);
        return static_cast<int>(t.lit);
    };
    auto gen = [&](const TermGen& g) {
        if (g.kind == GenKind::Neg) return Gen::neg(lit(g.a));
        return g.kind == GenKind::X ? Gen::x(lit(g.a), lit(g.b)) : Gen::h(lit(g.a), lit(g.b));
    };
    for (const auto& p : pairs) {
        w.gens.push_back(gen(p.first));
        w.gens.push_back(gen(p.second));
    }
    return w;
}

std::vector<std::string> check_h_table(int dim) {
    std::vector<std::string> bad;
    std::vector<Gen> gens;
    for (int a = 0; a < dim; ++a) gens.push_back(Gen::neg(a));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (a != b) {
                gens.push_back(Gen::x(a, b));
                gens.push_back(Gen::h(a, b));
            }
    for (Coset c : {Coset::E, Coset::Z, Coset::H, Coset::HZ}) {
        for (const Gen& g : gens) {
            HResult r = h_step(c, g);
            Word lhs = coset_word(c, dim);
            lhs.gens.push_back(g);
            Word rhs = concat(term_pairs_word(r.pairs, dim), coset_word(r.next, dim));
            if (word_semantics(lhs) != word_semantics(rhs))
                bad.push_back(std::string("h(") + coset_label(c) + ", " + gen_str(g) + ")");
        }
    }
    return bad;
}

// ---- symbolic driver ----

namespace {

struct NeedSplit {
    std::string var;
};

struct SplitCtx {
    std::vector<std::pair<std::string, int>> assigned;
    std::vector<std::pair<std::string, std::string>> distinct;  // var pairs
    std::set<std::string> from_literals;  // vars distinct from every literal below
    std::set<long> literals;

    const int* find(const std::string& v) const {
        for (const auto& [name, k] : assigned)
            if (name == v) return &k;
        return nullptr;
    }

    bool consistent(const std::string& v, int k) const {
        if (k == 2) return true;
        if (from_literals.count(v) && literals.count(k)) return false;
        for (const auto& [x, y] : distinct) {
            const std::string* o = x == v ? &y : y == v ? &x : nullptr;
            if (!o) continue;
            const int* ok = find(*o);
            if (ok && *ok == k) return false;
        }
        return true;
    }
};

int split_class(const Term& t, void* ctx) {
    if (!t.is_var()) return lit_class(t.lit);
    auto* c = static_cast<SplitCtx*>(ctx);
    if (const int* k = c->find(t.var)) return *k;
    throw NeedSplit{t.var};
}

struct Branch {
    std::vector<std::pair<std::string, int>> assigned;
    std::string key;
};

template <class Run>
void explore(SplitCtx& ctx, const Run& run, std::vector<Branch>& out) {
    std::string key;
    try {
        key = run(ctx);
    } catch (const NeedSplit& ns) {
        for (int k = 0; k < 3; ++k) {
            if (!ctx.consistent(ns.var, k)) continue;
            ctx.assigned.emplace_back(ns.var, k);
            explore(ctx, run, out);
            ctx.assigned.pop_back();
        }
        return;
    }
    out.push_back({ctx.assigned, key});
}

std::string term_str(const Term& t) {
    if (!t.is_var()) return std::to_string(t.lit);
    std::string out = "$";
    for (char ch : t.var) {
        out += ch;
        if (ch == '*' || ch == '+') out += '$';
    }
    return out;
}

std::string tgen_str(const TermGen& g) {
    if (g.kind == GenKind::Neg) return "Z[" + term_str(g.a) + "]";
    return std::string(g.kind == GenKind::X ? "X[" : "H[") + term_str(g.a) + "," + term_str(g.b) + "]";
}

std::string pairs_str(const std::vector<TermPair>& ps) {
    if (ps.empty()) return "eps";
    std::vector<std::string> items;
    for (const auto& p : ps) items.push_back("(" + tgen_str(p.first) + " " + tgen_str(p.second) + ")");
    std::string out;
    for (std::size_t i = 0; i < items.size();) {
        std::size_t j = i;
        while (j < items.size() && items[j] == items[i]) ++j;
        if (!out.empty()) out += ' ';
        out += items[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// h** along a word; returns the pairs and the final coset.
std::pair<std::vector<TermPair>, Coset> h_star(Coset c, const std::vector<TermGen>& word, SplitCtx& ctx) {
    std::vector<TermPair> all;
    for (const auto& g : word) {
        HResult r = h_step(c, g, &split_class, &ctx);
        all.insert(all.end(), r.pairs.begin(), r.pairs.end());
        c = r.next;
    }
    return {all, c};
}

Term term_of_expr(const IndexExpr& e, const EquationSchema& s) {
    if (e.kind == IndexExpr::Kind::Lit) return Term::l(e.value);
    if (e.kind == IndexExpr::Kind::Var) return Term::v(s.vars[e.slot]);
    throw Error(ErrorKind::PreconditionViolated, s.name + ": index arithmetic in a transported schema");
}

std::vector<TermGen> term_word(const std::vector<PatternItem>& items, const EquationSchema& s) {
    std::vector<TermGen> out;
    for (const auto& it : flat_gens(items)) {
        TermGen g;
        g.kind = it.gen;
        g.a = term_of_expr(it.idx[0], s);
        g.b = it.gen == GenKind::Neg ? Term::l(0) : term_of_expr(it.idx[1], s);
        out.push_back(g);
    }
    return out;
}

std::string class_cond(const std::string& v, int k) {
    if (k == 0) return "$" + v + " == 0";
    if (k == 1) return "$" + v + " == 1";
    return "$" + v + " != 0 and $" + v + " != 1";
}

struct Group {
    std::string key;
    std::vector<std::vector<std::pair<std::string, int>>> branches;
};

std::vector<Group> group_branches(const std::vector<Branch>& bs) {
    std::vector<Group> gs;
    for (const auto& b : bs) {
        auto it = std::find_if(gs.begin(), gs.end(), [&](const Group& g) { return g.key == b.key; });
        if (it == gs.end()) {
            gs.push_back({b.key, {}});
            it = gs.end() - 1;
        }
        it->branches.push_back(b.assigned);
    }
    return gs;
}

// OR of ANDs; empty when some branch is unconditional.
std::string group_condition(const Group& g) {
    std::vector<std::string> terms;
    for (const auto& br : g.branches) {
        if (br.empty()) return "";
        std::string t;
        for (const auto& [v, k] : br) {
            if (!t.empty()) t += " and ";
            t += class_cond(v, k);
        }
        terms.push_back(br.size() == 1 && br[0].second != 2 ? t : "(" + t + ")");
    }
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " or ";
        out += t;
    }
    return out;
}

constexpr const char* kSep = "\x1f";

void emit(std::vector<TransportEntry>& out, const std::string& base, const std::vector<Group>& gs,
          const std::vector<std::string>& common, int min_dim) {
    for (std::size_t i = 0; i < gs.size(); ++i) {
        TransportEntry e;
        e.name = gs.size() == 1 ? base : base + "-" + std::to_string(i + 1);
        auto cut = gs[i].key.find(kSep);
        e.lhs = gs[i].key.substr(0, cut);
        e.rhs = gs[i].key.substr(cut + 1);
        e.conditions = common;
        std::string c = group_condition(gs[i]);
        if (!c.empty() && gs.size() > 1) e.conditions.push_back(c);
        e.min_dim = min_dim;
        out.push_back(std::move(e));
    }
}

void item_a(std::vector<TransportEntry>& out) {
    struct Shape {
        const char* name;
        std::vector<TermGen> word;
        std::string text;
        std::vector<std::pair<std::string, std::string>> distinct;
    };
    auto v = [](const char* n) { return Term::v(n); };
    const std::vector<Shape> shapes = {
        {"DE-ZZ", {tz(v("a")), tz(v("b"))}, "(Z[$a] Z[$b])", {}},
        {"DE-ZX", {tz(v("a")), tx(v("c"), v("d"))}, "(Z[$a] X[$c,$d])", {{"c", "d"}}},
        {"DE-XX", {tx(v("a"), v("b")), tx(v("c"), v("d"))}, "(X[$a,$b] X[$c,$d])",
         {{"a", "b"}, {"c", "d"}}},
        {"DE-HH", {th(v("a"), v("b")), th(v("c"), v("d"))}, "(H[$a,$b] H[$c,$d])",
         {{"a", "b"}, {"c", "d"}}},
    };
    for (const auto& sh : shapes) {
        SplitCtx ctx;
        ctx.distinct = sh.distinct;
        std::vector<Branch> bs;
        explore(ctx, [&](SplitCtx& c) {
            auto [ps, end] = h_star(Coset::E, sh.word, c);
            if (end != Coset::E)
                throw Error(ErrorKind::TransportInvariantViolated,
                            std::string(sh.name) + " ends in coset " + coset_label(end));
            return sh.text + kSep + pairs_str(ps);
        }, bs);
        emit(out, sh.name, group_branches(bs), {}, 2);
    }
}

void item_b(std::vector<TransportEntry>& out) {
    const Catalog& fig7 = builtin_catalog("fig7");
    for (const auto& s : fig7.schemas) {
        std::string label = s.name.substr(s.name.find(':') + 1);
        std::vector<TermGen> lw = term_word(s.lhs, s), rw = term_word(s.rhs, s);

        SplitCtx proto;
        for (std::size_t i = 0; i < s.vars.size(); ++i) {
            proto.from_literals.insert(s.vars[i]);
            for (std::size_t j = i + 1; j < s.vars.size(); ++j)
                proto.distinct.emplace_back(s.vars[i], s.vars[j]);
        }
        for (const auto* side : {&lw, &rw})
            for (const auto& g : *side)
                for (const Term* t : {&g.a, &g.b})
                    if (!t->is_var() && (g.kind != GenKind::Neg || t == &g.a)) proto.literals.insert(t->lit);

        std::vector<std::string> common;
        if (s.vars.size() > 1) {
            std::string d = "distinct(";
            for (std::size_t i = 0; i < s.vars.size(); ++i) d += (i ? ",$" : "$") + s.vars[i];
            common.push_back(d + ")");
        }

        for (Coset c0 : {Coset::E, Coset::Z, Coset::H, Coset::HZ}) {
            SplitCtx ctx = proto;
            std::vector<Branch> bs;
            explore(ctx, [&](SplitCtx& c) {
                auto [lp, le] = h_star(c0, lw, c);
                auto [rp, re] = h_star(c0, rw, c);
                if (le != re)
                    throw Error(ErrorKind::TransportInvariantViolated,
                                s.name + " from " + coset_label(c0) + ": " + coset_label(le) +
                                    " vs " + coset_label(re));
                return pairs_str(lp) + kSep + pairs_str(rp);
            }, bs);
            emit(out, std::string(coset_label(c0)) + "-" + label, group_branches(bs), common,
                 std::max(s.min_dim, 2));
        }
    }
}

}  // namespace

std::vector<TransportEntry> rs_transport_entries() {
    std::vector<TransportEntry> out;
    item_a(out);
    item_b(out);
    return out;
}

std::string rs_transport_text() {
    std::ostringstream o;
    o << "catalog rs\n";
    for (const auto& e : rs_transport_entries()) {
        o << "schema rs:" << e.name << '\n';
        o << "  lhs " << e.lhs << '\n';
        o << "  rhs " << e.rhs << '\n';
        for (const auto& c : e.conditions) o << "  when " << c << '\n';
        if (e.min_dim != 2) o << "  min_dim " << e.min_dim << '\n';
    }
    return o.str();
}

Catalog rs_transport() { return parse_catalogs(rs_transport_text()).at(0); }

// ---- comparison against a listing ----

namespace {

struct Renaming {
    std::map<int, int> fwd, back;

    bool link(int a, int b) {
        auto f = fwd.find(a);
        auto r = back.find(b);
        if (f == fwd.end() && r == back.end()) {
            fwd[a] = b;
            back[b] = a;
            return true;
        }
        return f != fwd.end() && r != back.end() && f->second == b && r->second == a;
    }
};

bool same_expr(const IndexExpr& x, const IndexExpr& y, Renaming& ren) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case IndexExpr::Kind::Lit: return x.value == y.value;
        case IndexExpr::Kind::Var: return ren.link(x.slot, y.slot);
        case IndexExpr::Kind::Dim: return true;
        default:
            if (x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
                if (!same_expr(x.args[i], y.args[i], ren)) return false;
            return true;
    }
}

bool same_side(const std::vector<PatternItem>& x, const std::vector<PatternItem>& y, Renaming& ren,
               std::string* why, const char* side) {
    auto fx = flat_gens(x), fy = flat_gens(y);
    if (fx.size() != fy.size()) {
        if (why) *why = std::string(side) + " lengths differ";
        return false;
    }
    for (std::size_t i = 0; i < fx.size(); ++i) {
        bool ok = fx[i].gen == fy[i].gen && fx[i].idx.size() == fy[i].idx.size();
        for (std::size_t j = 0; ok && j < fx[i].idx.size(); ++j) ok = same_expr(fx[i].idx[j], fy[i].idx[j], ren);
        if (!ok) {
            if (why) *why = std::string(side) + " differs at generator " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// Every generator of the side has in-range, distinct indices.
bool well_formed(const std::vector<PatternItem>& items, const std::vector<long>& env, long dim) {
    for (const auto& it : flat_gens(items)) {
        long a = it.idx[0].eval(env, dim);
        if (a < 0 || a >= dim) return false;
        if (it.gen == GenKind::Neg) continue;
        long b = it.idx[1].eval(env, dim);
        if (b < 0 || b >= dim || a == b) return false;
    }
    return true;
}

}  // namespace

bool schemas_match(const EquationSchema& g, const EquationSchema& l, int dim, std::string* why) {
    Renaming ren;
    if (!same_side(g.lhs, l.lhs, ren, why, "lhs") || !same_side(g.rhs, l.rhs, ren, why, "rhs"))
        return false;
    if (g.n_free != l.n_free) {
        if (why) *why = "different variable counts";
        return false;
    }
    // Variables only in conditions pair up in order.
    for (int i = 0, j = 0; i < g.n_free; ++i) {
        if (ren.fwd.count(i)) continue;
        while (j < l.n_free && ren.back.count(j)) ++j;
        if (j == l.n_free || !ren.link(i, j)) {
            if (why) *why = "unmatched variable " + g.vars[i];
            return false;
        }
    }
    if (!g.lets.empty() || !l.lets.empty()) {
        if (why) *why = "let bindings are not compared";
        return false;
    }
    const int k = l.n_free;
    std::vector<long> le(l.vars.size(), 0), ge(g.vars.size(), 0);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(dim);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (int i = 0; i < k; ++i) {
            le[i] = static_cast<long>(r % static_cast<std::uint64_t>(dim));
            r /= static_cast<std::uint64_t>(dim);
        }
        for (const auto& [gi, li] : ren.fwd) ge[gi] = le[li];
        if (!well_formed(l.lhs, le, dim) || !well_formed(l.rhs, le, dim)) continue;
        auto all = [&](const EquationSchema& s, std::vector<long>& env) {
            for (const auto& c : s.conditions)
                if (!eval_condition(c, s, env, dim)) return false;
            return true;
        };
        if (all(g, ge) != all(l, le)) {
            if (why) *why = "conditions differ at " + binding_str(l, le);
            return false;
        }
    }
    return true;
}

}  // namespace rcch
