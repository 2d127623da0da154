// SPDX-License-Identifier: Apache-2.0
#include "rcch/schema.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rcch/axioms.hpp"
#include "rcch/codec.hpp"
#include "rcch/error.hpp"
#include "rcch/graycode.hpp"

namespace rcch {

long IndexExpr::eval(const std::vector<long>& env, long dim) const {
    switch (kind) {
        case Kind::Lit: return value;
        case Kind::Var: return env[slot];
        case Kind::Dim: return dim;
        case Kind::Add: return args[0].eval(env, dim) + args[1].eval(env, dim);
        case Kind::Sub: return args[0].eval(env, dim) - args[1].eval(env, dim);
        case Kind::Mul: return args[0].eval(env, dim) * args[1].eval(env, dim);
        case Kind::Neg: return -args[0].eval(env, dim);
    }
    return 0;
}

namespace {

constexpr int kLetBase = 100000;

struct Tok {
    enum Kind { Ident, Var, Num, Punct, End } kind = End;
    std::string text;
    long num = 0;
    int col = 1;
};

std::vector<Tok> lex(const std::string& s, int line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Tok t;
        t.col = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.kind = Tok::Num;
            t.text = s.substr(i, j - i);
            t.num = std::stol(t.text);
            i = j;
        } else if (c == '$' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + (c == '$' ? 1 : 0);
            std::size_t start = j;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            if (j == start) throw ParseError(line, t.col, "empty variable name");
            t.kind = c == '$' ? Tok::Var : Tok::Ident;
            t.text = s.substr(start, j - start);
            i = j;
        } else {
            static const char* two[] = {"<=", ">=", "==", "!="};
            t.kind = Tok::Punct;
            bool done = false;
            for (const char* p : two) {
                if (s.compare(i, 2, p) == 0) {
                    t.text = p;
                    i += 2;
                    done = true;
                    break;
                }
            }
            if (!done) {
                if (std::string("[](){},^+-*<>=").find(c) == std::string::npos)
                    throw ParseError(line, t.col, std::string("unexpected character '") + c + "'");
                t.text = std::string(1, c);
                ++i;
            }
        }
        out.push_back(t);
    }
    Tok end;
    end.col = static_cast<int>(s.size()) + 1;
    out.push_back(end);
    return out;
}

// Recursive-descent parser over one line.
class LineParser {
  public:
    LineParser(std::vector<Tok> toks, int line, std::map<std::string, int>& slots,
               std::vector<std::string>& names, const std::set<std::string>& let_names)
        : t_(std::move(toks)), line_(line), slots_(slots), names_(names), lets_(let_names) {}

    bool at_end() const { return t_[p_].kind == Tok::End; }
    const Tok& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, peek().col, what); }

    bool is_punct(const char* s, std::size_t k = 0) const {
        return peek(k).kind == Tok::Punct && peek(k).text == s;
    }
    bool is_ident(const char* s, std::size_t k = 0) const {
        return peek(k).kind == Tok::Ident && peek(k).text == s;
    }
    void expect(const char* s) {
        if (!is_punct(s)) fail(std::string("expected '") + s + "'");
        ++p_;
    }

    int slot_of(const std::string& name) {
        auto it = slots_.find(name);
        if (it != slots_.end()) return it->second;
        int slot;
        if (lets_.count(name)) {
            slot = kLetBase + static_cast<int>(std::distance(lets_.begin(), lets_.find(name)));
        } else {
            slot = static_cast<int>(names_.size());
            names_.push_back(name);
        }
        slots_[name] = slot;
        return slot;
    }

    IndexExpr expr() {
        IndexExpr e = term();
        while (is_punct("+") || is_punct("-")) {
            bool add = peek().text == "+";
            ++p_;
            IndexExpr r = term();
            IndexExpr n;
            n.kind = add ? IndexExpr::Kind::Add : IndexExpr::Kind::Sub;
            n.args = {std::move(e), std::move(r)};
            e = std::move(n);
        }
        return e;
    }

    IndexExpr term() {
        IndexExpr e = factor();
        while (is_punct("*")) {
            ++p_;
            IndexExpr r = factor();
            IndexExpr n;
            n.kind = IndexExpr::Kind::Mul;
            n.args = {std::move(e), std::move(r)};
            e = std::move(n);
        }
        return e;
    }

    IndexExpr factor() {
        IndexExpr e;
        const Tok& t = peek();
        if (t.kind == Tok::Num) {
            e.kind = IndexExpr::Kind::Lit;
            e.value = t.num;
            ++p_;
        } else if (t.kind == Tok::Var) {
            e.kind = IndexExpr::Kind::Var;
            e.slot = slot_of(t.text);
            ++p_;
        } else if (t.kind == Tok::Ident && t.text == "N") {
            e.kind = IndexExpr::Kind::Dim;
            ++p_;
        } else if (t.kind == Tok::Ident && !is_punct("(", 1) && !is_punct("[", 1) &&
                   !is_keyword(t.text)) {
            e.kind = IndexExpr::Kind::Var;
            e.slot = slot_of(t.text);
            ++p_;
        } else if (is_punct("-")) {
            ++p_;
            e.kind = IndexExpr::Kind::Neg;
            e.args = {factor()};
        } else if (is_punct("(")) {
            ++p_;
            e = expr();
            expect(")");
        } else {
            fail("expected index expression");
        }
        return e;
    }

    static bool is_keyword(const std::string& s) {
        return s == "and" || s == "or" || s == "not" || s == "in" || s == "notin";
    }

    std::vector<IndexExpr> expr_list() {
        std::vector<IndexExpr> v;
        v.push_back(expr());
        while (is_punct(",")) {
            ++p_;
            v.push_back(expr());
        }
        return v;
    }

    // ---- word patterns ----
    std::vector<PatternItem> pattern(const char* close = nullptr) {
        std::vector<PatternItem> items;
        while (true) {
            if (at_end()) {
                if (close) fail(std::string("expected '") + close + "'");
                break;
            }
            if (close && is_punct(close)) break;
            if (is_ident("eps")) {
                ++p_;
                continue;
            }
            if (is_punct("(") || is_punct("{")) {
                const char* cl = is_punct("(") ? ")" : "}";
                ++p_;
                PatternItem g;
                g.kind = PatternItem::Kind::Group;
                g.items = pattern(cl);
                expect(cl);
                g.power.kind = IndexExpr::Kind::Lit;
                g.power.value = 1;
                if (is_punct("^")) {
                    ++p_;
                    g.power = factor();
                }
                items.push_back(std::move(g));
                continue;
            }
            const Tok& t = peek();
            if (t.kind != Tok::Ident) fail("expected generator");
            if ((t.text == "Z" || t.text == "X" || t.text == "H") && is_punct("[", 1)) {
                PatternItem g;
                g.kind = PatternItem::Kind::Gen;
                g.gen = t.text == "Z" ? GenKind::Neg : t.text == "X" ? GenKind::X : GenKind::H;
                p_ += 2;
                g.idx = expr_list();
                expect("]");
                if (g.idx.size() != (g.gen == GenKind::Neg ? 1U : 2U))
                    fail("wrong number of indices for " + t.text);
                items.push_back(std::move(g));
                continue;
            }
            if ((t.text == "SIGMA" || t.text == "SIGMAP" || t.text == "W1" || t.text == "W2") &&
                is_punct("(", 1)) {
                PatternItem g;
                g.kind = PatternItem::Kind::Macro;
                g.macro = t.text;
                p_ += 2;
                g.idx = expr_list();
                expect(")");
                if (g.idx.size() != 4) fail(t.text + " takes four indices");
                items.push_back(std::move(g));
                continue;
            }
            fail("unknown generator '" + t.text + "'");
        }
        return items;
    }

    // ---- conditions ----
    Condition cond() {
        Condition c = cond_and();
        if (!is_ident("or")) return c;
        Condition o;
        o.kind = Condition::Kind::Or;
        o.kids.push_back(std::move(c));
        while (is_ident("or")) {
            ++p_;
            o.kids.push_back(cond_and());
        }
        return o;
    }

    Condition cond_and() {
        Condition c = cond_unary();
        if (!is_ident("and")) return c;
        Condition a;
        a.kind = Condition::Kind::And;
        a.kids.push_back(std::move(c));
        while (is_ident("and")) {
            ++p_;
            a.kids.push_back(cond_unary());
        }
        return a;
    }

    Condition cond_unary() {
        if (is_ident("not")) {
            ++p_;
            Condition n;
            n.kind = Condition::Kind::Not;
            n.kids.push_back(cond_unary());
            return n;
        }
        if (is_punct("(")) {
            std::size_t save = p_;
            try {
                ++p_;
                Condition c = cond();
                expect(")");
                return c;
            } catch (const ParseError&) {
                p_ = save;
            }
        }
        return cond_atom();
    }

    std::string cmp_op() {
        static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
        for (const char* o : ops)
            if (is_punct(o)) {
                ++p_;
                return o;
            }
        if (is_punct("=")) {
            ++p_;
            return "==";
        }
        fail("expected comparison");
    }

    Condition cond_atom() {
        Condition c;
        const Tok& t = peek();
        auto fn = [&](Condition::Kind k) {
            c.kind = k;
            p_ += 2;
            c.exprs = expr_list();
            expect(")");
        };
        if (t.kind == Tok::Ident && is_punct("(", 1)) {
            if (t.text == "odd") {
                fn(Condition::Kind::Odd);
            } else if (t.text == "even") {
                fn(Condition::Kind::Even);
            } else if (t.text == "distinct") {
                fn(Condition::Kind::Distinct);
            } else if (t.text == "gray36" || t.text == "gray37") {
                fn(t.text == "gray36" ? Condition::Kind::Gray36 : Condition::Kind::Gray37);
                if (c.exprs.size() != 4) fail("Gray form takes four indices");
            } else if (t.text == "card") {
                fn(Condition::Kind::Card);
                c.op = cmp_op();
                c.rhs = expr();
            } else {
                fail("unknown predicate '" + t.text + "'");
            }
            if ((c.kind == Condition::Kind::Odd || c.kind == Condition::Kind::Even) && c.exprs.size() != 1)
                fail("parity takes one expression");
            return c;
        }
        if (is_ident("alldistinct")) {
            ++p_;
            c.kind = Condition::Kind::AllDistinct;
            return c;
        }
        IndexExpr lhs = expr();
        if (is_ident("in") || is_ident("notin")) {
            c.kind = Condition::Kind::In;
            c.negated = peek().text == "notin";
            ++p_;
            expect("{");
            c.rhs = lhs;
            c.exprs = expr_list();
            expect("}");
            return c;
        }
        c.kind = Condition::Kind::Cmp;
        c.exprs = {std::move(lhs)};
        c.op = cmp_op();
        c.rhs = expr();
        return c;
    }

    // `$e,$f = fresh(...)`
    LetBinding let() {
        LetBinding b;
        while (true) {
            const Tok& t = peek();
            if (t.kind != Tok::Var && t.kind != Tok::Ident) fail("expected variable");
            b.slots.push_back(slot_of(t.text));
            ++p_;
            if (!is_punct(",")) break;
            ++p_;
        }
        expect("=");
        if (!is_ident("fresh")) fail("expected 'fresh'");
        ++p_;
        expect("(");
        b.avoid = expr_list();
        expect(")");
        return b;
    }

  private:
    std::vector<Tok> t_;
    std::size_t p_ = 0;
    int line_;
    std::map<std::string, int>& slots_;
    std::vector<std::string>& names_;
    const std::set<std::string>& lets_;
};

void remap(IndexExpr& e, int n_free) {
    if (e.kind == IndexExpr::Kind::Var && e.slot >= kLetBase) e.slot = n_free + (e.slot - kLetBase);
    for (auto& a : e.args) remap(a, n_free);
}

void remap(std::vector<PatternItem>& items, int n_free) {
    for (auto& it : items) {
        for (auto& e : it.idx) remap(e, n_free);
        remap(it.power, n_free);
        remap(it.items, n_free);
    }
}

void remap(Condition& c, int n_free) {
    for (auto& e : c.exprs) remap(e, n_free);
    remap(c.rhs, n_free);
    for (auto& k : c.kids) remap(k, n_free);
}

void collect_indices(const std::vector<PatternItem>& items, const EquationSchema& s,
                     std::map<std::string, IndexExpr>& out) {
    for (const auto& it : items) {
        if (it.kind == PatternItem::Kind::Group) {
            collect_indices(it.items, s, out);
        } else {
            for (const auto& e : it.idx) out.emplace(expr_str(e, s), e);
        }
    }
}

struct RawRecord {
    std::string name;
    int line = 0;
    std::vector<std::pair<int, std::string>> lines;  // (line number, "keyword rest")
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::pair<std::string, std::string> split_keyword(const std::string& s) {
    std::size_t sp = s.find_first_of(" \t");
    if (sp == std::string::npos) return {s, ""};
    return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

EquationSchema build_schema(const RawRecord& r) {
    EquationSchema s;
    s.name = r.name;
    std::set<std::string> let_names;
    for (const auto& [ln, text] : r.lines) {
        auto [kw, rest] = split_keyword(text);
        if (kw != "let") continue;
        std::size_t eq = rest.find('=');
        if (eq == std::string::npos) throw ParseError(ln, 1, "let without '='");
        std::stringstream ss(rest.substr(0, eq));
        std::string name;
        while (std::getline(ss, name, ',')) {
            name = trim(name);
            if (!name.empty() && name[0] == '$') name = name.substr(1);
            if (name.empty()) throw ParseError(ln, 1, "empty let name");
            let_names.insert(name);
        }
    }
    std::map<std::string, int> slots;
    std::vector<std::string> names;
    bool have_lhs = false, have_rhs = false;
    for (const auto& [ln, text] : r.lines) {
        auto [kw, rest] = split_keyword(text);
        LineParser p(lex(rest, ln), ln, slots, names, let_names);
        if (kw == "lhs" || kw == "rhs") {
            auto items = p.pattern();
            if (kw == "lhs") {
                if (have_lhs) throw ParseError(ln, 1, "duplicate lhs");
                s.lhs = std::move(items);
                s.lhs_text = rest;
                have_lhs = true;
            } else {
                if (have_rhs) throw ParseError(ln, 1, "duplicate rhs");
                s.rhs = std::move(items);
                s.rhs_text = rest;
                have_rhs = true;
            }
        } else if (kw == "when") {
            s.conditions.push_back(p.cond());
            if (!p.at_end()) p.fail("trailing tokens in condition");
            s.condition_texts.push_back(rest);
        } else if (kw == "let") {
            s.lets.push_back(p.let());
            if (!p.at_end()) p.fail("trailing tokens in let");
            s.let_texts.push_back(rest);
        } else if (kw == "min_dim") {
            try {
                s.min_dim = std::stoi(rest);
            } catch (const std::exception&) {
                throw ParseError(ln, 1, "bad min_dim '" + rest + "'");
            }
        } else {
            throw ParseError(ln, 1, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_lhs || !have_rhs) throw ParseError(r.line, 1, "schema " + r.name + " needs lhs and rhs");
    s.n_free = static_cast<int>(names.size());
    for (const auto& n : let_names) names.push_back(n);
    s.vars = names;
    remap(s.lhs, s.n_free);
    remap(s.rhs, s.n_free);
    for (auto& c : s.conditions) remap(c, s.n_free);
    for (auto& l : s.lets) {
        for (auto& slot : l.slots)
            if (slot >= kLetBase) slot = s.n_free + (slot - kLetBase);
        for (auto& e : l.avoid) remap(e, s.n_free);
    }
    std::map<std::string, IndexExpr> idx;
    collect_indices(s.lhs, s, idx);
    collect_indices(s.rhs, s, idx);
    for (auto& [k, e] : idx) s.all_indices.push_back(e);
    return s;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int log2_exact(long dim) {
    int n = 0;
    while ((1L << n) < dim) ++n;
    if ((1L << n) != dim) throw Error(ErrorKind::DimensionNotPowerOfTwo, std::to_string(dim));
    return n;
}

bool cmp(long a, const std::string& op, long b) {
    if (op == "==") return a == b;
    if (op == "!=") return a != b;
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    return a >= b;
}

int form_of(const Condition& c, const std::vector<long>& env, long dim) {
    long v[4];
    for (int i = 0; i < 4; ++i) {
        v[i] = c.exprs[i].eval(env, dim);
        if (v[i] < 0 || v[i] >= dim) return 0;
    }
    return gray_hh_form(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
                        static_cast<int>(v[3]), log2_exact(dim));
}

// Indices of plain generators are in range and, for X and H, distinct.
bool gens_ok(const std::vector<PatternItem>& items, const std::vector<long>& env, long dim) {
    for (const auto& it : items) {
        if (it.kind == PatternItem::Kind::Group) {
            if (it.power.eval(env, dim) < 0) return false;
            if (!gens_ok(it.items, env, dim)) return false;
        } else if (it.kind == PatternItem::Kind::Gen) {
            long a = it.idx[0].eval(env, dim);
            if (a < 0 || a >= dim) return false;
            if (it.gen != GenKind::Neg) {
                long b = it.idx[1].eval(env, dim);
                if (b < 0 || b >= dim || a == b) return false;
            }
        } else {
            for (const auto& e : it.idx) {
                long a = e.eval(env, dim);
                if (a < 0 || a >= dim) return false;
            }
        }
    }
    return true;
}

void expand(const std::vector<PatternItem>& items, const std::vector<long>& env, int dim,
            std::vector<Gen>& out) {
    for (const auto& it : items) {
        switch (it.kind) {
            case PatternItem::Kind::Gen: {
                int a = static_cast<int>(it.idx[0].eval(env, dim));
                if (it.gen == GenKind::Neg) {
                    out.push_back(Gen::neg(a));
                } else {
                    int b = static_cast<int>(it.idx[1].eval(env, dim));
                    out.push_back(it.gen == GenKind::X ? Gen::x(a, b) : Gen::h(a, b));
                }
                break;
            }
            case PatternItem::Kind::Group: {
                long k = it.power.eval(env, dim);
                for (long r = 0; r < k; ++r) expand(it.items, env, dim, out);
                break;
            }
            case PatternItem::Kind::Macro: {
                int v[4];
                for (int i = 0; i < 4; ++i) v[i] = static_cast<int>(it.idx[i].eval(env, dim));
                Word w;
                if (it.macro == "SIGMA" || it.macro == "SIGMAP") {
                    SigmaPair sp = sigma(v[0], v[1], v[2], v[3], dim);
                    w = it.macro == "SIGMA" ? sp.forward : sp.backward;
                } else {
                    WWords ww = build_w1_w2(v[0], v[1], v[2], v[3], log2_exact(dim));
                    const auto& pick = it.macro == "W1" ? ww.w1 : ww.w2;
                    if (!pick)
                        throw Error(ErrorKind::FormMismatch,
                                    it.macro + " on a tuple of the other Gray form");
                    w = flatten(*pick);
                }
                out.insert(out.end(), w.gens.begin(), w.gens.end());
                break;
            }
        }
    }
}

// Fills let-bound slots; false when too few fresh indices exist.
bool bind_lets(const EquationSchema& s, std::vector<long>& env, long dim) {
    for (const auto& l : s.lets) {
        std::set<long> avoid;
        for (const auto& e : l.avoid) avoid.insert(e.eval(env, dim));
        long next = 0;
        for (int slot : l.slots) {
            while (next < dim && avoid.count(next)) ++next;
            if (next >= dim) return false;
            env[slot] = next++;
        }
    }
    return true;
}

bool admissible(const EquationSchema& s, std::vector<long>& env, long dim) {
    if (!bind_lets(s, env, dim)) return false;
    for (const auto& c : s.conditions)
        if (!eval_condition(c, s, env, dim)) return false;
    return gens_ok(s.lhs, env, dim) && gens_ok(s.rhs, env, dim);
}

std::string pattern_items_str(const std::vector<PatternItem>& items, const EquationSchema& s) {
    std::string out;
    for (const auto& it : items) {
        if (!out.empty()) out += ' ';
        switch (it.kind) {
            case PatternItem::Kind::Gen:
                out += it.gen == GenKind::Neg ? "Z[" : it.gen == GenKind::X ? "X[" : "H[";
                for (std::size_t i = 0; i < it.idx.size(); ++i) {
                    if (i) out += ',';
                    out += expr_str(it.idx[i], s);
                }
                out += ']';
                break;
            case PatternItem::Kind::Group: {
                out += '(' + pattern_items_str(it.items, s) + ')';
                bool one = it.power.kind == IndexExpr::Kind::Lit && it.power.value == 1;
                if (!one) out += '^' + expr_str(it.power, s);
                break;
            }
            case PatternItem::Kind::Macro:
                out += it.macro + '(';
                for (std::size_t i = 0; i < it.idx.size(); ++i) {
                    if (i) out += ',';
                    out += expr_str(it.idx[i], s);
                }
                out += ')';
                break;
        }
    }
    return out;
}

}  // namespace

bool eval_condition(const Condition& c, const EquationSchema& s, const std::vector<long>& env,
                    long dim) {
    switch (c.kind) {
        case Condition::Kind::And:
            for (const auto& k : c.kids)
                if (!eval_condition(k, s, env, dim)) return false;
            return true;
        case Condition::Kind::Or:
            for (const auto& k : c.kids)
                if (eval_condition(k, s, env, dim)) return true;
            return false;
        case Condition::Kind::Not: return !eval_condition(c.kids[0], s, env, dim);
        case Condition::Kind::Cmp: return cmp(c.exprs[0].eval(env, dim), c.op, c.rhs.eval(env, dim));
        case Condition::Kind::Odd: return (c.exprs[0].eval(env, dim) & 1L) != 0;
        case Condition::Kind::Even: return (c.exprs[0].eval(env, dim) & 1L) == 0;
        case Condition::Kind::AllDistinct:
        case Condition::Kind::Distinct: {
            const auto& list = c.kind == Condition::Kind::AllDistinct ? s.all_indices : c.exprs;
            std::set<long> seen;
            for (const auto& e : list)
                if (!seen.insert(e.eval(env, dim)).second) return false;
            return true;
        }
        case Condition::Kind::Card: {
            std::set<long> seen;
            for (const auto& e : c.exprs) seen.insert(e.eval(env, dim));
            return cmp(static_cast<long>(seen.size()), c.op, c.rhs.eval(env, dim));
        }
        case Condition::Kind::Gray36: return form_of(c, env, dim) == 1;
        case Condition::Kind::Gray37: return form_of(c, env, dim) == 2;
        case Condition::Kind::In: {
            long x = c.rhs.eval(env, dim);
            bool found = false;
            for (const auto& e : c.exprs) found = found || e.eval(env, dim) == x;
            return found != c.negated;
        }
    }
    return false;
}

std::string expr_str(const IndexExpr& e, const EquationSchema& s) {
    auto wrap = [&](const IndexExpr& a) {
        bool compound = a.kind == IndexExpr::Kind::Add || a.kind == IndexExpr::Kind::Sub;
        return compound ? "(" + expr_str(a, s) + ")" : expr_str(a, s);
    };
    switch (e.kind) {
        case IndexExpr::Kind::Lit: return std::to_string(e.value);
        case IndexExpr::Kind::Var:
            return "$" + (e.slot >= 0 && e.slot < static_cast<int>(s.vars.size()) ? s.vars[e.slot]
                                                                                : std::string("?"));
        case IndexExpr::Kind::Dim: return "N";
        case IndexExpr::Kind::Add: return expr_str(e.args[0], s) + "+" + expr_str(e.args[1], s);
        case IndexExpr::Kind::Sub: return expr_str(e.args[0], s) + "-" + wrap(e.args[1]);
        case IndexExpr::Kind::Mul: return wrap(e.args[0]) + "*" + wrap(e.args[1]);
        case IndexExpr::Kind::Neg: return "-" + wrap(e.args[0]);
    }
    return "?";
}

std::string pattern_str(const std::vector<PatternItem>& items, const EquationSchema& s) {
    std::string out = pattern_items_str(items, s);
    return out.empty() ? "eps" : out;
}

std::vector<PatternItem> flat_gens(const std::vector<PatternItem>& items) {
    std::vector<PatternItem> out;
    for (const auto& it : items) {
        if (it.kind == PatternItem::Kind::Gen) {
            out.push_back(it);
        } else if (it.kind == PatternItem::Kind::Group) {
            if (it.power.kind != IndexExpr::Kind::Lit || it.power.value < 0)
                throw Error(ErrorKind::PreconditionViolated, "group power is not a literal");
            auto inner = flat_gens(it.items);
            for (long r = 0; r < it.power.value; ++r) out.insert(out.end(), inner.begin(), inner.end());
        } else {
            throw Error(ErrorKind::PreconditionViolated, "macro " + it.macro + " in a plain pattern");
        }
    }
    return out;
}

std::vector<Catalog> parse_catalogs(std::string_view text) {
    std::vector<Catalog> cats;
    std::vector<RawRecord> pending;
    auto flush = [&]() {
        for (const auto& r : pending) cats.back().schemas.push_back(build_schema(r));
        pending.clear();
    };
    std::istringstream in{std::string(text)};
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        std::size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto [kw, rest] = split_keyword(line);
        if (kw == "catalog") {
            if (!cats.empty()) flush();
            if (rest.empty()) throw ParseError(ln, 1, "catalog needs an id");
            cats.push_back(Catalog{rest, {}, {}});
            continue;
        }
        if (cats.empty()) throw ParseError(ln, 1, "expected 'catalog <id>'");
        if (kw == "unreadable") {
            std::istringstream ss(rest);
            std::string name;
            while (ss >> name) cats.back().unreadable.push_back(name);
        } else if (kw == "schema") {
            if (rest.empty()) throw ParseError(ln, 1, "schema needs a name");
            pending.push_back(RawRecord{rest, ln, {}});
        } else {
            if (pending.empty()) throw ParseError(ln, 1, "'" + kw + "' outside a schema");
            pending.back().lines.emplace_back(ln, line);
        }
    }
    if (!cats.empty()) flush();
    for (const auto& c : cats) {
        std::set<std::string> seen;
        for (const auto& s : c.schemas)
            if (!seen.insert(s.name).second)
                throw Error(ErrorKind::ParseError, "duplicate schema name " + s.name + " in " + c.id);
    }
    return cats;
}

std::string print_catalog(const Catalog& c) {
    std::string out = "catalog " + c.id + "\n";
    if (!c.unreadable.empty()) {
        out += "unreadable";
        for (const auto& u : c.unreadable) out += " " + u;
        out += "\n";
    }
    for (const auto& s : c.schemas) {
        out += "schema " + s.name + "\n";
        out += "  lhs " + pattern_str(s.lhs, s) + "\n";
        out += "  rhs " + pattern_str(s.rhs, s) + "\n";
        for (const auto& t : s.let_texts) out += "  let " + t + "\n";
        for (const auto& t : s.condition_texts) out += "  when " + t + "\n";
        out += "  min_dim " + std::to_string(s.min_dim) + "\n";
    }
    return out;
}

const std::vector<Catalog>& builtin_catalogs() {
    static const std::vector<Catalog> cats = parse_catalogs(builtin_catalog_text());
    return cats;
}

const Catalog& builtin_catalog(const std::string& id) {
    for (const auto& c : builtin_catalogs())
        if (c.id == id) return c;
    throw Error(ErrorKind::OutOfRange, "unknown catalog '" + id + "'");
}

std::string binding_str(const EquationSchema& s, const std::vector<long>& values) {
    std::string out;
    for (std::size_t i = 0; i < s.vars.size() && i < values.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += s.vars[i] + "=" + std::to_string(values[i]);
    }
    return out.empty() ? "-" : out;
}

std::vector<Instance> instantiate(const EquationSchema& s, int dim, std::size_t budget,
                                  std::uint64_t seed, InstantiateStats* stats) {
    if (dim < s.min_dim)
        throw Error(ErrorKind::DimensionTooSmall,
                    s.name + " needs dimension " + std::to_string(s.min_dim) + ", got " + std::to_string(dim));
    const int k = s.n_free;
    const std::size_t nslots = s.vars.size();
    constexpr std::uint64_t kEnumLimit = std::uint64_t{1} << 22;

    std::uint64_t space = 1;
    bool overflow = false;
    for (int i = 0; i < k; ++i) {
        if (space > kEnumLimit) {
            overflow = true;
            break;
        }
        space *= static_cast<std::uint64_t>(dim);
    }
    overflow = overflow || space > kEnumLimit;

    std::mt19937_64 rng(seed ^ fnv1a(s.name));
    std::vector<std::vector<long>> chosen;
    InstantiateStats st;
    st.space = overflow ? 0 : space;

    if (!overflow) {
        std::vector<long> env(nslots, 0);
        std::vector<long> free(k, 0);
        std::vector<std::vector<long>> all;
        for (std::uint64_t idx = 0; idx < space; ++idx) {
            std::uint64_t r = idx;
            for (int i = k - 1; i >= 0; --i) {
                env[i] = static_cast<long>(r % static_cast<std::uint64_t>(dim));
                r /= static_cast<std::uint64_t>(dim);
            }
            if (admissible(s, env, dim)) all.push_back(env);
        }
        st.admissible = all.size();
        if (all.size() > budget) {
            std::vector<std::size_t> order(all.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            order.resize(budget);
            std::sort(order.begin(), order.end());
            for (std::size_t i : order) chosen.push_back(all[i]);
            st.sampled = true;
        } else {
            chosen = std::move(all);
        }
    } else {
        st.exhaustive = false;
        st.sampled = true;
        std::set<std::vector<long>> seen;
        std::uniform_int_distribution<long> pick(0, dim - 1);
        std::size_t attempts = 0, max_attempts = std::max<std::size_t>(budget, 1) * 2000;
        std::vector<long> env(nslots, 0);
        while (seen.size() < budget && attempts < max_attempts) {
            ++attempts;
            for (int i = 0; i < k; ++i) env[i] = pick(rng);
            if (admissible(s, env, dim)) seen.insert(env);
        }
        chosen.assign(seen.begin(), seen.end());
        st.admissible = chosen.size();
    }

    std::vector<Instance> out;
    out.reserve(chosen.size());
    for (auto& env : chosen) {
        Instance inst;
        inst.lhs.dim = inst.rhs.dim = dim;
        expand(s.lhs, env, dim, inst.lhs.gens);
        expand(s.rhs, env, dim, inst.rhs.gens);
        inst.values = std::move(env);
        out.push_back(std::move(inst));
    }
    if (stats) *stats = st;
    return out;
}

}  // namespace rcch
