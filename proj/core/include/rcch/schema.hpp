// SPDX-License-Identifier: Apache-2.0
//
// Equation schemas: word patterns over index variables, side conditions,
// and their instantiation at a fixed dimension.
//
// Text format, one record per schema:
//
//   catalog fig8
//   unreadable fig12:82 fig12:83
//   schema fig8:25
//     lhs (Z[$a] X[$a,$c])
//     rhs (Z[$a+1] X[$a,$a+1]) (Z[$a+1] X[$a+1,$c]) (Z[$a] X[$a,$a+1])
//     when $a+1 < $c and odd($c-$a)
//     let $e,$f = fresh($a,$b,$c,$d)
//     min_dim 8
//
// `#` starts a comment. Parentheses and braces group; a group may carry a
// power `(...)^k`. `eps` is the empty word. Macros SIGMA, SIGMAP, W1, W2 take
// four index arguments.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcch/words.hpp"

namespace rcch {

struct IndexExpr {
    enum class Kind { Lit, Var, Dim, Add, Sub, Mul, Neg };
    Kind kind = Kind::Lit;
    long value = 0;  // Lit
    int slot = -1;   // Var
    std::vector<IndexExpr> args;

    long eval(const std::vector<long>& env, long dim) const;
};

struct Condition {
    enum class Kind { And, Or, Not, Cmp, Odd, Even, AllDistinct, Distinct, Card, Gray36, Gray37, In };
    Kind kind = Kind::And;
    std::string op;  // Cmp and Card: == != < <= > >=
    std::vector<IndexExpr> exprs;
    IndexExpr rhs;   // Cmp (exprs[0] op rhs), Card (card(exprs) op rhs)
    std::vector<Condition> kids;
    bool negated = false;  // In: `notin`
};

struct PatternItem {
    enum class Kind { Gen, Group, Macro };
    Kind kind = Kind::Gen;
    GenKind gen = GenKind::Neg;
    std::vector<IndexExpr> idx;  // Gen indices or Macro arguments
    std::string macro;
    std::vector<PatternItem> items;  // Group
    IndexExpr power;                 // Group
};

struct LetBinding {
    std::vector<int> slots;  // bound to the smallest indices outside `avoid`
    std::vector<IndexExpr> avoid;
};

struct EquationSchema {
    std::string name;
    std::vector<std::string> vars;  // slot -> name, free variables first
    int n_free = 0;
    std::vector<PatternItem> lhs, rhs;
    std::vector<Condition> conditions;
    std::vector<LetBinding> lets;
    int min_dim = 2;
    // Every syntactically distinct index of lhs and rhs, for `alldistinct`.
    std::vector<IndexExpr> all_indices;
    // Source lines, kept for reports and round-tripping.
    std::string lhs_text, rhs_text;
    std::vector<std::string> condition_texts, let_texts;
};

struct Catalog {
    std::string id;
    std::vector<EquationSchema> schemas;
    std::vector<std::string> unreadable;
};

std::vector<Catalog> parse_catalogs(std::string_view text);
// Emits text that parse_catalogs reads back.
std::string print_catalog(const Catalog& c);

const char* builtin_catalog_text();
const std::vector<Catalog>& builtin_catalogs();
// Throws OutOfRange for an unknown id.
const Catalog& builtin_catalog(const std::string& id);

struct Instance {
    std::vector<long> values;  // one per slot
    Word lhs, rhs;
};

std::string binding_str(const EquationSchema& s, const std::vector<long>& values);

struct InstantiateStats {
    std::uint64_t space = 0;      // size of the free-variable space
    std::uint64_t admissible = 0; // assignments passing all conditions (when enumerated)
    bool sampled = false;
    bool exhaustive = true;
};

// Throws DimensionTooSmall when dim < s.min_dim.
std::vector<Instance> instantiate(const EquationSchema& s, int dim, std::size_t budget,
                                  std::uint64_t seed, InstantiateStats* stats = nullptr);

bool eval_condition(const Condition& c, const EquationSchema& s, const std::vector<long>& env,
                    long dim);

// Expands groups with literal powers. Throws PreconditionViolated on macros
// or non-literal powers.
std::vector<PatternItem> flat_gens(const std::vector<PatternItem>& items);

std::string expr_str(const IndexExpr& e, const EquationSchema& s);
std::string pattern_str(const std::vector<PatternItem>& items, const EquationSchema& s);

}  // namespace rcch
