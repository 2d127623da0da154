// SPDX-License-Identifier: Apache-2.0
//
// Soundness checking of equation catalogs, the W words for Gray-adjacent
// H pairs, and the coset transport generator.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcch/schema.hpp"
#include "rcch/words.hpp"

namespace rcch {

bool check_sound(const Word& lhs, const Word& rhs);

struct Failure {
    std::string binding;
    std::string lhs, rhs;
};

struct SchemaReport {
    std::string name;
    std::size_t instances = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool sampled = false;
    std::string skipped;  // non-empty when the schema was not run
    std::vector<Failure> failures;
};

struct CatalogReport {
    std::string id;
    int dim = 0;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    std::vector<SchemaReport> schemas;  // sorted by name
    std::vector<std::string> unreadable;

    bool all_pass() const;
    std::size_t total_instances() const;
};

inline constexpr std::size_t kDefaultBudget = 2000;
inline constexpr std::uint64_t kDefaultSeed = 1;

// Failures kept per schema in the report.
inline constexpr std::size_t kMaxReportedFailures = 10;

CatalogReport check_catalog(const Catalog& c, int dim, std::size_t budget = kDefaultBudget,
                            std::uint64_t seed = kDefaultSeed);
// Built-in catalog by id; fig12_13_semantic is checked at the circuit level.
CatalogReport check_catalog(const std::string& id, int dim, std::size_t budget = kDefaultBudget,
                            std::uint64_t seed = kDefaultSeed);

std::string report_text(const CatalogReport& r);
std::string report_json(const CatalogReport& r);

// Which Gray form (b = a^u, c = a^v with u < v) the tuple takes:
// 1 for (x0y0z, x1y0z, x0y1z, x1y1z), 2 for (x0y0z, x0y1z, x1y0z, x1y1z), 0 otherwise.
int gray_hh_form(int a, int b, int c, int d, int n);

// At most one of the two is set, matching the tuple's form. Throws FormMismatch
// when neither form holds.
struct WWords {
    std::optional<PWord> w1, w2;
};
WWords build_w1_w2(int a, int b, int c, int d, int n);
// The set word of build_w1_w2.
PWord build_w(int a, int b, int c, int d, int n);

// The shortcut for X on wire j: empty when `bit` is 0, else E(Z_j) followed by
// the sign-and-swap pairs over the j-th bit.
PWord x_shortcut(int j, int bit, int n);

// Two-qubit circuit equations whose statements are fully recoverable.
struct CircuitEquation {
    std::string name;
    int n_qubits = 2;
    std::string lhs, rhs;  // circuit files
};
const std::vector<CircuitEquation>& fig12_13_equations();
const std::vector<std::string>& fig12_13_unreadable();

// ---- coset transport ----

enum class Coset { E, Z, H, HZ };

const char* coset_label(Coset c);
Word coset_word(Coset c, int dim);

// An index in a generated word: a variable name or a literal.
struct Term {
    std::string var;  // empty for a literal
    long lit = 0;

    static Term v(std::string name) { return {std::move(name), 0}; }
    static Term l(long x) { return {"", x}; }
    bool is_var() const { return !var.empty(); }
    bool operator==(const Term& o) const { return var == o.var && (is_var() || lit == o.lit); }
};

struct TermGen {
    GenKind kind = GenKind::Neg;
    Term a, b;
};

// A pair of generators.
struct TermPair {
    TermGen first, second;
};

struct HResult {
    std::vector<TermPair> pairs;
    Coset next = Coset::E;
};

// Class of a term: 0, 1, or 2 for "neither 0 nor 1".
using Classifier = int (*)(const Term&, void*);

HResult h_step(Coset c, const TermGen& g, Classifier cls, void* ctx);
// Concrete indices.
HResult h_step(Coset c, const Gen& g);

Word term_pairs_word(const std::vector<TermPair>& pairs, int dim);

struct TransportEntry {
    std::string name;
    std::string lhs, rhs;  // word patterns
    std::vector<std::string> conditions;
    int min_dim = 2;
};

// Item (a) and item (b) equations over the built-in fig7 catalog.
// Throws TransportInvariantViolated when the two sides end in different cosets.
std::vector<TransportEntry> rs_transport_entries();
Catalog rs_transport();
std::string rs_transport_text();

// Coset transversal checked over every generator at `dim`: failures as text.
std::vector<std::string> check_h_table(int dim);

// Generated schema vs the hand-transcribed listing, compared up to a
// renaming of variables; conditions compared by truth table at `dim`.
bool schemas_match(const EquationSchema& generated, const EquationSchema& listed, int dim,
                   std::string* why = nullptr);

}  // namespace rcch
