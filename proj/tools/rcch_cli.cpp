// SPDX-License-Identifier: Apache-2.0
//
// rcch: command-line front end.
// Exit codes: 0 success, 1 semantic failure, 2 usage or parse error.
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "rcch/acceptance.hpp"
#include "rcch/axioms.hpp"
#include "rcch/circuit.hpp"
#include "rcch/codec.hpp"
#include "rcch/error.hpp"
#include "rcch/graycode.hpp"
#include "rcch/normalform.hpp"
#include "rcch/schema.hpp"
#include "rcch/synth.hpp"

using namespace rcch;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

// First keyword of the first non-comment line.
std::string header_word(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string w;
        if (ls >> w) return w;
    }
    return "";
}

bool has_pairs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        if (line.find('(') != std::string::npos) return true;
    }
    return false;
}

// Pairs consecutive generators; throws PreconditionViolated on a bad pair.
PWord pair_up(const Word& w) {
    if (w.gens.size() % 2)
        throw Error(ErrorKind::PreconditionViolated, "odd number of generators cannot be paired");
    PWord pw;
    pw.dim = w.dim;
    for (std::size_t i = 0; i < w.gens.size(); i += 2) {
        auto p = make_pair_gen(w.gens[i], w.gens[i + 1]);
        if (!p)
            throw Error(ErrorKind::PreconditionViolated,
                        gen_str(w.gens[i]) + " " + gen_str(w.gens[i + 1]) + " is not a paired generator");
        pw.pgens.push_back(*p);
    }
    return pw;
}

Word read_any_word(const std::string& text) {
    return has_pairs(text) ? flatten(parse_pword(text)) : parse_word(text);
}

int qubits_of(int dim) { return log2_dim(dim); }

// Matrix of a circuit, word or matrix file. Words above 2 qubits are read in
// the Gray-indexed basis unless `circuit_basis` is set.
RingMatrix matrix_of(const std::string& text, bool circuit_basis, int* qubits = nullptr) {
    std::string h = header_word(text);
    if (h == "qubits") {
        Circuit c = parse_circuit(text);
        if (qubits) *qubits = c.n_qubits;
        return semantics(c);
    }
    if (h == "dim") {
        Word w = read_any_word(text);
        if (qubits) *qubits = -1;
        return circuit_basis ? word_as_circuit_matrix(w, qubits_of(w.dim)) : word_semantics(w);
    }
    if (qubits) *qubits = -1;
    return RingMatrix::parse(text);
}

int cmd_gray(int n, std::optional<std::uint64_t> k) {
    if (n < 1 || n > 24) throw UsageError("gray: n must be in 1..24, got " + std::to_string(n));
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (k) {
        if (*k >= dim) throw UsageError("gray: k out of range: " + std::to_string(*k));
        std::cout << gray(n, *k) << '\n';
        return kOk;
    }
    for (std::uint64_t i = 0; i < dim; ++i) std::cout << i << ' ' << gray(n, i) << '\n';
    return kOk;
}

int cmd_synth(const std::string& file, bool paired, const std::string& out) {
    RingMatrix m = RingMatrix::parse(slurp(file));
    if (paired)
        emit(print_pword(synthesize_even(m)), out);
    else
        emit(print_word(exact_synthesize(m)), out);
    return kOk;
}

int cmd_encode(const std::string& file, const std::string& out, bool verify) {
    Circuit c = parse_circuit(slurp(file));
    if (c.n_qubits == 2)
        emit(print_word(encode2(c)), out);
    else
        emit(print_pword(encode_n(c)), out);
    if (verify && !roundtrip(c)) {
        std::cerr << "encode: round trip changed the semantics\n";
        return kFail;
    }
    return kOk;
}

int cmd_decode(const std::string& file, std::optional<int> n, const std::string& out, bool verify) {
    std::string text = slurp(file);
    Word w = read_any_word(text);
    int q = qubits_of(w.dim);
    if (n && *n != q)
        throw UsageError("decode: --n " + std::to_string(*n) + " does not match dim " + std::to_string(w.dim));
    Circuit c = q == 2 ? decode2(w) : decode_n(has_pairs(text) ? parse_pword(text) : pair_up(w));
    emit(print_circuit(c), out);
    if (verify && semantics(c) != word_as_circuit_matrix(w, q)) {
        std::cerr << "decode: circuit semantics differ from the word\n";
        return kFail;
    }
    return kOk;
}

int cmd_normalize(const std::string& file, const std::string& out) {
    std::string text = slurp(file);
    if (header_word(text) == "qubits") {
        Circuit c = parse_circuit(text);
        if (c.n_qubits != 1) throw UsageError("normalize: circuits must have one qubit");
        OneQubitNF nf = nf_1qubit(c.gates);
        emit(print_circuit(to_circuit(nf)) + "# normal form: " + nf_summary(nf) + "\n", out);
        return kOk;
    }
    Word w = read_any_word(text);
    std::size_t hs = 0;
    for (const auto& g : w.gens) hs += g.kind == GenKind::H;
    if (hs == 0) {
        NormalFormB nf = nf_hfree(w);
        emit(print_pword(to_pword(nf)) + "# normal form: " + nf_summary(nf) + "\n", out);
    } else {
        LowHNormalForm nf = nf_low_h(w);
        emit(print_pword(to_pword(nf)) + "# normal form: " + nf_summary(nf) + "\n", out);
    }
    return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b) {
    std::string ta = slurp(a), tb = slurp(b);
    bool circ_a = header_word(ta) == "qubits", circ_b = header_word(tb) == "qubits";
    // Mixed inputs compare in the circuit basis.
    bool mixed = circ_a != circ_b;
    RingMatrix ma = matrix_of(ta, mixed), mb = matrix_of(tb, mixed);
    if (ma.rows() != mb.rows()) {
        std::cout << "not equivalent (dimensions " << ma.rows() << " and " << mb.rows() << ")\n";
        return kFail;
    }
    bool eq = ma == mb;
    std::cout << (eq ? "equivalent" : "not equivalent") << '\n';
    return eq ? kOk : kFail;
}

int cmd_parity(const std::string& file) {
    std::string text = slurp(file);
    std::string h = header_word(text);
    Parities p;
    if (h == "dim") {
        Word w = read_any_word(text);
        p = word_parities(w);
        Parities m = matrix_parities(word_semantics(w));
        if (!(m == p)) {
            std::cout << "word parities " << p.h << ' ' << p.zx << " disagree with matrix " << m.h << ' '
                      << m.zx << '\n';
            return kFail;
        }
    } else {
        p = matrix_parities(matrix_of(text, false));
    }
    std::cout << "h-parity " << p.h << "\nzx-parity " << p.zx << '\n';
    return kOk;
}

int cmd_verify(const std::string& id, const std::string& file, int dim, std::size_t budget,
               std::uint64_t seed, bool json) {
    std::vector<CatalogReport> reps;
    if (!file.empty()) {
        for (const auto& c : parse_catalogs(slurp(file)))
            if (id.empty() || id == "all" || c.id == id) reps.push_back(check_catalog(c, dim, budget, seed));
        if (reps.empty()) throw UsageError("verify-axioms: no catalog " + id + " in " + file);
    } else if (id == "all") {
        for (const char* c : {"fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "a32_raw", "fig12_13_semantic", "rs"})
            reps.push_back(check_catalog(std::string(c), dim, budget, seed));
    } else {
        try {
            reps.push_back(check_catalog(id, dim, budget, seed));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::OutOfRange) throw UsageError("verify-axioms: unknown catalog " + id);
            throw;
        }
    }
    bool ok = true;
    for (const auto& r : reps) {
        std::cout << (json ? report_json(r) : report_text(r));
        ok = ok && r.all_pass();
    }
    return ok ? kOk : kFail;
}

int cmd_rs_gen(const std::string& out) {
    std::string text = rs_transport_text();
    parse_catalogs(text);  // must read back
    emit(text, out);
    return kOk;
}

int cmd_roundtrip(const std::string& file, int qubits, int count, int len, std::uint64_t seed) {
    if (!file.empty()) {
        Circuit c = parse_circuit(slurp(file));
        bool ok = roundtrip(c);
        std::cout << (ok ? "round trip ok" : "round trip FAILED") << '\n';
        return ok ? kOk : kFail;
    }
    if (qubits < 2) throw UsageError("roundtrip: --qubits must be at least 2");
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < count; ++i) {
        Circuit c = random_circuit(qubits, static_cast<int>(rng() % (len + 1)), rng());
        if (!roundtrip(c)) {
            if (bad++ == 0) std::cout << "first failure:\n" << print_circuit(c);
        }
    }
    std::cout << count - bad << '/' << count << " random " << qubits << "-qubit circuits round-trip\n";
    return bad ? kFail : kOk;
}

int cmd_selftest(std::uint64_t seed, int only) {
    bool ok = true;
    for (int i = 1; i <= kCriteria; ++i) {
        if (only && i != only) continue;
        CriterionResult r = run_criterion(i, seed);
        std::cout << criterion_line(r) << std::endl;
        ok = ok && r.pass;
    }
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << '\n';
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact real-Clifford+CH circuits, generator words and equational theories"};
    app.require_subcommand(1);

    std::string file, file2, out, catalog = "fig7", catalog_file;
    int n = 0, dim = 8, qubits = 2, count = 100, len = 20, criterion = 0;
    std::optional<std::uint64_t> k;
    std::optional<int> nq;
    std::size_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    bool paired = false, verify = false, json = false;

    auto* gray_cmd = app.add_subcommand("gray", "Print the n-bit Gray table, or the k-th code");
    gray_cmd->add_option("n", n, "number of bits")->required();
    gray_cmd->add_option("k", k, "index");

    auto* synth_cmd = app.add_subcommand("synth", "Synthesize an exact matrix into a word");
    synth_cmd->add_option("matrix", file, "matrix file")->required();
    synth_cmd->add_flag("--paired", paired, "paired generators; rejects odd parities");
    synth_cmd->add_option("--out", out, "output file");

    auto* enc_cmd = app.add_subcommand("encode", "Circuit file to word file");
    enc_cmd->add_option("circuit", file, "circuit file")->required();
    enc_cmd->add_option("--out", out, "output file");
    enc_cmd->add_flag("--verify", verify, "check the decode round trip");

    auto* dec_cmd = app.add_subcommand("decode", "Word file to circuit file");
    dec_cmd->add_option("word", file, "word file")->required();
    dec_cmd->add_option("--n,--qubits", nq, "expected number of qubits");
    dec_cmd->add_option("--out", out, "output file");
    dec_cmd->add_flag("--verify", verify, "check the circuit against the word");

    auto* nf_cmd = app.add_subcommand("normalize", "Normal form of a word (or a 1-qubit circuit)");
    nf_cmd->add_option("file", file, "word or circuit file")->required();
    nf_cmd->add_option("--out", out, "output file");

    auto* eq_cmd = app.add_subcommand("equiv", "Compare two circuit, word or matrix files exactly");
    eq_cmd->add_option("a", file, "first file")->required();
    eq_cmd->add_option("b", file2, "second file")->required();

    auto* par_cmd = app.add_subcommand("parity", "H- and ZX-parities of a word, circuit or matrix");
    par_cmd->add_option("file", file, "input file")->required();

    auto* ver_cmd = app.add_subcommand("verify-axioms", "Check a catalog of equation schemas");
    ver_cmd->add_option("--catalog", catalog, "catalog id, or 'all'");
    ver_cmd->add_option("--file", catalog_file, "read catalogs from a schema file");
    ver_cmd->add_option("--dim", dim, "dimension N")->check(CLI::Range(2, 64));
    ver_cmd->add_option("--budget", budget, "instances per schema");
    ver_cmd->add_option("--seed", seed, "sampling seed");
    ver_cmd->add_flag("--json", json, "one JSON record per line");

    auto* rs_cmd = app.add_subcommand("rs-gen", "Write the transported equational theory");
    rs_cmd->add_option("--out", out, "output file");

    auto* rt_cmd = app.add_subcommand("roundtrip", "Check decode(encode(c)) on a file or random circuits");
    rt_cmd->add_option("circuit", file, "circuit file");
    rt_cmd->add_option("--qubits", qubits, "width of random circuits");
    rt_cmd->add_option("--count", count, "number of random circuits");
    rt_cmd->add_option("--len", len, "maximum random circuit length");
    rt_cmd->add_option("--seed", seed, "seed");

    auto* st_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
    st_cmd->add_option("--seed", seed, "seed");
    st_cmd->add_option("--criterion", criterion, "run one criterion (1-8)")->check(CLI::Range(1, kCriteria));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gray_cmd) return cmd_gray(n, k);
        if (*synth_cmd) return cmd_synth(file, paired, out);
        if (*enc_cmd) return cmd_encode(file, out, verify);
        if (*dec_cmd) return cmd_decode(file, nq, out, verify);
        if (*nf_cmd) return cmd_normalize(file, out);
        if (*eq_cmd) return cmd_equiv(file, file2);
        if (*par_cmd) return cmd_parity(file);
        if (*ver_cmd) return cmd_verify(catalog_file.empty() || ver_cmd->count("--catalog") ? catalog : "",
                                        catalog_file, dim, budget, seed, json);
        if (*rs_cmd) return cmd_rs_gen(out);
        if (*rt_cmd) return cmd_roundtrip(file, qubits, count, len, seed);
        if (*st_cmd) return cmd_selftest(seed, criterion);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
