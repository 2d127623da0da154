// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "oracle.hpp"
#include "rcch/axioms.hpp"
#include "rcch/codec.hpp"
#include "rcch/error.hpp"
#include "rcch/graycode.hpp"

using namespace rcch;

namespace {

const EquationSchema* find(const Catalog& c, const std::string& name) {
    for (const auto& s : c.schemas)
        if (s.name == name) return &s;
    return nullptr;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::OutOfRange;
}

}  // namespace

TEST(Sound, Examples) {
    EXPECT_TRUE(check_sound(Word{8, {Gen::neg(0), Gen::x(0, 1), Gen::neg(1), Gen::x(0, 1)}}, Word{8, {}}));
    // DE-ZZ at a=2, b=5
    EXPECT_TRUE(check_sound(Word{8, {Gen::neg(2), Gen::neg(5)}},
                            Word{8, {Gen::neg(1), Gen::neg(2), Gen::neg(1), Gen::neg(5)}}));
    EXPECT_FALSE(check_sound(Word{8, {Gen::neg(0), Gen::neg(1)}}, Word{8, {}}));
    EXPECT_EQ(kind_of([] { check_sound(Word{4, {}}, Word{8, {}}); }), ErrorKind::DimensionMismatch);
}

TEST(Sound, AgreesWithOracle) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        Word a = random_word(8, 6, rng()), b = random_word(8, 6, rng());
        bool same = oracle::close(oracle::word(a), oracle::word(b));
        EXPECT_EQ(check_sound(a, b), same);
        EXPECT_TRUE(check_sound(concat(a, inverse(a)), Word{8, {}}));
    }
}

TEST(Catalogs, AllPassAtEight) {
    for (const char* id : {"fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "a32_raw", "fig12_13_semantic"}) {
        CatalogReport r = check_catalog(id, 8, 300, 1);
        EXPECT_TRUE(r.all_pass()) << report_text(r);
        EXPECT_GT(r.total_instances(), 0u) << id;
    }
}

TEST(Catalogs, SampledAtSixteen) {
    for (const char* id : {"fig7", "fig8", "fig9"}) {
        CatalogReport r = check_catalog(id, 16, 40, 5);
        EXPECT_TRUE(r.all_pass()) << report_text(r);
    }
}

TEST(Catalogs, SkipsBelowMinimumDimension) {
    CatalogReport r = check_catalog("fig8", 4, 50, 1);
    bool skipped = false;
    for (const auto& s : r.schemas)
        if (s.name == "fig8:35") skipped = !s.skipped.empty();
    EXPECT_TRUE(skipped);
}

TEST(Catalogs, UnsoundSchemaIsReported) {
    auto cats = parse_catalogs(
        "catalog bad\n"
        "schema bad:1\n"
        "  lhs (Z[$a] Z[$b])\n"
        "  rhs eps\n"
        "  when $a < $b\n"
        "schema bad:2\n"
        "  lhs (Z[$a] Z[$a])\n"
        "  rhs eps\n");
    CatalogReport r = check_catalog(cats.at(0), 8);
    EXPECT_FALSE(r.all_pass());
    ASSERT_EQ(r.schemas.size(), 2u);
    EXPECT_EQ(r.schemas[0].failed, 28u);
    EXPECT_EQ(r.schemas[0].failures.size(), kMaxReportedFailures);
    EXPECT_EQ(r.schemas[1].failed, 0u);
    std::string text = report_text(r);
    EXPECT_NE(text.find("FAIL"), std::string::npos);
    EXPECT_NE(text.find("1 schema failed"), std::string::npos);
    std::string js = report_json(r);
    std::istringstream in(js);
    std::string line, last;
    int n = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        EXPECT_TRUE(j.contains("record"));
        last = line;
        ++n;
    }
    EXPECT_EQ(n, 3);
    EXPECT_FALSE(nlohmann::json::parse(last)["all_pass"].get<bool>());
}

TEST(Catalogs, ReportsListUnreadable) {
    CatalogReport r = check_catalog("fig12_13_semantic", 8);
    EXPECT_FALSE(r.unreadable.empty());
    EXPECT_NE(report_text(r).find("source-unreadable"), std::string::npos);
}

TEST(W, FormsAndShortcut) {
    // states by Gray value: pick a with zeros on two wires
    const int n = 3;
    auto idx = [&](std::uint64_t v) { return static_cast<int>(gray_index(n, v)); };
    int a = idx(0b000), b1 = idx(0b100), c1 = idx(0b010), d = idx(0b110);
    EXPECT_EQ(gray_hh_form(a, b1, c1, d, n), 1);
    EXPECT_EQ(gray_hh_form(a, c1, b1, d, n), 2);
    EXPECT_EQ(gray_hh_form(a, b1, b1, d, n), 0);
    EXPECT_TRUE(x_shortcut(0, 0, n).pgens.empty());
    PWord x = x_shortcut(0, 1, n);
    EXPECT_TRUE(oracle::close(word_as_circuit_matrix(flatten(x), n), oracle::on_wire(n, 0, oracle::x1())));
    EXPECT_EQ(kind_of([&] { build_w1_w2(0, 5, 6, 7, n); }), ErrorKind::FormMismatch);
}

TEST(WProperty, AllGrayTuples) {
    for (int n : {3, 4}) {
        const int dim = 1 << n;
        int checked = 0;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = 0; c < dim; ++c)
                    for (int d = 0; d < dim; ++d) {
                        int form = gray_hh_form(a, b, c, d, n);
                        if (!form) continue;
                        WWords w = build_w1_w2(a, b, c, d, n);
                        EXPECT_EQ(w.w1.has_value(), form == 1);
                        EXPECT_EQ(w.w2.has_value(), form == 2);
                        Word lhs{dim, {Gen::h(a, b), Gen::h(c, d)}};
                        EXPECT_TRUE(check_sound(lhs, flatten(build_w(a, b, c, d, n))));
                        ++checked;
                    }
        EXPECT_GT(checked, 0);
    }
}

TEST(Transport, HStepExamples) {
    HResult r = h_step(Coset::E, Gen::h(2, 5));
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.next, Coset::H);
    EXPECT_EQ(term_pairs_word(r.pairs, 8).gens, (std::vector<Gen>{Gen::h(2, 5), Gen::h(0, 1)}));
    EXPECT_STREQ(coset_label(Coset::E), "eps");
    EXPECT_STREQ(coset_label(Coset::HZ), "HZ");
    EXPECT_TRUE(coset_word(Coset::E, 8).gens.empty());
}

TEST(Transport, HTableExhaustive) {
    EXPECT_TRUE(check_h_table(8).empty());
    EXPECT_TRUE(check_h_table(4).empty());
}

TEST(Transport, HTableAgainstOracle) {
    for (Coset c : {Coset::E, Coset::Z, Coset::H, Coset::HZ}) {
        std::vector<Gen> gs;
        for (int a = 0; a < 8; ++a) {
            gs.push_back(Gen::neg(a));
            for (int b = 0; b < 8; ++b)
                if (a != b) {
                    gs.push_back(Gen::x(a, b));
                    gs.push_back(Gen::h(a, b));
                }
        }
        for (const Gen& g : gs) {
            HResult r = h_step(c, g);
            Word cg = concat(coset_word(c, 8), Word{8, {g}});
            Word pc = concat(term_pairs_word(r.pairs, 8), coset_word(r.next, 8));
            ASSERT_TRUE(oracle::close(oracle::word(cg), oracle::word(pc))) << coset_label(c) << " " << gen_str(g);
        }
    }
}

TEST(Transport, GeneratedEquations) {
    auto entries = rs_transport_entries();
    ASSERT_FALSE(entries.empty());
    const TransportEntry* zz = nullptr;
    const TransportEntry* a1 = nullptr;
    for (const auto& e : entries) {
        if (e.name == "DE-ZZ") zz = &e;
        if (e.name == "eps-a1*") a1 = &e;
    }
    ASSERT_TRUE(zz && a1);
    EXPECT_EQ(zz->lhs, "(Z[$a] Z[$b])");
    EXPECT_EQ(zz->rhs, "(Z[1] Z[$a]) (Z[1] Z[$b])");
    EXPECT_EQ(a1->lhs, "(Z[1] Z[0])^2");
    EXPECT_EQ(a1->rhs, "eps");

    Catalog cat = rs_transport();
    EXPECT_EQ(cat.schemas.size(), entries.size());
    auto again = parse_catalogs(rs_transport_text());
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(print_catalog(again[0]), print_catalog(cat));
    CatalogReport r = check_catalog(cat, 8, 300, 1);
    EXPECT_TRUE(r.all_pass()) << report_text(r);
}

TEST(Transport, ListingSpotChecks) {
    Catalog gen = rs_transport();
    const Catalog& listed = builtin_catalog("a32_raw");
    const std::pair<const char*, const char*> spots[] = {{"rs:DE-ZZ", "a32:DE-ZZ"},
                                                         {"rs:DE-HH", "a32:DE-HH"},
                                                         {"rs:eps-a1*", "a32:eps-a1"},
                                                         {"rs:H-a3", "a32:H-a3"},
                                                         {"rs:Z-a3-2", "a32:Z-a3-2"}};
    for (const auto& [g, l] : spots) {
        const EquationSchema* gs = find(gen, g);
        const EquationSchema* ls = find(listed, l);
        ASSERT_TRUE(gs && ls) << g;
        std::string why;
        EXPECT_TRUE(schemas_match(*gs, *ls, 8, &why)) << g << ": " << why;
    }
    // a mismatching pair is told apart
    std::string why;
    EXPECT_FALSE(schemas_match(*find(gen, "rs:DE-ZZ"), *find(listed, "a32:DE-HH"), 8, &why));
    EXPECT_FALSE(why.empty());
}
