// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "rcch/error.hpp"
#include "rcch/schema.hpp"

using namespace rcch;

namespace {

const EquationSchema& find(const std::string& cat, const std::string& name) {
    for (const auto& s : builtin_catalog(cat).schemas)
        if (s.name == name) return s;
    throw std::runtime_error("no schema " + name);
}

}  // namespace

TEST(Schema, BuiltinCatalogs) {
    std::set<std::string> ids;
    for (const auto& c : builtin_catalogs()) ids.insert(c.id);
    for (const char* id : {"fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "a32_raw"})
        EXPECT_TRUE(ids.count(id)) << id;
    std::set<std::string> names;
    for (const auto& c : builtin_catalogs())
        for (const auto& s : c.schemas) EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_THROW(builtin_catalog("nope"), Error);
    EXPECT_FALSE(builtin_catalog("a32_raw").unreadable.empty());
}

TEST(Schema, InstanceCounts) {
    EXPECT_EQ(instantiate(find("fig8", "fig8:20"), 8, 2000, 1).size(), 8u);
    EXPECT_EQ(instantiate(find("fig8", "fig8:24"), 8, 2000, 1).size(), 6u);
    EXPECT_EQ(instantiate(find("fig7", "fig7:d4*"), 8, 2000, 1).size(), 1u);
}

TEST(Schema, ConditionsAgainstBruteForce) {
    // a+1 < c and c-a odd, over distinct a, c in [0, 8)
    std::set<std::pair<long, long>> want;
    for (long a = 0; a < 8; ++a)
        for (long c = 0; c < 8; ++c)
            if (a + 1 < c && (c - a) % 2 == 1) want.insert({a, c});
    const EquationSchema& s = find("fig8", "fig8:25");
    std::set<std::pair<long, long>> got;
    int sa = -1, sc = -1;
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        if (s.vars[i] == "a") sa = static_cast<int>(i);
        if (s.vars[i] == "c") sc = static_cast<int>(i);
    }
    ASSERT_GE(sa, 0);
    ASSERT_GE(sc, 0);
    for (const auto& in : instantiate(s, 8, 2000, 1)) {
        got.insert({in.values[sa], in.values[sc]});
        // lhs is (Z[a] X[a,c])
        ASSERT_EQ(in.lhs.gens.size(), 2u);
        EXPECT_EQ(in.lhs.gens[0], Gen::neg(static_cast<int>(in.values[sa])));
        EXPECT_EQ(in.lhs.gens[1], Gen::x(static_cast<int>(in.values[sa]), static_cast<int>(in.values[sc])));
    }
    EXPECT_EQ(got, want);
}

TEST(Schema, FreshLetBindsSmallestUnused) {
    const EquationSchema& s = find("fig8", "fig8:42");
    auto insts = instantiate(s, 8, 500, 3);
    ASSERT_FALSE(insts.empty());
    for (const auto& in : insts) {
        // lhs H[a,b] H[e,f] H[e,f] H[c,d]
        ASSERT_EQ(in.lhs.gens.size(), 4u);
        std::set<int> used = {in.lhs.gens[0].a, in.lhs.gens[0].b, in.lhs.gens[3].a, in.lhs.gens[3].b};
        EXPECT_LE(used.size(), 3u);
        int e = in.lhs.gens[1].a, f = in.lhs.gens[1].b;
        std::vector<int> fresh;
        for (int x = 0; x < 8 && fresh.size() < 2; ++x)
            if (!used.count(x)) fresh.push_back(x);
        EXPECT_EQ(e, fresh[0]);
        EXPECT_EQ(f, fresh[1]);
    }
}

TEST(Schema, SamplingIsSeededAndBounded) {
    const EquationSchema& s = find("fig8", "fig8:35");
    InstantiateStats st;
    auto a = instantiate(s, 16, 50, 9, &st);
    auto b = instantiate(s, 16, 50, 9);
    EXPECT_TRUE(st.sampled);
    EXPECT_EQ(a.size(), 50u);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].values, b[i].values);
}

TEST(Schema, DimensionTooSmall) {
    try {
        instantiate(find("fig8", "fig8:35"), 4, 10, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionTooSmall);
    }
}

TEST(Schema, PrintParseRoundTrip) {
    for (const auto& c : builtin_catalogs()) {
        std::string text = print_catalog(c);
        auto back = parse_catalogs(text);
        ASSERT_EQ(back.size(), 1u);
        EXPECT_EQ(back[0].id, c.id);
        EXPECT_EQ(back[0].unreadable, c.unreadable);
        ASSERT_EQ(back[0].schemas.size(), c.schemas.size());
        EXPECT_EQ(print_catalog(back[0]), text);
        for (std::size_t i = 0; i < c.schemas.size(); ++i) {
            const auto &x = c.schemas[i], &y = back[0].schemas[i];
            EXPECT_EQ(x.name, y.name);
            EXPECT_EQ(x.min_dim, y.min_dim);
            if (x.min_dim > 8) continue;
            auto ix = instantiate(x, 8, 50, 2), iy = instantiate(y, 8, 50, 2);
            ASSERT_EQ(ix.size(), iy.size()) << x.name;
            for (std::size_t k = 0; k < ix.size(); ++k) {
                EXPECT_EQ(ix[k].lhs, iy[k].lhs);
                EXPECT_EQ(ix[k].rhs, iy[k].rhs);
            }
        }
    }
}

TEST(Schema, ParseErrors) {
    EXPECT_THROW(parse_catalogs("catalog x\nschema x:1\n  lhs Z[$a\n  rhs eps\n"), ParseError);
    EXPECT_THROW(parse_catalogs("schema x:1\n  lhs eps\n  rhs eps\n"), ParseError);
    EXPECT_THROW(parse_catalogs("catalog x\nschema x:1\n  lhs Q[1]\n  rhs eps\n"), ParseError);
    try {
        parse_catalogs("catalog x\nschema x:1\n  lhs eps\n  rhs eps\n  when $a <\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5);
    }
}

TEST(Schema, ExpressionsAndPowers) {
    auto cats = parse_catalogs(
        "catalog t\n"
        "schema t:1\n"
        "  lhs (Z[$a] X[$a,$a+1])^3 Z[N-1]\n"
        "  rhs eps\n"
        "  when $a*2 == 4\n");
    const EquationSchema& s = cats.at(0).schemas.at(0);
    auto insts = instantiate(s, 8, 100, 1);
    ASSERT_EQ(insts.size(), 1u);
    const Word& l = insts[0].lhs;
    ASSERT_EQ(l.gens.size(), 7u);
    EXPECT_EQ(l.gens[0], Gen::neg(2));
    EXPECT_EQ(l.gens[1], Gen::x(2, 3));
    EXPECT_EQ(l.gens[6], Gen::neg(7));
}
