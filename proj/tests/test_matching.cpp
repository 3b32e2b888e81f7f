#include "properties.hpp"
#include "support.hpp"

#include <urm/audit.hpp>
#include <urm/families.hpp>
#include <urm/matching.hpp>

#include <gtest/gtest.h>

using namespace urm;
using namespace urm::testing;

TEST(MaximumMatching, Examples)
{
    EXPECT_EQ(maximum_matching(star(3)).size(), 1);
    EXPECT_EQ(maximum_matching(catalog_graph(CatalogName::G1)).size(), 4);
    EXPECT_EQ(maximum_matching(petersen()).size(), 5);
    EXPECT_EQ(maximum_matching(Graph(0)).size(), 0);
}

TEST(MaximumMatching, AgreesWithSubsetOracle)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto & g : enumerate_subcubic_girth5(n))
            ASSERT_EQ(matching_number(g), matching_number_by_subsets(g)) << to_graph6(g);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0)
                    es.emplace_back(u, v);
        if (es.size() > 18)
            es.resize(18);
        Graph g(n, es);
        ASSERT_EQ(matching_number(g), matching_number_by_subsets(g)) << to_graph6(g);
    }
}

TEST(MaximumMatching, TreesOfFamilyHaveSizeA)
{
    for (const auto & t : generate_T(13)) {
        auto ge = *is_in_T(t);
        EXPECT_EQ(maximum_matching(t).size(), ge.a.size());
    }
}

TEST(GallaiEdmonds, Examples)
{
    auto s = gallai_edmonds(star(3));
    EXPECT_EQ(s.d, (VertexSet{1, 2, 3}));
    EXPECT_EQ(s.a, VertexSet{0});
    EXPECT_TRUE(s.c.empty());

    auto c5 = gallai_edmonds(cycle(5));
    EXPECT_EQ(c5.d, VertexSet::range(5));
    EXPECT_TRUE(c5.a.empty());

    auto k2 = gallai_edmonds(path(2));
    EXPECT_TRUE(k2.d.empty());
    EXPECT_EQ(k2.c, VertexSet::range(2));
}

TEST(GallaiEdmonds, StructureOnSmallGraphs)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto & g : enumerate_subcubic_girth5(n))
            ASSERT_EQ(check_gallai_edmonds(g), "");
    for (auto name : all_catalog_names)
        ASSERT_EQ(check_gallai_edmonds(catalog_graph(name)), "");
    // not subcubic and with triangles
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 11);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    es.emplace_back(u, v);
        ASSERT_EQ(check_gallai_edmonds(Graph(n, es)), "");
    }
}

TEST(FactorCritical, Examples)
{
    EXPECT_TRUE(is_factor_critical(cycle(5)));
    EXPECT_FALSE(is_factor_critical(path(2)));
    EXPECT_TRUE(is_factor_critical(Graph(1)));
    EXPECT_FALSE(is_factor_critical(path(3)));
    EXPECT_THROW(is_factor_critical(Graph(2)), precondition_error);
}

TEST(MatchingAvoiding, Examples)
{
    EXPECT_FALSE(matching_avoiding(path(2), VertexSet{0}).has_value());
    auto trees = generate_T(10);
    for (const auto & t : trees) {
        auto ge = *is_in_T(t);
        for_each_subset(ge.d, 2, [&](VertexSet x) {
            auto m = matching_avoiding(t, x);
            ASSERT_TRUE(m.has_value());
            EXPECT_TRUE((m->covered() & x).empty());
            EXPECT_EQ(m->size(), ge.nu);
        });
    }
    EXPECT_THROW(matching_avoiding(path(2), VertexSet{5}), precondition_error);
}

TEST(MatchingAvoiding, ThreeVerticesWithoutCommonNeighbour)
{
    int found = 0;
    for (const auto & t : generate_T(13)) {
        auto ge = *is_in_T(t);
        for_each_subset(ge.d, 3, [&](VertexSet x) {
            if (qualifies(t, x, BCondition::ii)) {
                ++found;
                EXPECT_TRUE(matching_avoiding(t, x).has_value());
            }
        });
    }
    EXPECT_GT(found, 0);
}

TEST(Matching, Validation)
{
    auto g = path(4);
    EXPECT_THROW(Matching(g, EdgeSet{std::vector<Edge>{{0, 1}, {1, 2}}}), invalid_matching);
    EXPECT_THROW(Matching(g, EdgeSet{std::vector<Edge>{{0, 2}}}), invalid_matching);
    Matching m(g, EdgeSet{std::vector<Edge>{{2, 3}, {0, 1}}});
    EXPECT_EQ(m.size(), 2);
    EXPECT_EQ(m.mate(3), 2);
    EXPECT_EQ(m.edges()[0], Edge(0, 1));
    m.remove(Edge(0, 1));
    EXPECT_FALSE(m.covers(0));
}

TEST(Matching, EnumerationCountsIncludeEmpty)
{
    int count = 0;
    for_each_matching(path(3), [&](const std::vector<Edge> &) { ++count; });
    EXPECT_EQ(count, 3);
    count = 0;
    for_each_matching(cycle(4), [&](const std::vector<Edge> &) { ++count; });
    EXPECT_EQ(count, 7);
}
