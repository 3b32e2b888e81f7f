#include "properties.hpp"
#include "support.hpp"

#include <urm/audit.hpp>

#include <gtest/gtest.h>

using namespace urm;
using namespace urm::testing;

TEST(Enumerate, SmallOrders)
{
    auto one = enumerate_subcubic_girth5(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].order(), 1);

    auto five = enumerate_subcubic_girth5(5);
    ASSERT_EQ(five.size(), 3u);
    Graph spider(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    int hits = 0;
    for (const auto & g : five)
        hits += is_isomorphic(g, path(5)) + is_isomorphic(g, cycle(5)) + is_isomorphic(g, spider);
    EXPECT_EQ(hits, 3);
}

TEST(Enumerate, ContainsPetersenAndG1)
{
    auto ten = enumerate_subcubic_girth5(10);
    auto has = [&](const Graph & h) {
        return std::any_of(ten.begin(), ten.end(), [&](const Graph & g) { return is_isomorphic(g, h); });
    };
    EXPECT_TRUE(has(petersen()));
    EXPECT_TRUE(has(catalog_graph(CatalogName::G1)));
}

TEST(Enumerate, MatchesBruteForceCounts)
{
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(enumerate_subcubic_girth5(n).size(), brute_force_subcubic_girth5_count(n)) << n;
}

TEST(Enumerate, OutputsAreDistinctAndInClass)
{
    for (int n = 1; n <= 9; ++n) {
        std::set<std::string> forms;
        for (const auto & g : enumerate_subcubic_girth5(n)) {
            EXPECT_TRUE(is_connected(g));
            EXPECT_TRUE(g.is_subcubic());
            EXPECT_TRUE(has_girth_at_least(g, 5));
            EXPECT_TRUE(forms.insert(canonical_form(g)).second);
        }
    }
}

TEST(Enumerate, Cap)
{
    EXPECT_THROW(enumerate_subcubic_girth5(enumeration_max_order + 1), size_cap_error);
    EXPECT_TRUE(enumerate_subcubic_girth5(0).empty());
}

TEST(RandomGraphs, Contract)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 30);
        auto g = random_subcubic_girth5(n, seed);
        EXPECT_EQ(g.order(), n);
        EXPECT_TRUE(is_connected(g));
        EXPECT_TRUE(g.is_subcubic());
        EXPECT_TRUE(has_girth_at_least(g, 5));
    }
}

TEST(RandomGraphs, Deterministic)
{
    EXPECT_EQ(random_subcubic_girth5(20, 99), random_subcubic_girth5(20, 99));
}

TEST(RandomGraphs, ReachesThirdOfOrder)
{
    bool found = false;
    for (std::uint64_t seed = 0; seed < 50 && ! found; ++seed)
        found = nu_ur_exact(random_subcubic_girth5(10, seed)).value >= 3;
    EXPECT_TRUE(found);
}

TEST(RandomGraphs, NotAllTrees)
{
    int cyclic = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        cyclic += ! is_forest(random_subcubic_girth5(16, seed));
    EXPECT_GT(cyclic, 10);
}

TEST(Bound, Examples)
{
    auto g1 = theorem3_bound(catalog_graph(CatalogName::G1));
    EXPECT_EQ(g1.bound_thirds, 9);
    EXPECT_EQ(g1.nu_ur, 3);
    EXPECT_EQ(g1.slack_thirds, 0);
    EXPECT_EQ(g1.kappa_g, 1);

    auto h1 = theorem3_bound(catalog_graph(CatalogName::H1));
    EXPECT_EQ(h1.kappa_g3, 1);
    EXPECT_EQ(h1.kappa_exceptional, 1);
    EXPECT_EQ(h1.kappa_g, 0);
    EXPECT_EQ(h1.bound_thirds, 12);
    EXPECT_EQ(h1.nu_ur, 4);
    EXPECT_EQ(h1.slack_thirds, 0);

    auto p = theorem3_bound(petersen());
    EXPECT_EQ(p.kappa_g3, 1);
    EXPECT_EQ(p.bound_thirds, 9);
    EXPECT_EQ(p.status, AuditStatus::ok);
    EXPECT_EQ(p.nu_ur, nu_ur_bruteforce(petersen()).value);
}

TEST(Bound, AdditiveOverComponents)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_subcubic_girth5(4 + static_cast<int>(rng() % 8), rng());
        auto b = trial % 2 ? catalog_graph(CatalogName::G1) : random_subcubic_girth5(7, rng());
        auto ra = theorem3_bound(a), rb = theorem3_bound(b), rab = theorem3_bound(disjoint_union(a, b));
        EXPECT_EQ(rab.nu_ur, ra.nu_ur + rb.nu_ur);
        EXPECT_EQ(rab.kappa_g, ra.kappa_g + rb.kappa_g);
        EXPECT_EQ(rab.kappa_g3, ra.kappa_g3 + rb.kappa_g3);
        EXPECT_EQ(rab.bound_thirds, ra.bound_thirds + rb.bound_thirds);
        EXPECT_EQ(rab.slack_thirds, ra.slack_thirds + rb.slack_thirds);
    }
}

TEST(Bound, BudgetExceededIsReported)
{
    auto r = theorem3_bound(catalog_graph(CatalogName::G9), SolveLimits{20, {}});
    EXPECT_EQ(r.status, AuditStatus::budget_exceeded);
}

TEST(Audit, ExhaustiveSmall)
{
    AuditParameters p;
    p.n_max = 5;
    auto r = run_audit(p);
    EXPECT_EQ(r.violations, 0);
    EXPECT_EQ(r.records.size(), 1u + 1 + 1 + 2 + 3);
    auto star_id = canonical_form(star(3));
    auto it = std::find_if(r.records.begin(), r.records.end(), [&](const auto & x) { return x.id == star_id; });
    ASSERT_NE(it, r.records.end());
    EXPECT_EQ(it->kappa_g, 1);
    EXPECT_EQ(it->slack_thirds, 0);
    EXPECT_TRUE(r.passed());
}

TEST(Audit, ExhaustiveToTen)
{
    AuditParameters p;
    p.n_max = 10;
    p.jobs = 2;
    auto r = run_audit(p);
    EXPECT_EQ(r.violations, 0);
    EXPECT_TRUE(r.unexplained_equalities.empty());
    auto g1 = canonical_form(catalog_graph(CatalogName::G1));
    EXPECT_NE(std::find(r.equality_cases.begin(), r.equality_cases.end(), g1), r.equality_cases.end());
    EXPECT_NE(std::find(r.tight_cases.begin(), r.tight_cases.end(), g1), r.tight_cases.end());
}

TEST(Audit, ReportsAreIndependentOfWorkerCount)
{
    AuditParameters p;
    p.n_max = 9;
    p.jobs = 1;
    auto one = to_json(run_audit(p)).dump();
    p.jobs = 3;
    auto three = to_json(run_audit(p)).dump();
    EXPECT_EQ(one, three);
}

TEST(Audit, RandomMode)
{
    AuditParameters p;
    p.mode = AuditMode::random;
    p.n_min = p.n_max = 20;
    p.sample_count = 40;
    p.seed = 5;
    p.jobs = 2;
    auto r = run_audit(p);
    EXPECT_EQ(r.violations, 0);
    EXPECT_EQ(r.budget_failures, 0);
    auto again = run_audit(p);
    EXPECT_EQ(to_csv(r), to_csv(again));
}

TEST(Audit, CapAndRange)
{
    AuditParameters p;
    p.n_max = enumeration_max_order + 1;
    EXPECT_THROW(run_audit(p), size_cap_error);
    p.n_min = 5;
    p.n_max = 4;
    EXPECT_THROW(run_audit(p), precondition_error);
}

TEST(Audit, CsvShape)
{
    AuditParameters p;
    p.n_max = 4;
    auto csv = to_csv(run_audit(p));
    EXPECT_EQ(csv.rfind("id,n,girth,nu,nu_ur,", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 5);
}

TEST(CatalogTable, MatchesPublishedValues)
{
    auto t = table1_report();
    ASSERT_EQ(t.rows.size(), 9u);
    EXPECT_TRUE(t.matches()) << to_text(t);
    const std::array<int, 9> nu_ur{3, 4, 5, 6, 5, 6, 6, 7, 8};
    for (std::size_t i = 0; i < 9; ++i)
        EXPECT_EQ(t.rows[i].nu_ur, nu_ur[i]);
    const auto & g9 = t.rows[8];
    EXPECT_EQ(g9.n, 25);
    EXPECT_EQ(g9.flags, (std::array{BStatus::holds, BStatus::holds, BStatus::vacuous}));
    const auto & g5 = t.rows[4];
    EXPECT_EQ(g5.flags[1], BStatus::vacuous);
    EXPECT_EQ(g5.flags[2], BStatus::vacuous);
    EXPECT_EQ(t.rows[1].flags[1], BStatus::fails);
    EXPECT_EQ(t.rows[3].flags[1], BStatus::fails);
}
