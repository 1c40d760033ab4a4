#include "oracles.hpp"

#include <rmg/combinatorics.hpp>
#include <rmg/girth.hpp>

#include <gtest/gtest.h>

using namespace rmg;

TEST(Girth, PathIsAcyclic)
{
    auto h = Hypergraph::from_labels({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    auto result = girth(h, 5);
    EXPECT_EQ(result.girth, Girth::infinite());
    EXPECT_EQ(result.girth.to_string(), "infinite");
    EXPECT_FALSE(result.witness);
}

TEST(Girth, CompleteOnPigeonholeOrderHasGirthTwo)
{
    for (std::size_t r = 3; r <= 5; ++r) {
        auto h = complete_hypergraph((r - 1) * (r - 1) + 1, Uniformity(r));
        auto result = girth(h, 4);
        EXPECT_EQ(result.girth, Girth::finite(2)) << "r=" << r;
        ASSERT_TRUE(result.witness);
        EXPECT_TRUE(is_valid_cycle(h, *result.witness));
    }
}

TEST(Girth, TwoEdgesSharingTwoVertices)
{
    auto h = Hypergraph::from_labels({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"2", "3", "4"}});
    auto result = girth(h, 3);
    EXPECT_EQ(result.girth, Girth::finite(2));
    ASSERT_TRUE(result.witness);
    EXPECT_TRUE(is_valid_cycle(h, *result.witness));
    std::vector<std::string> connectors;
    for (auto v : result.witness->vertices)
        connectors.push_back(h.label(v));
    std::sort(connectors.begin(), connectors.end());
    EXPECT_EQ(connectors, (std::vector<std::string>{"2", "3"}));
}

TEST(Girth, Triangle)
{
    auto h = Hypergraph::from_labels({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}});
    EXPECT_EQ(girth(h, 3).girth, Girth::finite(3));
    EXPECT_EQ(girth(h, 2).girth, Girth::at_least(3));
    EXPECT_EQ(girth(h, 2).girth.to_string(), ">=3");
    EXPECT_THROW(girth(h, 1), InvalidArgument);
}

TEST(Girth, CycleValidatorRejectsBrokenWitnesses)
{
    Hypergraph h(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CycleWitness good{{0, 1, 2, 3}, {1, 2, 3, 0}};
    // edge indices follow the sorted edge list: {0,1},{0,3},{1,2},{2,3}
    auto e01 = *h.find_edge({0, 1}), e12 = *h.find_edge({1, 2}), e23 = *h.find_edge({2, 3}), e03 = *h.find_edge({0, 3});
    good.edges = {e01, e12, e23, e03};
    EXPECT_TRUE(is_valid_cycle(h, good));
    auto repeated = good;
    repeated.vertices[3] = 1;
    EXPECT_FALSE(is_valid_cycle(h, repeated));
    auto outside = good;
    outside.vertices[0] = 3;
    EXPECT_FALSE(is_valid_cycle(h, outside));
    EXPECT_FALSE(is_valid_cycle(h, CycleWitness{{e01}, {0}}));
}

TEST(GirthProperty, AgreesWithBruteForceOnSmallHypergraphs)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto h = oracle::random_hypergraph(rng, 3 + trial % 6, 6, 2, 4);
        auto expected = oracle::berge_girth(h);
        auto result = exact_girth(h);
        if (! expected) {
            ASSERT_EQ(result.girth, Girth::infinite()) << "trial " << trial;
            continue;
        }
        ASSERT_EQ(result.girth, Girth::finite(*expected)) << "trial " << trial;
        ASSERT_TRUE(result.witness);
        ASSERT_EQ(result.witness->length(), *expected);
        ASSERT_TRUE(is_valid_cycle(h, *result.witness));
    }
}

TEST(GirthProperty, DeletingAnEdgeNeverDecreasesGirth)
{
    auto rank = [](const Girth & g) -> std::size_t { return g.kind() == Girth::Kind::Infinite ? 1000 : g.value(); };
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = oracle::random_hypergraph(rng, 4 + trial % 6, 9, 2, 4);
        if (h.num_edges() == 0)
            continue;
        auto before = rank(exact_girth(h).girth);
        std::vector<Edge> rest(h.edges().begin(), h.edges().end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(trial % rest.size()));
        auto after = rank(exact_girth(Hypergraph(h.num_vertices(), rest)).girth);
        ASSERT_GE(after, before);
    }
}

TEST(CycleCount, Examples)
{
    Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(count_cycles(triangle, 3), 1U);
    Hypergraph path(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(count_cycles(path, 2), 0U);
    auto k5 = complete_hypergraph(5, Uniformity(3));
    EXPECT_EQ(count_cycles(k5, 2), 30U);
    EXPECT_EQ(oracle::count_two_cycles(k5), 30U);
}

TEST(CycleCount, BudgetIsEnforced)
{
    auto h = complete_hypergraph(7, Uniformity(3));
    EXPECT_THROW(count_cycles(h, 3, 100), BudgetExhausted);
}

TEST(CycleCountProperty, AgreesWithBruteForce)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        auto h = oracle::random_hypergraph(rng, 4 + trial % 4, 6, 2, 4);
        for (std::size_t ell = 2; ell <= 4; ++ell)
            ASSERT_EQ(count_cycles(h, ell), oracle::count_cycles(h, ell)) << "trial " << trial << " ell " << ell;
    }
}

TEST(CycleCountProperty, SupportIsAtMostEllTimesRMinusOne)
{
    for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t ell = 2; ell <= 3; ++ell) {
            auto h = complete_hypergraph(r + 3, Uniformity(r));
            for_each_cycle(h, ell, default_cycle_budget, [&](const CycleWitness & w) {
                ASSERT_TRUE(is_valid_cycle(h, w));
                std::set<Vertex> support;
                for (auto e : w.edges)
                    support.insert(h.edge(e).begin(), h.edge(e).end());
                ASSERT_LE(support.size(), (r - 1) * ell);
            });
        }
}

TEST(CycleBound, SmallCases)
{
    auto triangles = cycle_count_bound_check(2, 3, 5);
    EXPECT_TRUE(triangles.holds);
    EXPECT_EQ(triangles.count, *binomial(5, 3));
    EXPECT_EQ(triangles.per_set, 1U);

    auto pairs = cycle_count_bound_check(3, 2, 5);
    EXPECT_TRUE(pairs.holds);
    EXPECT_EQ(pairs.count, 30U);
    EXPECT_EQ(pairs.per_set, 6U);   // four triples on four vertices, all pairs share two
    EXPECT_EQ(pairs.sets, 5U);

    auto tight = cycle_count_bound_check(3, 2, 4);
    EXPECT_TRUE(tight.holds);
    EXPECT_EQ(tight.count, tight.per_set);
}
