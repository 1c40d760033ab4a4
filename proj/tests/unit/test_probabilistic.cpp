#include "oracles.hpp"

#include <rmg/girth.hpp>
#include <rmg/probabilistic.hpp>
#include <rmg/solver.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

using namespace rmg;

TEST(SampleEdges, DistinctAndUniform)
{
    Rng rng(1);
    auto edges = sample_uniform_edges(12, 5, 40, rng);
    EXPECT_EQ(edges.size(), 40U);
    std::set<Edge> distinct(edges.begin(), edges.end());
    EXPECT_EQ(distinct.size(), 40U);
    for (const auto & e : edges) {
        EXPECT_EQ(e.size(), 5U);
        EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
        EXPECT_LT(e.back(), 12U);
    }
    // capped at binomial(6, 3)
    EXPECT_EQ(sample_uniform_edges(6, 3, 100, rng).size(), 20U);
    // sparse regime goes through rejection sampling
    EXPECT_EQ(sample_uniform_edges(200, 3, 50, rng).size(), 50U);
}

TEST(ShortCycles, OverlappingPairLosesOne)
{
    auto h = Hypergraph::from_labels({"1", "2", "3", "4", "5", "6", "7"},
        {{"1", "2", "3", "4", "5"}, {"1", "2", "3", "6", "7"}});
    auto pruned = delete_short_cycles(h, 3);
    EXPECT_EQ(pruned.deleted, 1U);
    EXPECT_EQ(pruned.graph.num_edges(), 1U);
    EXPECT_EQ(pruned.graph.labels()[6], "7");
}

TEST(ShortCycles, TriangleBrokenForGirthFour)
{
    Hypergraph h(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto pruned = delete_short_cycles(h, 4);
    EXPECT_EQ(pruned.deleted, 1U);
    EXPECT_EQ(exact_girth(pruned.graph).girth, Girth::infinite());
    EXPECT_EQ(delete_short_cycles(h, 3).deleted, 0U);
}

TEST(ShortCyclesProperty, ResultHasGirthAtLeastTarget)
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = oracle::random_hypergraph(rng, 5 + trial % 8, 12, 2, 4);
        const std::size_t g = 3 + trial % 3;
        auto pruned = delete_short_cycles(h, g);
        ASSERT_EQ(pruned.graph.num_edges() + pruned.deleted, h.num_edges());
        auto expected = oracle::berge_girth(pruned.graph);
        ASSERT_TRUE(! expected || *expected >= g) << "trial " << trial;
    }
}

TEST(RandomHighGirth, DeterministicAndVerified)
{
    auto a = random_high_girth(12, 5, 3, 99);
    auto b = random_high_girth(12, 5, 3, 99);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.target, 28U);
    EXPECT_TRUE(girth(a.graph, 2).girth.at_least_holds(3));
    // a linear 5-uniform hypergraph on 12 vertices has at most 66 / 10 edges
    EXPECT_LE(a.graph.num_edges(), 6U);
    EXPECT_FALSE(a.target_met);
    EXPECT_EQ(a.attempts, 8U);
}

TEST(RandomHighGirth, RequireTargetThrows)
{
    try {
        random_high_girth(12, 5, 3, 1, {2, true});
        FAIL() << "target is unreachable";
    }
    catch (const RetryLimitReached & e) {
        EXPECT_LE(e.achieved_edges(), 6U);
    }
}

TEST(RandomHighGirth, ReachableTarget)
{
    // graphs: 2 * ceil(n^{4/3}) sampled edges, triangles removed
    auto c = random_high_girth(400, 2, 3, 7);
    EXPECT_TRUE(c.target_met);
    EXPECT_GE(c.graph.num_edges(), c.target);
    EXPECT_EQ(c.sampled, carrier_sample_size(400, 3));
    EXPECT_TRUE(girth(c.graph, 2).girth.at_least_holds(3));
}

TEST(RandomHighGirth, Preconditions)
{
    EXPECT_THROW(random_high_girth(3, 5, 3, 0), InvalidArgument);
    EXPECT_THROW(random_high_girth(10, 5, 1, 0), InvalidArgument);
}

TEST(RandomHighGirthProperty, BadCycleCountGrowsSubquadratically)
{
    // mean number of 2-cycles before deletion for R = 3, g = 3
    auto mean_bad = [](std::size_t n) {
        double total = 0;
        const int seeds = 200;
        for (int s = 0; s < seeds; ++s) {
            Rng rng(derive_seed(77, static_cast<std::uint64_t>(s)));
            Hypergraph h(n, sample_uniform_edges(n, 3, carrier_sample_size(n, 3), rng));
            total += static_cast<double>(count_cycles(h, 2));
        }
        return total / seeds;
    };
    const auto at10 = mean_bad(10), at20 = mean_bad(20), at40 = mean_bad(40);
    EXPECT_TRUE(std::isfinite(at40));
    // quadratic growth from 10 to 40 would multiply the mean by 16
    EXPECT_LT(at40 / at10, 16.0);
    EXPECT_LT(at40 / at20, 4.0);
}

TEST(SampleQ, IdentityWhenRIsR)
{
    auto h = complete_hypergraph(7, Uniformity(4));
    auto q = sample_q(h, 4, 3);
    EXPECT_EQ(q.graph, h);
    EXPECT_EQ(q.sequence.size(), h.num_edges());
}

TEST(SampleQ, SubsetsOfCarrierEdges)
{
    auto carrier = random_high_girth(15, 5, 3, 4).graph;
    auto q = sample_q(carrier, 3, 8);
    ASSERT_EQ(q.sequence.size(), carrier.num_edges());
    for (std::size_t i = 0; i < q.sequence.size(); ++i) {
        const auto & sub = q.sequence[i];
        const auto & e = carrier.edge(static_cast<EdgeIndex>(i));
        EXPECT_EQ(sub.size(), 3U);
        EXPECT_TRUE(std::includes(e.begin(), e.end(), sub.begin(), sub.end()));
    }
    EXPECT_TRUE(q.graph.is_uniform(Uniformity(3)));
    EXPECT_THROW(sample_q(carrier, 6, 0), InvalidArgument);
    EXPECT_THROW(sample_q(Hypergraph(4, {{0, 1}, {1, 2, 3}}), 2, 0), ValidationError);
}

TEST(SampleQ, UniformOverTriples)
{
    Hypergraph single(5, {{0, 1, 2, 3, 4}});
    std::map<Edge, int> counts;
    const int draws = 10'000;
    for (int s = 0; s < draws; ++s)
        ++counts[sample_q(single, 3, static_cast<std::uint64_t>(s)).sequence[0]];
    ASSERT_EQ(counts.size(), 10U);
    double chi2 = 0;
    const double expected = draws / 10.0;
    for (const auto & [subset, n] : counts)
        chi2 += (n - expected) * (n - expected) / expected;
    // 9 degrees of freedom, 0.001 upper tail
    EXPECT_LT(chi2, 27.88);
}

TEST(SampleQProperty, GirthDoesNotDrop)
{
    std::mt19937_64 rng(52);
    auto rank = [](const Girth & g) -> std::size_t { return g.kind() == Girth::Kind::Infinite ? 1000 : g.value(); };
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t R = 3 + trial % 3;
        auto carrier = oracle::random_hypergraph(rng, R + 3 + trial % 4, 7, R, R);
        auto q = sample_q(carrier, 2 + trial % (R - 1), static_cast<std::uint64_t>(trial));
        ASSERT_GE(rank(exact_girth(q.graph).girth), rank(exact_girth(carrier).girth)) << "trial " << trial;
    }
}

TEST(CountingThreshold, ThreeThree)
{
    auto t = counting_threshold(3, 3);
    EXPECT_EQ(t.a, 10U);
    EXPECT_GT(t.n, 1'000'000U);
    EXPECT_LT(t.n, 10'000'000U);
    EXPECT_TRUE(counting_inequality_holds(t.n, t.a, 3));
    EXPECT_FALSE(counting_inequality_holds(t.n - 1, t.a, 3));
    EXPECT_LT(t.lhs, t.rhs);
    EXPECT_GE(t.lhs_before, t.rhs_before);
}

TEST(CountingThreshold, IndependentDoubleCheck)
{
    // long double evaluation away from the boundary
    auto holds = [](double n, double a, double g) {
        return n * std::log(n) + std::log(a - 1) < std::pow(n, 1 + 1 / g) * std::log(a / (a - 1));
    };
    auto t = counting_threshold(3, 3);
    const auto n = static_cast<double>(t.n);
    EXPECT_TRUE(holds(n * 1.001, 10, 3));
    EXPECT_FALSE(holds(n * 0.999, 10, 3));
    for (std::uint64_t k = t.n; k <= 2 * t.n; k += t.n / 97)
        EXPECT_TRUE(counting_inequality_holds(k, 10, 3)) << k;
}

TEST(CountingThreshold, MonotoneInGirthAndRejectsGraphs)
{
    EXPECT_LT(counting_threshold(3, 2).n, counting_threshold(3, 3).n);
    EXPECT_THROW(counting_threshold(2, 3), InvalidArgument);
}

TEST(RandomSearch, FindsUnavoidableForGirthTwo)
{
    SearchParams p;
    p.r = 3;
    p.g = 2;
    p.tries = 20;
    p.seed = 4;
    auto out = random_search_rm(p);
    ASSERT_TRUE(out.found);
    EXPECT_EQ(out.verdict.outcome, Outcome::PropertyHolds);
    EXPECT_EQ(verify_rm_unavoidable(out.sample.graph).outcome, Outcome::PropertyHolds);
    EXPECT_TRUE(out.sample.graph.is_uniform(Uniformity(3)));
    EXPECT_EQ(out.n, 8U);

    auto again = random_search_rm(p);
    EXPECT_EQ(again.sample.graph, out.sample.graph);
    EXPECT_EQ(again.try_index, out.try_index);
}

TEST(RandomSearch, CompleteCarrierReproducesBaseCase)
{
    // n = R leaves a single carrier edge; full sampling over n = 5 gives K_5^(3)
    auto carrier = complete_hypergraph(5, Uniformity(5));
    auto q = sample_q(carrier, 3, 0);
    EXPECT_EQ(q.graph.num_edges(), 1U);
    SearchParams p;
    p.r = 3;
    p.g = 3;
    p.n = 9;
    p.tries = 3;
    auto out = random_search_rm(p);
    EXPECT_TRUE(girth(out.sample.graph, 2).girth.at_least_holds(3));
    EXPECT_NE(out.verdict.outcome, Outcome::BudgetExceeded);
}

TEST(RandomSearch, RejectsGraphs)
{
    SearchParams p;
    p.r = 2;
    EXPECT_THROW(random_search_rm(p), InvalidArgument);
}
