#pragma once

#include <rmg/coloring.hpp>
#include <rmg/combinatorics.hpp>
#include <rmg/hypergraph.hpp>

#include <cstdint>
#include <vector>

namespace rmg {

/// `m` distinct R-subsets of {0..n-1}, sampled uniformly without replacement
/// (capped at binomial(n, R)). Returned in sampling order.
auto sample_uniform_edges(std::size_t n, std::size_t R, std::uint64_t m, Rng & rng) -> std::vector<Edge>;

struct ShortCycleDeletion {
    Hypergraph graph;
    std::size_t deleted = 0;
};

/// Deletes edges until no cycle of length < g remains. Pass ell = 2..g-1
/// removes, in canonical edge order, every edge still lying on a cycle of
/// length <= ell. Labels and vertex order are kept.
auto delete_short_cycles(const Hypergraph & h, std::size_t g) -> ShortCycleDeletion;

/// Edges sampled before deletion: 2 * ceil(n^{1+1/g}).
auto carrier_sample_size(std::size_t n, std::size_t g) -> std::uint64_t;

struct CarrierOptions {
    std::size_t attempts = 8;
    /// Throw RetryLimitReached instead of returning a sub-target carrier.
    bool require_target = false;
};

struct Carrier {
    Hypergraph graph;
    std::uint64_t sampled = 0;
    std::size_t deleted = 0;
    std::uint64_t target = 0;   ///< ceil(n^{1+1/g})
    bool target_met = false;
    std::size_t attempts = 0;
};

/**
 * R-uniform hypergraph on n vertices with girth >= g: sample distinct edges,
 * then delete an edge from every short cycle. A fresh sample is drawn while the
 * surviving edge count is below target; the largest result is returned.
 */
auto random_high_girth(std::size_t n, std::size_t R, std::size_t g, std::uint64_t seed,
    CarrierOptions options = {}) -> Carrier;

/// One r-subset of each carrier edge, in carrier edge order.
using QSequence = std::vector<Edge>;

struct QSample {
    QSequence sequence;
    /// The distinct members of the sequence, on the carrier's vertex set.
    Hypergraph graph;
};

auto sample_q(const Hypergraph & carrier, std::size_t r, std::uint64_t seed) -> QSample;

struct CountingThreshold {
    std::size_t r = 0, g = 0;
    std::uint64_t a = 0;
    std::uint64_t n = 0;
    /// Sides of n ln n + ln(a-1) < n^{1+1/g} ln(a/(a-1)) at n and at n-1.
    double lhs = 0, rhs = 0;
    double lhs_before = 0, rhs_before = 0;
};

/// Value of `n ln n + ln(a-1) < n^{1+1/g} ln(a/(a-1))` evaluated with 50
/// significant digits.
auto counting_inequality_holds(std::uint64_t n, std::uint64_t a, std::size_t g) -> bool;

/// Smallest n for which the counting inequality holds, with a = binomial(R, r)
/// and R = (r-1)^2 + 1. The inequality then holds for every larger n.
auto counting_threshold(std::size_t r, std::size_t g) -> CountingThreshold;

struct SearchParams {
    std::size_t r = 3;
    std::size_t g = 2;
    std::size_t n = 0;   ///< 0 selects R + 3
    std::size_t tries = 16;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    std::size_t carrier_attempts = 4;
};

struct SearchOutcome {
    bool found = false;
    std::size_t try_index = 0;
    std::uint64_t try_seed = 0;
    std::size_t n = 0;
    Hypergraph carrier;
    QSample sample;
    Verdict verdict;
};

/**
 * Samples Q-sequences over random high-girth carriers until the solver proves
 * one rm-unavoidable. Without success, returns the instance whose search
 * explored the most nodes.
 */
auto random_search_rm(const SearchParams & params) -> SearchOutcome;

}
