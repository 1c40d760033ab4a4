#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Hypergraph container, and favour obviousness over speed.

#include <rmg/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using rmg::Edge;
using rmg::Hypergraph;

/// Shortest Berge cycle by trying every sequence of distinct edges and every
/// choice of distinct connectors. nullopt when there is none.
auto berge_girth(const Hypergraph & h) -> std::optional<std::size_t>;

/// Number of ell-cycles, two cycles being equal when their edge sequences
/// agree up to rotation and reflection and their connector sets agree.
auto count_cycles(const Hypergraph & h, std::size_t ell) -> std::uint64_t;

/// Sum over edge pairs of binomial(|E cap F|, 2): the 2-cycle count.
auto count_two_cycles(const Hypergraph & h) -> std::uint64_t;

/// Whether any colouring (as a set partition) leaves every edge neither
/// monochromatic nor rainbow. Plain recursion over restricted-growth strings.
auto has_good_coloring(const Hypergraph & h) -> bool;

/// Whether some colouring injective on every part has no rainbow edge.
auto has_part_rainbow_without_rainbow_edge(const rmg::PartiteHypergraph & p) -> bool;

/// Bell numbers via the Stirling-number recurrence.
auto bell(unsigned n) -> std::uint64_t;

/// Edge classification recomputed with std::set.
enum class Kind { Mono, Rainbow, Mixed };
auto classify(const std::vector<std::uint32_t> & colors, const Edge & e) -> Kind;

/// Random hypergraph with set semantics: up to `max_edges` distinct edges of
/// sizes in [min_size, max_size] over `n` vertices.
auto random_hypergraph(std::mt19937_64 & rng, std::size_t n, std::size_t max_edges, std::size_t min_size,
    std::size_t max_size) -> Hypergraph;

/// Random partite hypergraph: `parts` random parts, edges meet each part at most once.
auto random_partite(std::mt19937_64 & rng, std::size_t n, std::size_t parts, std::size_t max_edges,
    std::size_t edge_size) -> rmg::PartiteHypergraph;

}
