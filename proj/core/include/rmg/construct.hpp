#pragma once

#include <rmg/errors.hpp>
#include <rmg/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rmg {

struct SizeLimits {
    std::uint64_t max_vertices = 1'000'000;
    std::uint64_t max_edges = 1'000'000;
};

/// How the min-degree, high-girth hypergraphs F' are obtained.
enum class SupplierStrategy {
    Auto,       ///< complete hypergraph when it already has the girth, random otherwise
    Complete,   ///< complete hypergraphs only; fails when their girth is too small
    Random,     ///< always the random generator followed by peeling
};

auto to_string(SupplierStrategy s) -> std::string;
auto parse_supplier_strategy(const std::string & s) -> SupplierStrategy;

struct ConstructionParams {
    std::size_t r = 3;
    std::size_t g = 3;
    std::uint64_t seed = 0;
    SizeLimits limits;
    SupplierStrategy supplier = SupplierStrategy::Auto;
    /// Girth postconditions are checked by search up to this many edges.
    std::size_t girth_check_edges = 50'000;
    std::size_t supplier_attempts = 4;
};

/**
 * Predicted size of a construction. Missing counts mean the arithmetic
 * overflowed 64 bits. With a random supplier the counts are lower bounds.
 */
struct SizeEstimate {
    std::optional<std::uint64_t> vertices;
    std::optional<std::uint64_t> edges;
    std::vector<std::optional<std::uint64_t>> part_sizes;
    bool exact = true;

    auto astronomical() const -> bool { return ! vertices || ! edges; }
    auto exceeds(const SizeLimits & limits) const -> bool;
    auto to_string() const -> std::string;
};

class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(const std::string & what, SizeEstimate estimate) :
        Error(what), estimate_(std::move(estimate)) {}

    auto estimate() const -> const SizeEstimate & { return estimate_; }

private:
    SizeEstimate estimate_;
};

/// One step of a construction with the cardinalities it produced.
struct ConstructionTrace {
    std::string step;
    std::size_t r = 0, g = 0;
    std::uint64_t vertices = 0, edges = 0;
    std::vector<std::size_t> part_sizes;
    std::optional<std::uint64_t> ell;       ///< edges of the hypergraph being extended
    std::optional<std::uint64_t> e_prime;   ///< edges of the amalgamating hypergraph
    std::optional<std::uint64_t> q;         ///< required minimum degree
    std::optional<std::uint64_t> a;         ///< parts of the factor
    std::optional<std::uint64_t> copies;
    std::optional<std::size_t> part_index;
    std::optional<std::string> girth;
    std::vector<ConstructionTrace> children;
};

/// Adds one new vertex to every edge; the new vertices form a last part.
/// Requires an r-uniform hypergraph with r parts.
auto tilde(const PartiteHypergraph & p) -> PartiteHypergraph;

struct Amalgamation {
    PartiteHypergraph graph;
    /// embeddings[c][v]: image of vertex v of h in the copy for edge c of f.
    std::vector<std::vector<Vertex>> embeddings;
};

/**
 * One copy of h per edge of f, with part i of each copy identified with that
 * edge (k-th vertex of the part to k-th vertex of the edge). Vertices of f come
 * first, then each copy's remaining vertices in edge order of f.
 */
auto amalgamate(const PartiteHypergraph & h, std::size_t i, const Hypergraph & f) -> Amalgamation;

struct Factor {
    PartiteHypergraph graph;
    /// subsets[c]: the parts that copy c occupies, ascending; copy part k goes to subsets[c][k].
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::vector<Vertex>> embeddings;
};

/// Disjoint copies of an r-partite f, one inside each r-subset of a parts.
auto complete_partite_factor(const PartiteHypergraph & f, std::size_t a) -> Factor;

struct Supplied {
    Hypergraph graph;
    ConstructionTrace trace;
};

/// An ell-uniform hypergraph with girth >= g and minimum degree >= q.
auto supply_min_degree_girth(std::size_t ell, std::size_t g, std::size_t q, const ConstructionParams & params)
    -> Supplied;

struct BuiltPartite {
    PartiteHypergraph graph;
    ConstructionTrace trace;
};

struct Built {
    Hypergraph graph;
    ConstructionTrace trace;
};

/// r-uniform, r-partite, girth >= g, and every part-rainbow colouring has a
/// rainbow edge. Throws SizeLimitExceeded before building anything too large.
auto build_pr(std::size_t r, std::size_t g, const ConstructionParams & params) -> BuiltPartite;

/// r-uniform, girth >= g, rm-unavoidable.
auto build_h(std::size_t r, std::size_t g, const ConstructionParams & params) -> Built;

auto estimate_pr_size(std::size_t r, std::size_t g, SupplierStrategy supplier = SupplierStrategy::Auto)
    -> SizeEstimate;
auto estimate_h_size(std::size_t r, std::size_t g, SupplierStrategy supplier = SupplierStrategy::Auto)
    -> SizeEstimate;

}
