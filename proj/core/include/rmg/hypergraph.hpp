#pragma once

#include <rmg/errors.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rmg {

/// Position of a vertex in the canonical (insertion) order of its hypergraph.
using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Vertices of one hyperedge, sorted ascending by canonical position.
using Edge = std::vector<Vertex>;

class Uniformity {
public:
    explicit Uniformity(std::size_t r);

    auto value() const -> std::size_t { return r_; }

private:
    std::size_t r_;
};

/**
 * A finite hypergraph with set semantics: no repeated edges, every edge has at
 * least two vertices. Values are immutable once constructed. Edges are stored
 * sorted, and the edge list itself is kept in lexicographic order, so two
 * hypergraphs over the same labels compare equal iff they have the same edges.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    /// Vertices are labelled "0".."n-1".
    Hypergraph(std::size_t num_vertices, std::vector<Edge> edges);
    Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges);

    /// Build from opaque vertex identifiers. Vertex order is preserved.
    static auto from_labels(std::vector<std::string> vertices,
        const std::vector<std::vector<std::string>> & edges) -> Hypergraph;

    auto num_vertices() const -> std::size_t { return labels_.size(); }
    auto num_edges() const -> std::size_t { return edges_.size(); }
    auto edges() const -> std::span<const Edge> { return edges_; }
    auto edge(EdgeIndex e) const -> const Edge & { return edges_[e]; }

    auto labels() const -> std::span<const std::string> { return labels_; }
    auto label(Vertex v) const -> const std::string & { return labels_[v]; }
    auto find(const std::string & label) const -> std::optional<Vertex>;
    /// Throws ValidationError(UnknownVertex).
    auto vertex(const std::string & label) const -> Vertex;

    auto incident(Vertex v) const -> std::span<const EdgeIndex> { return incidence_[v]; }
    auto degree(Vertex v) const -> std::size_t { return incidence_[v].size(); }
    auto degree(const std::string & label) const -> std::size_t { return degree(vertex(label)); }
    auto min_degree() const -> std::size_t;
    auto max_degree() const -> std::size_t;

    auto is_uniform(Uniformity r) const -> bool;
    /// Edge size shared by all edges, if any; nullopt for mixed sizes or no edges.
    auto uniformity() const -> std::optional<std::size_t>;
    auto find_edge(const Edge & sorted) const -> std::optional<EdgeIndex>;
    auto incidences() const -> std::size_t;

    friend auto operator==(const Hypergraph & a, const Hypergraph & b) -> bool
    {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    void validate_and_index();

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
    std::unordered_map<std::string, Vertex> by_label_;
};

/// Complete r-uniform hypergraph on n vertices labelled "0".."n-1".
auto complete_hypergraph(std::size_t n, Uniformity r) -> Hypergraph;

/// Keeps the vertices in `keep` (labels preserved, canonical order preserved)
/// and every edge lying entirely inside it.
auto induced(const Hypergraph & h, std::span<const Vertex> keep) -> Hypergraph;
auto induced(const Hypergraph & h, const std::vector<std::string> & keep) -> Hypergraph;

struct DisjointUnion {
    Hypergraph graph;
    /// embeddings[k][v] is the image of vertex v of input k.
    std::vector<std::vector<Vertex>> embeddings;
};

/// Inputs are laid out one after another; output labels are "0".."N-1".
auto disjoint_union(std::span<const Hypergraph> inputs) -> DisjointUnion;

/**
 * A hypergraph together with an ordered partition of its vertices such that
 * no edge meets a part twice. Empty parts are allowed. Each part is stored
 * sorted by canonical vertex position.
 */
class PartiteHypergraph {
public:
    PartiteHypergraph(Hypergraph base, std::vector<std::vector<Vertex>> parts);

    auto base() const -> const Hypergraph & { return base_; }
    auto num_parts() const -> std::size_t { return parts_.size(); }
    auto parts() const -> std::span<const std::vector<Vertex>> { return parts_; }
    auto part(std::size_t i) const -> const std::vector<Vertex> & { return parts_[i]; }
    auto part_sizes() const -> std::vector<std::size_t>;
    auto part_of(Vertex v) const -> std::size_t { return part_of_[v]; }

    /// True iff every edge has exactly one vertex in each part.
    auto is_complete_transversal() const -> bool;

    friend auto operator==(const PartiteHypergraph & a, const PartiteHypergraph & b) -> bool
    {
        return a.base_ == b.base_ && a.parts_ == b.parts_;
    }

private:
    Hypergraph base_;
    std::vector<std::vector<Vertex>> parts_;
    std::vector<std::size_t> part_of_;
};

}
