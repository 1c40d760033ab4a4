#pragma once

#include <rmg/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rmg {

using ColorClass = std::uint32_t;
inline constexpr ColorClass uncolored = std::numeric_limits<ColorClass>::max();

/**
 * Assignment of a colour class to every vertex, indexed by canonical vertex
 * position. Colourings produced by this library are in restricted-growth form:
 * the first vertex has class 0 and each vertex opens at most one new class.
 */
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<ColorClass> classes) : classes_(std::move(classes)) {}

    auto size() const -> std::size_t { return classes_.size(); }
    auto operator[](Vertex v) const -> ColorClass { return classes_[v]; }
    auto classes() const -> std::span<const ColorClass> { return classes_; }
    auto num_classes() const -> std::size_t;
    auto class_sizes() const -> std::vector<std::size_t>;

    /// Relabels classes in order of first appearance.
    auto canonical() const -> Coloring;
    auto is_canonical() const -> bool;

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

private:
    std::vector<ColorClass> classes_;
};

enum class EdgeClass { Monochromatic, Rainbow, Mixed };

auto to_string(EdgeClass c) -> std::string;

/// Throws InvalidArgument if some vertex of `edge` is uncoloured.
auto classify_edge(std::span<const ColorClass> colors, std::span<const Vertex> edge) -> EdgeClass;
auto classify_edge(const Coloring & c, std::span<const Vertex> edge) -> EdgeClass;

/// No edge is monochromatic and no edge is rainbow.
auto is_good(const Hypergraph & h, const Coloring & c) -> bool;
/// Injective on every part.
auto is_part_rainbow(const PartiteHypergraph & p, const Coloring & c) -> bool;
auto has_rainbow_edge(const Hypergraph & h, const Coloring & c) -> bool;

enum class Outcome { WitnessFound, PropertyHolds, BudgetExceeded };

auto to_string(Outcome o) -> std::string;

/// Three-valued result of every search-based verifier.
struct Verdict {
    Outcome outcome = Outcome::BudgetExceeded;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;

    static auto witness_found(Coloring c, std::uint64_t nodes) -> Verdict
    {
        return {Outcome::WitnessFound, std::move(c), nodes};
    }
    static auto property_holds(std::uint64_t nodes) -> Verdict { return {Outcome::PropertyHolds, std::nullopt, nodes}; }
    static auto budget_exceeded(std::uint64_t nodes) -> Verdict
    {
        return {Outcome::BudgetExceeded, std::nullopt, nodes};
    }
};

inline constexpr unsigned max_partition_elements = 16;

/**
 * Visits every set partition of {0..n-1} exactly once, as restricted-growth
 * strings in lexicographic order. The visitor returns false to stop early.
 * Returns the number of partitions visited. n is limited to
 * max_partition_elements (Bell(16) is about 1e10).
 */
auto enumerate_partitions(unsigned n, const std::function<bool(std::span<const ColorClass>)> & visit)
    -> std::uint64_t;

}
