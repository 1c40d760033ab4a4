#pragma once

#include <rmg/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rmg {

/// Length of a shortest Berge cycle: finite, infinite (acyclic), or only
/// known to exceed the search cap.
class Girth {
public:
    enum class Kind { Finite, Infinite, AtLeast };

    static auto finite(std::size_t value) -> Girth;
    static auto infinite() -> Girth { return Girth(Kind::Infinite, 0); }
    static auto at_least(std::size_t bound) -> Girth { return Girth(Kind::AtLeast, bound); }

    auto kind() const -> Kind { return kind_; }
    auto is_finite() const -> bool { return kind_ == Kind::Finite; }
    /// The exact length for Finite, the lower bound for AtLeast, 0 for Infinite.
    auto value() const -> std::size_t { return value_; }
    /// True iff the girth is provably at least `g`.
    auto at_least_holds(std::size_t g) const -> bool;
    auto to_string() const -> std::string;

    friend auto operator==(const Girth &, const Girth &) -> bool = default;

private:
    Girth(Kind kind, std::size_t value) : kind_(kind), value_(value) {}

    Kind kind_;
    std::size_t value_;
};

/**
 * Certificate of a Berge cycle: distinct edges E_0..E_{k-1} (indices into the
 * hypergraph) and distinct connector vertices x_0..x_{k-1} with
 * x_i in E_i and x_i in E_{i+1}, indices mod k.
 */
struct CycleWitness {
    std::vector<EdgeIndex> edges;
    std::vector<Vertex> vertices;

    auto length() const -> std::size_t { return edges.size(); }
};

/// Checks a witness from scratch, using nothing but the hypergraph.
auto is_valid_cycle(const Hypergraph & h, const CycleWitness & w) -> bool;

struct GirthResult {
    Girth girth;
    std::optional<CycleWitness> witness;
};

/// Berge girth via shortest cycles of the bipartite incidence graph.
/// Exact when the girth is at most `cap`.
auto girth(const Hypergraph & h, std::size_t cap) -> GirthResult;

/// Same search, capped at the number of edges, so the answer is always exact.
auto exact_girth(const Hypergraph & h) -> GirthResult;

/// Whether the incidence graph is a forest (the hypergraph has no Berge cycle).
auto is_berge_acyclic(const Hypergraph & h) -> bool;

constexpr std::uint64_t default_cycle_budget = 10'000'000;

/**
 * Exact number of distinct `ell`-cycles. Two cycles are the same when their
 * cyclic edge sequences agree up to rotation and reflection and their
 * connector vertex sets are equal. Throws BudgetExhausted once more than
 * `budget` candidate tuples have been generated.
 */
auto count_cycles(const Hypergraph & h, std::size_t ell, std::uint64_t budget = default_cycle_budget)
    -> std::uint64_t;

/// Calls `visit` once per distinct ell-cycle, with one representative witness.
void for_each_cycle(const Hypergraph & h, std::size_t ell, std::uint64_t budget,
    const std::function<void(const CycleWitness &)> & visit);

struct CycleBoundReport {
    std::size_t r = 0;
    std::size_t ell = 0;
    std::size_t n = 0;
    std::uint64_t count = 0;        ///< ell-cycles in the complete r-uniform hypergraph on n vertices
    std::uint64_t per_set = 0;      ///< ell-cycles on a fixed set of (r-1)*ell vertices
    std::uint64_t sets = 0;         ///< binomial(n, (r-1)*ell)
    std::size_t max_support = 0;    ///< largest vertex support seen over all enumerated cycles
    bool holds = false;
};

/// Compares the exact cycle count with per_set * binomial(n, (r-1)*ell).
auto cycle_count_bound_check(std::size_t r, std::size_t ell, std::size_t n,
    std::uint64_t budget = default_cycle_budget) -> CycleBoundReport;

}
