#pragma once

#include <rmg/coloring.hpp>
#include <rmg/hypergraph.hpp>

#include <cstdint>

namespace rmg {

inline constexpr std::uint64_t default_solver_budget = 100'000'000;

/// Searches for a colouring with no monochromatic and no rainbow edge.
/// PropertyHolds means none exists, i.e. `h` is rm-unavoidable.
auto find_good_coloring(const Hypergraph & h, std::uint64_t budget = default_solver_budget) -> Verdict;

/// Same search, phrased as a certificate: PropertyHolds iff rm-unavoidable.
auto verify_rm_unavoidable(const Hypergraph & h, std::uint64_t budget = default_solver_budget) -> Verdict;

/// Searches colourings injective on every part for one with no rainbow edge.
/// PropertyHolds means `p` is part-rainbow-forced.
auto find_part_rainbow_bad(const PartiteHypergraph & p, std::uint64_t budget = default_solver_budget) -> Verdict;

auto verify_part_rainbow_forced(const PartiteHypergraph & p, std::uint64_t budget = default_solver_budget)
    -> Verdict;

}
