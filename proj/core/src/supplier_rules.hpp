#pragma once

#include <rmg/construct.hpp>

#include <cstdint>
#include <optional>

namespace rmg::detail {

using Count = std::optional<std::uint64_t>;

auto mul(Count a, Count b) -> Count;
auto add(Count a, Count b) -> Count;

/// Order of the complete ell-uniform hypergraph used instead of a random
/// supplier, when one with girth >= g and minimum degree >= q exists.
auto complete_supplier_order(std::size_t ell, std::size_t g, std::uint64_t q, SupplierStrategy s)
    -> std::optional<std::uint64_t>;

/// Smallest n with binomial(n-1, ell-1) >= q.
auto min_order_for_degree(std::size_t ell, std::uint64_t q) -> std::uint64_t;

struct SupplierSize {
    Count vertices, edges;
    bool exact = true;
};

auto supplier_size(std::size_t ell, std::size_t g, std::uint64_t q, SupplierStrategy s) -> SupplierSize;

}
