#include "supplier_rules.hpp"

#include <rmg/combinatorics.hpp>

namespace rmg {

namespace detail {

    auto mul(Count a, Count b) -> Count
    {
        if (! a || ! b)
            return std::nullopt;
        return checked_mul(*a, *b);
    }

    auto add(Count a, Count b) -> Count
    {
        if (! a || ! b)
            return std::nullopt;
        return checked_add(*a, *b);
    }

    auto min_order_for_degree(std::size_t ell, std::uint64_t q) -> std::uint64_t
    {
        for (std::uint64_t n = ell;; ++n) {
            auto d = binomial(n - 1, ell - 1);
            if (! d || *d >= q)
                return n;
        }
    }

    auto complete_supplier_order(std::size_t ell, std::size_t g, std::uint64_t q, SupplierStrategy s)
        -> std::optional<std::uint64_t>
    {
        if (s == SupplierStrategy::Random)
            return std::nullopt;
        // K_{q+1} has girth 3; for g <= 2 any complete hypergraph will do.
        if (ell == 2 && g <= 3)
            return q + 1;
        if (g <= 2)
            return min_order_for_degree(ell, q);
        return std::nullopt;
    }

    auto supplier_size(std::size_t ell, std::size_t g, std::uint64_t q, SupplierStrategy s) -> SupplierSize
    {
        if (auto n = complete_supplier_order(ell, g, q, s))
            return {*n, binomial(*n, ell), true};

        // Girth >= 3 makes the q edges at a vertex meet only there.
        Count n = g >= 3 ? add(mul(q, ell - 1), 1) : Count(min_order_for_degree(ell, q));
        Count incidences = mul(n, q);
        Count e = incidences ? Count((*incidences + ell - 1) / ell) : std::nullopt;
        return {n, e, false};
    }

}

using detail::add;
using detail::Count;
using detail::mul;

auto SizeEstimate::exceeds(const SizeLimits & limits) const -> bool
{
    return astronomical() || *vertices > limits.max_vertices || *edges > limits.max_edges;
}

auto SizeEstimate::to_string() const -> std::string
{
    if (astronomical())
        return "astronomical (beyond 2^64)";
    auto rel = exact ? "=" : ">=";
    return std::string("vertices") + rel + std::to_string(*vertices) + " edges" + rel + std::to_string(*edges);
}

namespace {

    auto astronomical(bool exact) -> SizeEstimate
    {
        SizeEstimate e;
        e.exact = exact;
        return e;
    }

}

auto estimate_pr_size(std::size_t r, std::size_t g, SupplierStrategy supplier) -> SizeEstimate
{
    if (r < 2 || g < 2)
        throw InvalidArgument("PR(r, g) needs r >= 2 and g >= 2");

    SizeEstimate est;
    est.vertices = 3;
    est.edges = 2;
    est.part_sizes = {2, 1};
    for (std::size_t k = 3; k <= r; ++k) {
        Count ell = est.edges;
        Count q = mul(ell, k);
        if (! q)
            return astronomical(est.exact);
        auto f = detail::supplier_size(static_cast<std::size_t>(*ell), g, *q, supplier);
        est.exact = est.exact && f.exact;
        est.vertices = add(f.vertices, mul(f.edges, est.vertices));
        est.edges = mul(f.edges, ell);
        for (auto & p : est.part_sizes)
            p = mul(p, f.edges);
        est.part_sizes.push_back(f.vertices);
        if (est.astronomical())
            return astronomical(est.exact);
    }
    return est;
}

auto estimate_h_size(std::size_t r, std::size_t g, SupplierStrategy supplier) -> SizeEstimate
{
    if (r < 2 || g < 2)
        throw InvalidArgument("H(r, g) needs r >= 2 and g >= 2");

    SizeEstimate est;
    if (g == 2) {
        est.vertices = add(mul(r - 1, r - 1), 1);
        est.edges = binomial(*est.vertices, r);
        if (est.astronomical())
            return astronomical(true);
        return est;
    }

    auto f = estimate_pr_size(r, g, supplier);
    if (f.astronomical())
        return f;
    est.exact = f.exact;

    const std::uint64_t a = (r - 1) * (r - 1) + r;
    Count copies = binomial(a, r);
    est.vertices = mul(copies, f.vertices);
    est.edges = mul(copies, f.edges);
    // copies with part j in position k: choose k smaller and r-1-k larger parts
    for (std::uint64_t j = 0; j < a; ++j) {
        Count size = 0;
        for (std::size_t k = 0; k < r; ++k) {
            auto below = binomial(j, k);
            auto above = binomial(a - 1 - j, r - 1 - k);
            size = add(size, mul(mul(below, above), f.part_sizes[k]));
        }
        est.part_sizes.push_back(size);
    }
    if (est.astronomical())
        return astronomical(est.exact);

    for (std::size_t j = 0; j < a; ++j) {
        auto k = est.part_sizes[j];
        if (! k)
            return astronomical(est.exact);
        auto h = estimate_h_size(static_cast<std::size_t>(*k), g - 1, supplier);
        if (h.astronomical())
            return astronomical(est.exact && h.exact);
        est.exact = est.exact && h.exact;
        est.vertices = add(h.vertices, mul(h.edges, Count(*est.vertices - *k)));
        est.edges = mul(h.edges, est.edges);
        for (std::size_t i = 0; i < a; ++i)
            est.part_sizes[i] = i == j ? h.vertices : mul(est.part_sizes[i], h.edges);
        if (est.astronomical())
            return astronomical(est.exact);
    }
    return est;
}

}
