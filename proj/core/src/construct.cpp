#include "supplier_rules.hpp"

#include <rmg/combinatorics.hpp>
#include <rmg/construct.hpp>
#include <rmg/girth.hpp>
#include <rmg/probabilistic.hpp>

#include <algorithm>
#include <deque>

namespace rmg {

auto to_string(SupplierStrategy s) -> std::string
{
    switch (s) {
    case SupplierStrategy::Auto: return "auto";
    case SupplierStrategy::Complete: return "complete";
    case SupplierStrategy::Random: return "random";
    }
    return {};
}

auto parse_supplier_strategy(const std::string & s) -> SupplierStrategy
{
    if (s == "auto")
        return SupplierStrategy::Auto;
    if (s == "complete")
        return SupplierStrategy::Complete;
    if (s == "random")
        return SupplierStrategy::Random;
    throw InvalidArgument("unknown supplier strategy '" + s + "' (expected auto, complete or random)");
}

namespace {

    auto integer_labels(std::size_t n) -> std::vector<std::string>
    {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(std::to_string(i));
        return labels;
    }

    auto trace_of(const std::string & step, const PartiteHypergraph & p) -> ConstructionTrace
    {
        ConstructionTrace t;
        t.step = step;
        t.vertices = p.base().num_vertices();
        t.edges = p.base().num_edges();
        t.part_sizes = p.part_sizes();
        return t;
    }

    void require_partite_uniform(const PartiteHypergraph & p, std::size_t r, const std::string & what)
    {
        if (! p.base().is_uniform(Uniformity(r)))
            throw ValidationError(ValidationError::Kind::NotUniform, what + " is not " + std::to_string(r) + "-uniform");
        if (p.num_parts() != r || ! p.is_complete_transversal())
            throw ValidationError(ValidationError::Kind::NotPartite, what + " is not " + std::to_string(r) + "-partite");
    }

    // Records the girth and fails if it is below g. Skipped above the
    // configured edge count, where the search would dominate the build.
    auto check_girth(const Hypergraph & h, std::size_t g, const ConstructionParams & params, const std::string & what)
        -> std::optional<std::string>
    {
        if (g <= 2)
            return std::nullopt;
        if (h.num_edges() > params.girth_check_edges)
            return std::string("unchecked");
        auto result = girth(h, g - 1);
        if (! result.girth.at_least_holds(g))
            throw Error(what + " has girth " + result.girth.to_string() + ", below " + std::to_string(g));
        return result.girth.to_string();
    }

    void enforce(const SizeEstimate & est, const SizeLimits & limits, const std::string & what)
    {
        if (est.exceeds(limits))
            throw SizeLimitExceeded(what + " is too large: " + est.to_string() + " (limits: "
                    + std::to_string(limits.max_vertices) + " vertices, " + std::to_string(limits.max_edges)
                    + " edges)",
                est);
    }

    void enforce_actual(const Hypergraph & h, const SizeLimits & limits, const std::string & what)
    {
        SizeEstimate est;
        est.vertices = h.num_vertices();
        est.edges = h.num_edges();
        enforce(est, limits, what);
    }

    auto sub_params(const ConstructionParams & params, std::uint64_t stream) -> ConstructionParams
    {
        auto p = params;
        p.seed = derive_seed(params.seed, stream);
        return p;
    }

    // Repeatedly removes vertices of degree < q; returns the surviving
    // vertices in canonical order.
    auto peel(const Hypergraph & h, std::size_t q) -> std::vector<Vertex>
    {
        std::vector<std::size_t> degree(h.num_vertices());
        std::vector<char> vertex_alive(h.num_vertices(), 1), edge_alive(h.num_edges(), 1);
        std::deque<Vertex> doomed;
        for (Vertex v = 0; v < h.num_vertices(); ++v) {
            degree[v] = h.degree(v);
            if (degree[v] < q) {
                vertex_alive[v] = 0;
                doomed.push_back(v);
            }
        }
        while (! doomed.empty()) {
            auto v = doomed.front();
            doomed.pop_front();
            for (auto e : h.incident(v)) {
                if (! edge_alive[e])
                    continue;
                edge_alive[e] = 0;
                for (auto w : h.edge(e))
                    if (vertex_alive[w] && --degree[w] < q) {
                        vertex_alive[w] = 0;
                        doomed.push_back(w);
                    }
            }
        }
        std::vector<Vertex> kept;
        for (Vertex v = 0; v < h.num_vertices(); ++v)
            if (vertex_alive[v])
                kept.push_back(v);
        return kept;
    }

    auto relabelled(const Hypergraph & h) -> Hypergraph
    {
        return Hypergraph(h.num_vertices(), std::vector<Edge>(h.edges().begin(), h.edges().end()));
    }

}

auto tilde(const PartiteHypergraph & p) -> PartiteHypergraph
{
    const auto r = p.num_parts();
    if (r < 2)
        throw ValidationError(ValidationError::Kind::NotPartite, "tilde needs at least two parts");
    require_partite_uniform(p, r, "tilde input");

    const auto & h = p.base();
    const auto n = h.num_vertices();
    const auto m = h.num_edges();
    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<Vertex> fresh;
    for (std::size_t e = 0; e < m; ++e) {
        auto edge = h.edge(static_cast<EdgeIndex>(e));
        auto x = static_cast<Vertex>(n + e);
        edge.push_back(x);
        fresh.push_back(x);
        edges.push_back(std::move(edge));
    }
    std::vector<std::vector<Vertex>> parts(p.parts().begin(), p.parts().end());
    parts.push_back(std::move(fresh));
    return PartiteHypergraph(Hypergraph(integer_labels(n + m), std::move(edges)), std::move(parts));
}

auto amalgamate(const PartiteHypergraph & h, std::size_t i, const Hypergraph & f) -> Amalgamation
{
    if (i >= h.num_parts())
        throw InvalidArgument("part index " + std::to_string(i) + " out of range");
    const auto & glued = h.part(i);
    const auto k = glued.size();
    if (f.num_edges() > 0 && (k < 2 || ! f.is_uniform(Uniformity(k))))
        throw ValidationError(ValidationError::Kind::NotUniform,
            "amalgamation along a part of size " + std::to_string(k) + " needs a " + std::to_string(k)
                + "-uniform hypergraph");

    const auto & base = h.base();
    const auto n = base.num_vertices();
    const auto nf = f.num_vertices();

    std::vector<std::size_t> rank_in_part(n, 0);
    for (std::size_t t = 0; t < k; ++t)
        rank_in_part[glued[t]] = t;

    Amalgamation out{PartiteHypergraph(Hypergraph(), {}), {}};
    std::vector<Edge> edges;
    edges.reserve(f.num_edges() * base.num_edges());
    std::vector<std::vector<Vertex>> parts(h.num_parts());
    for (Vertex v = 0; v < nf; ++v)
        parts[i].push_back(v);

    auto next = static_cast<Vertex>(nf);
    for (std::size_t c = 0; c < f.num_edges(); ++c) {
        const auto & fe = f.edge(static_cast<EdgeIndex>(c));
        std::vector<Vertex> image(n);
        for (Vertex v = 0; v < n; ++v) {
            auto part = h.part_of(v);
            if (part == i)
                image[v] = fe[rank_in_part[v]];
            else {
                image[v] = next++;
                parts[part].push_back(image[v]);
            }
        }
        for (const auto & e : base.edges()) {
            Edge mapped;
            mapped.reserve(e.size());
            for (auto v : e)
                mapped.push_back(image[v]);
            edges.push_back(std::move(mapped));
        }
        out.embeddings.push_back(std::move(image));
    }

    out.graph = PartiteHypergraph(Hypergraph(integer_labels(next), std::move(edges)), std::move(parts));
    return out;
}

auto complete_partite_factor(const PartiteHypergraph & f, std::size_t a) -> Factor
{
    const auto r = f.num_parts();
    if (r == 0)
        throw InvalidArgument("factor template has no parts");
    if (a < r)
        throw InvalidArgument("a complete " + std::to_string(a) + "-partite factor needs a >= r = " + std::to_string(r));
    auto count = binomial(a, r);
    if (! count)
        throw InvalidArgument("binomial(a, r) overflows");

    const auto & base = f.base();
    const auto n = base.num_vertices();
    Factor out{PartiteHypergraph(Hypergraph(), {}), {}, {}};
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> parts(a);
    Vertex next = 0;
    for (std::uint64_t rank = 0; rank < *count; ++rank) {
        auto pick = unrank_combination(a, r, rank);
        std::vector<std::size_t> subset(pick.begin(), pick.end());
        std::vector<Vertex> image(n);
        for (Vertex v = 0; v < n; ++v) {
            image[v] = next++;
            parts[subset[f.part_of(v)]].push_back(image[v]);
        }
        for (const auto & e : base.edges()) {
            Edge mapped;
            for (auto v : e)
                mapped.push_back(image[v]);
            edges.push_back(std::move(mapped));
        }
        out.subsets.push_back(std::move(subset));
        out.embeddings.push_back(std::move(image));
    }
    out.graph = PartiteHypergraph(Hypergraph(integer_labels(next), std::move(edges)), std::move(parts));
    return out;
}

auto supply_min_degree_girth(std::size_t ell, std::size_t g, std::size_t q, const ConstructionParams & params)
    -> Supplied
{
    if (ell < 2 || g < 2)
        throw InvalidArgument("supplier needs ell >= 2 and g >= 2");
    if (q == 0)
        q = 1;

    Supplied out;
    out.trace.step = "supplier";
    out.trace.r = ell;
    out.trace.g = g;
    out.trace.q = q;

    auto size = detail::supplier_size(ell, g, q, params.supplier);
    SizeEstimate est;
    est.vertices = size.vertices;
    est.edges = size.edges;
    est.exact = size.exact;
    enforce(est, params.limits, "supplier output");

    if (auto n = detail::complete_supplier_order(ell, g, q, params.supplier)) {
        out.graph = complete_hypergraph(*n, Uniformity(ell));
    }
    else if (params.supplier == SupplierStrategy::Complete) {
        throw SupplierFailure("no complete " + std::to_string(ell) + "-uniform hypergraph has girth >= "
            + std::to_string(g));
    }
    else {
        // Dense high-girth sample, then peel low-degree vertices; grow n
        // whenever peeling leaves nothing.
        auto n = std::max<std::uint64_t>(*size.vertices, ell + 1);
        for (std::uint64_t round = 0;; ++round) {
            if (n > params.limits.max_vertices)
                throw SupplierFailure("no " + std::to_string(ell) + "-uniform hypergraph with girth >= "
                    + std::to_string(g) + " and minimum degree >= " + std::to_string(q) + " found within "
                    + std::to_string(params.limits.max_vertices) + " vertices");
            auto carrier = random_high_girth(static_cast<std::size_t>(n), ell, g, derive_seed(params.seed, round),
                {params.supplier_attempts, false});
            auto kept = peel(carrier.graph, q);
            if (! kept.empty()) {
                out.graph = relabelled(induced(carrier.graph, kept));
                break;
            }
            n *= 2;
        }
    }

    if (! out.graph.is_uniform(Uniformity(ell)) || out.graph.min_degree() < q)
        throw SupplierFailure("supplier output violates uniformity or minimum degree");
    auto gr = girth(out.graph, std::max<std::size_t>(2, g - 1));
    if (! gr.girth.at_least_holds(g))
        throw SupplierFailure("supplier output has girth " + gr.girth.to_string());
    out.trace.vertices = out.graph.num_vertices();
    out.trace.edges = out.graph.num_edges();
    out.trace.girth = gr.girth.to_string();
    return out;
}

auto build_pr(std::size_t r, std::size_t g, const ConstructionParams & params) -> BuiltPartite
{
    if (r < 2 || g < 2)
        throw InvalidArgument("PR(r, g) needs r >= 2 and g >= 2");
    enforce(estimate_pr_size(r, g, params.supplier), params.limits, "PR(" + std::to_string(r) + "," + std::to_string(g) + ")");

    if (r == 2) {
        auto path = Hypergraph::from_labels({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
        PartiteHypergraph p(std::move(path), {{0, 2}, {1}});
        auto trace = trace_of("pr-base", p);
        trace.r = r;
        trace.g = g;
        trace.girth = "infinite";
        return {std::move(p), std::move(trace)};
    }

    auto inner = build_pr(r - 1, g, params);
    const auto ell = inner.graph.base().num_edges();
    const auto q = ell * r;
    auto supplied = supply_min_degree_girth(ell, g, q, sub_params(params, r));
    auto extended = tilde(inner.graph);
    auto glued = amalgamate(extended, r - 1, supplied.graph);

    auto result = std::move(glued.graph);
    const auto name = "PR(" + std::to_string(r) + "," + std::to_string(g) + ")";
    enforce_actual(result.base(), params.limits, name);
    require_partite_uniform(result, r, name);

    auto trace = trace_of("pr", result);
    trace.r = r;
    trace.g = g;
    trace.ell = ell;
    trace.q = q;
    trace.e_prime = supplied.graph.num_edges();
    trace.copies = supplied.graph.num_edges();
    trace.part_index = r - 1;
    trace.girth = check_girth(result.base(), g, params, name);
    trace.children.push_back(std::move(inner.trace));
    trace.children.push_back(std::move(supplied.trace));
    return {std::move(result), std::move(trace)};
}

auto build_h(std::size_t r, std::size_t g, const ConstructionParams & params) -> Built
{
    if (r < 2 || g < 2)
        throw InvalidArgument("H(r, g) needs r >= 2 and g >= 2");
    const auto name = "H(" + std::to_string(r) + "," + std::to_string(g) + ")";
    enforce(estimate_h_size(r, g, params.supplier), params.limits, name);

    if (g == 2) {
        auto h = complete_hypergraph((r - 1) * (r - 1) + 1, Uniformity(r));
        ConstructionTrace trace;
        trace.step = "h-base";
        trace.r = r;
        trace.g = g;
        trace.vertices = h.num_vertices();
        trace.edges = h.num_edges();
        trace.girth = exact_girth(h).girth.to_string();
        return {std::move(h), std::move(trace)};
    }

    auto f = build_pr(r, g, sub_params(params, 0));
    const auto a = (r - 1) * (r - 1) + r;
    auto factor = complete_partite_factor(f.graph, a);
    auto m = std::move(factor.graph);

    ConstructionTrace trace;
    trace.step = "h";
    trace.r = r;
    trace.g = g;
    trace.a = a;
    trace.children.push_back(std::move(f.trace));
    auto factor_trace = trace_of("factor", m);
    factor_trace.a = a;
    factor_trace.copies = factor.subsets.size();
    trace.children.push_back(std::move(factor_trace));

    for (std::size_t j = 0; j < a; ++j) {
        const auto k = m.part(j).size();
        auto inner = build_h(k, g - 1, sub_params(params, j + 1));
        auto glued = amalgamate(m, j, inner.graph);
        m = std::move(glued.graph);
        enforce_actual(m.base(), params.limits, name);

        auto step = trace_of("amalgamate", m);
        step.part_index = j;
        step.e_prime = inner.graph.num_edges();
        step.copies = inner.graph.num_edges();
        step.children.push_back(std::move(inner.trace));
        trace.children.push_back(std::move(step));
    }

    auto h = m.base();
    if (! h.is_uniform(Uniformity(r)))
        throw ValidationError(ValidationError::Kind::NotUniform, name + " is not " + std::to_string(r) + "-uniform");
    trace.vertices = h.num_vertices();
    trace.edges = h.num_edges();
    trace.part_sizes = m.part_sizes();
    trace.girth = check_girth(h, g, params, name);
    return {std::move(h), std::move(trace)};
}

}
