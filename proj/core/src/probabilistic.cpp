#include <rmg/girth.hpp>
#include <rmg/probabilistic.hpp>
#include <rmg/solver.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rmg {

namespace {

    // Floyd's algorithm: a uniform k-subset of {0..n-1}.
    auto random_subset(std::size_t n, std::size_t k, Rng & rng) -> Edge
    {
        Edge out;
        out.reserve(k);
        for (auto j = n - k; j < n; ++j) {
            auto t = static_cast<Vertex>(uniform_below(rng, j + 1));
            if (std::find(out.begin(), out.end(), t) != out.end())
                out.push_back(static_cast<Vertex>(j));
            else
                out.push_back(t);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

}

auto sample_uniform_edges(std::size_t n, std::size_t R, std::uint64_t m, Rng & rng) -> std::vector<Edge>
{
    if (R < 2 || n < R)
        throw InvalidArgument("sampling needs 2 <= R <= n");
    auto total = binomial(n, R);
    if (total)
        m = std::min(m, *total);

    std::vector<Edge> out;
    out.reserve(m);
    // Dense regime: shuffle the ranks. Sparse regime: reject repeats.
    if (total && *total <= 4 * m && *total <= 50'000'000) {
        std::vector<std::uint64_t> ranks(*total);
        for (std::uint64_t i = 0; i < *total; ++i)
            ranks[i] = i;
        for (std::uint64_t i = 0; i < m; ++i) {
            auto j = i + uniform_below(rng, *total - i);
            std::swap(ranks[i], ranks[j]);
            auto subset = unrank_combination(n, R, ranks[i]);
            out.emplace_back(subset.begin(), subset.end());
        }
        return out;
    }

    std::set<Edge> seen;
    while (out.size() < m) {
        auto e = random_subset(n, R, rng);
        if (seen.insert(e).second)
            out.push_back(std::move(e));
    }
    return out;
}

namespace {

    // Does some cycle of length <= ell pass through `e`? Equivalent to a path
    // of at most ell-1 further edges between two vertices of e avoiding e.
    class ShortCycleProbe {
    public:
        ShortCycleProbe(const Hypergraph & h, const std::vector<char> & alive) :
            h_(h), alive_(alive), dist_(h.num_vertices(), 0), stamp_(h.num_vertices(), 0),
            edge_stamp_(h.num_edges(), 0)
        {
        }

        auto on_short_cycle(EdgeIndex e, std::size_t ell) -> bool
        {
            const auto & edge = h_.edge(e);
            for (auto source : edge) {
                ++generation_;
                queue_.clear();
                mark(source, 0);
                edge_stamp_[e] = generation_;
                for (std::size_t head = 0; head < queue_.size(); ++head) {
                    auto u = queue_[head];
                    if (dist_[u] + 1 > ell - 1)
                        continue;
                    for (auto f : h_.incident(u)) {
                        if (! alive_[f] || edge_stamp_[f] == generation_)
                            continue;
                        edge_stamp_[f] = generation_;
                        for (auto w : h_.edge(f)) {
                            if (stamp_[w] == generation_)
                                continue;
                            if (w != source && std::binary_search(edge.begin(), edge.end(), w))
                                return true;
                            mark(w, dist_[u] + 1);
                        }
                    }
                }
            }
            return false;
        }

    private:
        void mark(Vertex v, std::size_t d)
        {
            stamp_[v] = generation_;
            dist_[v] = d;
            queue_.push_back(v);
        }

        const Hypergraph & h_;
        const std::vector<char> & alive_;
        std::vector<std::size_t> dist_;
        std::vector<std::uint64_t> stamp_, edge_stamp_;
        std::uint64_t generation_ = 0;
        std::vector<Vertex> queue_;
    };

}

auto delete_short_cycles(const Hypergraph & h, std::size_t g) -> ShortCycleDeletion
{
    std::vector<char> alive(h.num_edges(), 1);
    ShortCycleProbe probe(h, alive);
    std::size_t deleted = 0;
    for (std::size_t ell = 2; ell < g; ++ell)
        for (EdgeIndex e = 0; e < h.num_edges(); ++e)
            if (alive[e] && probe.on_short_cycle(e, ell)) {
                alive[e] = 0;
                ++deleted;
            }

    std::vector<Edge> kept;
    for (EdgeIndex e = 0; e < h.num_edges(); ++e)
        if (alive[e])
            kept.push_back(h.edge(e));
    std::vector<std::string> labels(h.labels().begin(), h.labels().end());
    return {Hypergraph(std::move(labels), std::move(kept)), deleted};
}

auto carrier_sample_size(std::size_t n, std::size_t g) -> std::uint64_t
{
    return 2 * ceil_pow_one_plus_inverse(n, g);
}

auto random_high_girth(std::size_t n, std::size_t R, std::size_t g, std::uint64_t seed, CarrierOptions options)
    -> Carrier
{
    if (R < 2 || g < 2 || n < R)
        throw InvalidArgument("random_high_girth needs R >= 2, g >= 2 and n >= R");
    if (options.attempts == 0)
        throw InvalidArgument("random_high_girth needs at least one attempt");

    Carrier best;
    best.target = ceil_pow_one_plus_inverse(n, g);
    bool have = false;
    for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        auto edges = sample_uniform_edges(n, R, carrier_sample_size(n, g), rng);
        auto sampled = edges.size();
        auto pruned = delete_short_cycles(Hypergraph(n, std::move(edges)), g);
        if (! have || pruned.graph.num_edges() > best.graph.num_edges()) {
            best.graph = std::move(pruned.graph);
            best.sampled = sampled;
            best.deleted = pruned.deleted;
            have = true;
        }
        best.attempts = attempt + 1;
        if (best.graph.num_edges() >= best.target)
            break;
    }
    best.target_met = best.graph.num_edges() >= best.target;

    if (g >= 3 && ! girth(best.graph, g - 1).girth.at_least_holds(g))
        throw std::logic_error("short-cycle deletion left a cycle shorter than the girth target");
    if (options.require_target && ! best.target_met)
        throw RetryLimitReached("random_high_girth reached " + std::to_string(best.graph.num_edges())
                + " edges after " + std::to_string(best.attempts) + " attempts, target "
                + std::to_string(best.target),
            best.graph.num_edges());
    return best;
}

auto sample_q(const Hypergraph & carrier, std::size_t r, std::uint64_t seed) -> QSample
{
    auto R = carrier.uniformity();
    if (carrier.num_edges() > 0 && ! R)
        throw ValidationError(ValidationError::Kind::NotUniform, "carrier is not uniform");
    if (r < 2 || (R && r > *R))
        throw InvalidArgument("sample_q needs 2 <= r <= R");

    QSample out;
    Rng rng(seed);
    std::set<Edge> distinct;
    if (R) {
        auto choices = *binomial(*R, r);
        for (const auto & e : carrier.edges()) {
            auto pick = unrank_combination(*R, r, uniform_below(rng, choices));
            Edge sub;
            for (auto k : pick)
                sub.push_back(e[k]);
            out.sequence.push_back(sub);
            distinct.insert(std::move(sub));
        }
    }
    std::vector<std::string> labels(carrier.labels().begin(), carrier.labels().end());
    out.graph = Hypergraph(std::move(labels), std::vector<Edge>(distinct.begin(), distinct.end()));
    return out;
}

namespace {

    using Wide = boost::multiprecision::cpp_bin_float_50;

    struct Sides {
        Wide lhs, rhs;
    };

    auto counting_sides(std::uint64_t n, std::uint64_t a, std::size_t g) -> Sides
    {
        Wide wn(n), wa(a);
        Wide lhs = wn * log(wn) + log(wa - 1);
        Wide rhs = pow(wn, 1 + Wide(1) / Wide(g)) * log(wa / (wa - 1));
        return {lhs, rhs};
    }

}

auto counting_inequality_holds(std::uint64_t n, std::uint64_t a, std::size_t g) -> bool
{
    if (a < 2 || n == 0 || g == 0)
        throw InvalidArgument("counting inequality needs a >= 2, n >= 1 and g >= 1");
    auto s = counting_sides(n, a, g);
    return s.lhs < s.rhs;
}

auto counting_threshold(std::size_t r, std::size_t g) -> CountingThreshold
{
    if (r < 3)
        throw InvalidArgument("counting threshold needs r >= 3 (a = binomial(R, r) = 1 for r = 2)");
    if (g < 2)
        throw InvalidArgument("counting threshold needs g >= 2");

    CountingThreshold out;
    out.r = r;
    out.g = g;
    auto a = binomial((r - 1) * (r - 1) + 1, r);
    if (! a)
        throw InvalidArgument("binomial(R, r) overflows for r = " + std::to_string(r));
    out.a = *a;

    // rhs - lhs decreases and then increases in n, and is negative at n = 1,
    // so the holding set is a ray; find its start by doubling then bisection.
    std::uint64_t hi = 1;
    while (! counting_inequality_holds(hi, out.a, g)) {
        if (hi > (std::uint64_t{1} << 62))
            throw InvalidArgument("counting threshold exceeds 2^62");
        hi *= 2;
    }
    std::uint64_t lo = hi / 2;   // fails at lo (or lo == 0)
    while (hi - lo > 1) {
        auto mid = lo + (hi - lo) / 2;
        if (counting_inequality_holds(mid, out.a, g))
            hi = mid;
        else
            lo = mid;
    }
    out.n = hi;

    auto at = counting_sides(out.n, out.a, g);
    out.lhs = static_cast<double>(at.lhs);
    out.rhs = static_cast<double>(at.rhs);
    if (out.n > 1) {
        auto before = counting_sides(out.n - 1, out.a, g);
        out.lhs_before = static_cast<double>(before.lhs);
        out.rhs_before = static_cast<double>(before.rhs);
    }
    return out;
}

auto random_search_rm(const SearchParams & params) -> SearchOutcome
{
    if (params.r < 3)
        throw InvalidArgument("random search needs r >= 3");
    if (params.g < 2)
        throw InvalidArgument("random search needs g >= 2");
    if (params.tries == 0 || params.budget == 0)
        throw InvalidArgument("random search needs positive tries and budget");

    const auto R = (params.r - 1) * (params.r - 1) + 1;
    const auto n = params.n == 0 ? R + 3 : params.n;
    if (n < R)
        throw InvalidArgument("random search needs n >= R = " + std::to_string(R));

    SearchOutcome best;
    bool have = false;
    for (std::size_t t = 0; t < params.tries; ++t) {
        auto try_seed = derive_seed(params.seed, t);
        auto carrier = random_high_girth(n, R, params.g, try_seed, {params.carrier_attempts, false});
        auto sample = sample_q(carrier.graph, params.r, derive_seed(try_seed, 1));
        auto verdict = find_good_coloring(sample.graph, params.budget);

        bool proven = verdict.outcome == Outcome::PropertyHolds;
        if (proven || ! have || verdict.nodes > best.verdict.nodes) {
            best = SearchOutcome{proven, t, try_seed, n, std::move(carrier.graph), std::move(sample), verdict};
            have = true;
        }
        if (proven)
            break;
    }
    return best;
}

}
