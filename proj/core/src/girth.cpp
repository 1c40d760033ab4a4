#include <rmg/combinatorics.hpp>
#include <rmg/girth.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace rmg {

auto Girth::finite(std::size_t value) -> Girth
{
    if (value < 2)
        throw InvalidArgument("a finite girth is at least 2");
    return Girth(Kind::Finite, value);
}

auto Girth::at_least_holds(std::size_t g) const -> bool
{
    switch (kind_) {
    case Kind::Infinite: return true;
    case Kind::Finite:
    case Kind::AtLeast: return value_ >= g;
    }
    return false;
}

auto Girth::to_string() const -> std::string
{
    switch (kind_) {
    case Kind::Infinite: return "infinite";
    case Kind::Finite: return std::to_string(value_);
    case Kind::AtLeast: return ">=" + std::to_string(value_);
    }
    return {};
}

auto is_valid_cycle(const Hypergraph & h, const CycleWitness & w) -> bool
{
    const auto k = w.edges.size();
    if (k < 2 || w.vertices.size() != k)
        return false;
    for (auto e : w.edges)
        if (e >= h.num_edges())
            return false;
    for (auto v : w.vertices)
        if (v >= h.num_vertices())
            return false;

    auto distinct = [](auto values) {
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    };
    if (! distinct(w.edges) || ! distinct(w.vertices))
        return false;

    auto contains = [&](EdgeIndex e, Vertex v) {
        const auto & edge = h.edge(e);
        return std::binary_search(edge.begin(), edge.end(), v);
    };
    for (std::size_t i = 0; i < k; ++i)
        if (! contains(w.edges[i], w.vertices[i]) || ! contains(w.edges[(i + 1) % k], w.vertices[i]))
            return false;
    return true;
}

auto is_berge_acyclic(const Hypergraph & h) -> bool
{
    const auto n = h.num_vertices();
    std::vector<std::size_t> parent(n + h.num_edges());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        for (auto v : h.edge(static_cast<EdgeIndex>(e))) {
            auto a = root(v), b = root(n + e);
            if (a == b)
                return false;
            parent[a] = b;
        }
    return true;
}

namespace {

    // Bounded BFS over the incidence graph. Nodes [0, n) are vertices and
    // [n, n + m) are edges.
    class IncidenceSearch {
    public:
        explicit IncidenceSearch(const Hypergraph & h) :
            h_(h), n_(h.num_vertices()), dist_(n_ + h.num_edges()), parent_(n_ + h.num_edges()),
            stamp_(n_ + h.num_edges(), 0)
        {
        }

        struct Closing {
            std::size_t length = std::numeric_limits<std::size_t>::max();
            std::size_t u = 0, w = 0;
        };

        // Shortest closing non-tree edge found from `root`, exploring nodes at
        // distance <= depth and ignoring anything that cannot beat `bound`.
        auto run(std::size_t root, std::size_t depth, std::size_t bound) -> Closing
        {
            ++generation_;
            Closing best;
            best.length = bound;
            queue_.clear();
            visit(root, 0, root);
            for (std::size_t head = 0; head < queue_.size(); ++head) {
                auto u = queue_[head];
                auto du = dist_[u];
                if (2 * du + 1 >= best.length)
                    break;
                for_each_neighbour(u, [&](std::size_t w) {
                    if (w == parent_[u])
                        return;
                    if (stamp_[w] == generation_) {
                        auto len = du + dist_[w] + 1;
                        if (len < best.length)
                            best = Closing{len, u, w};
                    }
                    else if (du < depth)
                        visit(w, du + 1, u);
                });
            }
            return best;
        }

        auto path_to_root(std::size_t x) const -> std::vector<std::size_t>
        {
            std::vector<std::size_t> path{x};
            while (parent_[x] != x) {
                x = parent_[x];
                path.push_back(x);
            }
            return path;
        }

    private:
        void visit(std::size_t x, std::size_t d, std::size_t from)
        {
            stamp_[x] = generation_;
            dist_[x] = d;
            parent_[x] = from;
            queue_.push_back(x);
        }

        template <typename F>
        void for_each_neighbour(std::size_t x, F && f) const
        {
            if (x < n_) {
                for (auto e : h_.incident(static_cast<Vertex>(x)))
                    f(n_ + e);
            }
            else {
                for (auto v : h_.edge(static_cast<EdgeIndex>(x - n_)))
                    f(v);
            }
        }

        const Hypergraph & h_;
        std::size_t n_;
        std::vector<std::size_t> dist_, parent_;
        std::vector<std::uint64_t> stamp_;
        std::uint64_t generation_ = 0;
        std::vector<std::size_t> queue_;
    };

    auto witness_from_nodes(const Hypergraph & h, const std::vector<std::size_t> & cycle) -> CycleWitness
    {
        const auto n = h.num_vertices();
        const auto len = cycle.size();
        std::size_t start = 0;
        while (cycle[start] < n)
            ++start;
        CycleWitness w;
        for (std::size_t i = 0; i < len; i += 2) {
            w.edges.push_back(static_cast<EdgeIndex>(cycle[(start + i) % len] - n));
            w.vertices.push_back(static_cast<Vertex>(cycle[(start + i + 1) % len]));
        }
        return w;
    }

}

auto girth(const Hypergraph & h, std::size_t cap) -> GirthResult
{
    if (cap < 2)
        throw InvalidArgument("girth cap must be at least 2");
    if (is_berge_acyclic(h))
        return {Girth::infinite(), std::nullopt};

    IncidenceSearch search(h);
    // incidence cycles are twice as long as hypergraph cycles
    std::size_t best = 2 * cap + 1;
    std::size_t best_root = 0;
    for (Vertex root = 0; root < h.num_vertices() && best > 4; ++root) {
        auto found = search.run(root, cap, best);
        if (found.length < best) {
            best = found.length;
            best_root = root;
        }
    }
    if (best > 2 * cap)
        return {Girth::at_least(cap + 1), std::nullopt};

    // Replay the winning root. At the global minimum the two tree paths only
    // meet at the root, so they close into a simple cycle.
    auto found = search.run(best_root, cap, best + 1);
    auto a = search.path_to_root(found.u);
    auto b = search.path_to_root(found.w);
    std::vector<std::size_t> cycle(a.rbegin(), a.rend());
    cycle.insert(cycle.end(), b.begin(), b.end() - 1);

    auto witness = witness_from_nodes(h, cycle);
    return {Girth::finite(best / 2), std::move(witness)};
}

auto exact_girth(const Hypergraph & h) -> GirthResult
{
    return girth(h, std::max<std::size_t>(2, h.num_edges()));
}

namespace {

    struct CycleKey {
        std::vector<EdgeIndex> edges;
        std::vector<Vertex> connectors;

        auto operator<=>(const CycleKey &) const = default;
    };

    // Enumerates Berge cycles whose smallest edge index comes first.
    class CycleEnumerator {
    public:
        CycleEnumerator(const Hypergraph & h, std::size_t ell, std::uint64_t budget,
            const std::function<void(const CycleWitness &)> & visit) :
            h_(h), ell_(ell), budget_(budget), visit_(visit), used_edge_(h.num_edges(), 0),
            used_vertex_(h.num_vertices(), 0)
        {
        }

        void run()
        {
            for (EdgeIndex first = 0; first < h_.num_edges(); ++first) {
                seq_.assign(1, first);
                used_edge_[first] = 1;
                extend();
                used_edge_[first] = 0;
            }
        }

        auto count() const -> std::uint64_t { return seen_.size(); }

    private:
        void extend()
        {
            const auto last = seq_.back();
            for (auto x : h_.edge(last)) {
                if (used_vertex_[x])
                    continue;
                if (seq_.size() == ell_) {
                    const auto & first = h_.edge(seq_.front());
                    if (std::binary_search(first.begin(), first.end(), x)) {
                        connectors_.push_back(x);
                        emit();
                        connectors_.pop_back();
                    }
                    continue;
                }
                used_vertex_[x] = 1;
                connectors_.push_back(x);
                for (auto next : h_.incident(x)) {
                    if (used_edge_[next] || next < seq_.front())
                        continue;
                    used_edge_[next] = 1;
                    seq_.push_back(next);
                    extend();
                    seq_.pop_back();
                    used_edge_[next] = 0;
                }
                connectors_.pop_back();
                used_vertex_[x] = 0;
            }
        }

        void emit()
        {
            if (++candidates_ > budget_)
                throw BudgetExhausted("cycle enumeration exceeded its budget of " + std::to_string(budget_)
                        + " candidate tuples",
                    candidates_);

            CycleKey key;
            key.edges = seq_;
            std::vector<EdgeIndex> reversed{seq_.front()};
            reversed.insert(reversed.end(), seq_.rbegin(), seq_.rend() - 1);
            key.edges = std::min(seq_, reversed);
            key.connectors = connectors_;
            std::sort(key.connectors.begin(), key.connectors.end());
            if (seen_.insert(std::move(key)).second && visit_)
                visit_(CycleWitness{seq_, connectors_});
        }

        const Hypergraph & h_;
        std::size_t ell_;
        std::uint64_t budget_;
        const std::function<void(const CycleWitness &)> & visit_;
        std::vector<char> used_edge_, used_vertex_;
        std::vector<EdgeIndex> seq_;
        std::vector<Vertex> connectors_;
        std::set<CycleKey> seen_;
        std::uint64_t candidates_ = 0;
    };

}

void for_each_cycle(const Hypergraph & h, std::size_t ell, std::uint64_t budget,
    const std::function<void(const CycleWitness &)> & visit)
{
    if (ell < 2)
        throw InvalidArgument("cycle length must be at least 2");
    CycleEnumerator(h, ell, budget, visit).run();
}

auto count_cycles(const Hypergraph & h, std::size_t ell, std::uint64_t budget) -> std::uint64_t
{
    if (ell < 2)
        throw InvalidArgument("cycle length must be at least 2");
    std::function<void(const CycleWitness &)> none;
    CycleEnumerator enumerator(h, ell, budget, none);
    enumerator.run();
    return enumerator.count();
}

auto cycle_count_bound_check(std::size_t r, std::size_t ell, std::size_t n, std::uint64_t budget)
    -> CycleBoundReport
{
    if (r < 2 || ell < 2)
        throw InvalidArgument("cycle bound check needs r >= 2 and ell >= 2");

    CycleBoundReport report;
    report.r = r;
    report.ell = ell;
    report.n = n;

    const auto support = (r - 1) * ell;
    auto complete = complete_hypergraph(n, Uniformity(r));
    for_each_cycle(complete, ell, budget, [&](const CycleWitness & w) {
        ++report.count;
        std::vector<Vertex> vs;
        for (auto e : w.edges)
            vs.insert(vs.end(), complete.edge(e).begin(), complete.edge(e).end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        report.max_support = std::max(report.max_support, vs.size());
    });

    report.per_set = count_cycles(complete_hypergraph(support, Uniformity(r)), ell, budget);
    auto sets = binomial(n, support);
    if (! sets)
        throw BudgetExhausted("binomial(n, (r-1)*ell) overflows", 0);
    report.sets = *sets;
    auto bound = checked_mul(report.per_set, report.sets);
    report.holds = ! bound || report.count <= *bound;
    return report;
}

}
