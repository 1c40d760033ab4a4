#include <rmg/solver.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rmg {

namespace {

    struct Domain {
        std::vector<ColorClass> values;
        bool open = true;   ///< may also take a class nobody uses yet

        auto empty() const -> bool { return values.empty() && ! open; }
    };

    /**
     * Backtracking over colourings in restricted-growth form. Vertices are
     * coloured in a fixed order (descending degree, then canonical index); a
     * vertex may reuse any class already open or open exactly one new class.
     *
     * Edge rules are applied when an edge has a single uncoloured vertex:
     * if the coloured ones share one class the last vertex must avoid it
     * (forbid_mono), and if they are pairwise distinct it must repeat one of
     * them (forbid_rainbow). In part-rainbow mode every part is an
     * all-different constraint, checked by bipartite matching over the
     * vertices whose domains are already finite.
     */
    class Search {
    public:
        Search(const Hypergraph & h, const PartiteHypergraph * partite, bool forbid_mono, std::uint64_t budget) :
            h_(h), partite_(partite), forbid_mono_(forbid_mono), budget_(budget),
            colors_(h.num_vertices(), uncolored), open_uncolored_(h.num_edges())
        {
            for (std::size_t e = 0; e < h.num_edges(); ++e)
                open_uncolored_[e] = h.edge(static_cast<EdgeIndex>(e)).size();

            order_.resize(h.num_vertices());
            std::iota(order_.begin(), order_.end(), 0U);
            std::stable_sort(order_.begin(), order_.end(),
                [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });

            if (partite_) {
                part_uses_.assign(partite_->num_parts(), std::vector<std::uint32_t>(h.num_vertices() + 1, 0));
                for (std::size_t p = 0; p < partite_->num_parts(); ++p)
                    if (partite_->part(p).size() > 1)
                        constrained_parts_.push_back(p);
            }
        }

        auto run() -> Verdict
        {
            if (descend(0)) {
                auto witness = Coloring(colors_).canonical();
                if (! certified(witness))
                    throw std::logic_error("solver produced a colouring that does not re-verify");
                return Verdict::witness_found(std::move(witness), nodes_);
            }
            if (aborted_)
                return Verdict::budget_exceeded(nodes_);
            return Verdict::property_holds(nodes_);
        }

    private:
        auto certified(const Coloring & c) const -> bool
        {
            if (partite_)
                return is_part_rainbow(*partite_, c) && ! has_rainbow_edge(h_, c);
            return is_good(h_, c);
        }

        auto descend(std::size_t depth) -> bool
        {
            if (depth == order_.size())
                return true;
            const auto v = order_[depth];
            const auto dom = domain_of(v);

            auto attempt = [&](ColorClass c) -> bool {
                if (++nodes_ > budget_) {
                    aborted_ = true;
                    return false;
                }
                assign(v, c);
                bool found = consistent_after(v) && descend(depth + 1);
                if (! found)
                    unassign(v);
                return found;
            };

            for (auto c : dom.values) {
                if (attempt(c))
                    return true;
                if (aborted_)
                    return false;
            }
            if (dom.open)
                return attempt(num_classes_);
            return false;
        }

        void assign(Vertex v, ColorClass c)
        {
            colors_[v] = c;
            if (c == num_classes_)
                ++num_classes_;
            for (auto e : h_.incident(v))
                --open_uncolored_[e];
            if (partite_)
                ++part_uses_[partite_->part_of(v)][c];
        }

        void unassign(Vertex v)
        {
            auto c = colors_[v];
            colors_[v] = uncolored;
            for (auto e : h_.incident(v))
                ++open_uncolored_[e];
            if (partite_)
                --part_uses_[partite_->part_of(v)][c];
            if (c + 1 == num_classes_ && std::none_of(colors_.begin(), colors_.end(), [&](ColorClass x) { return x == c; }))
                --num_classes_;
        }

        auto last_uncolored(EdgeIndex e) const -> Vertex
        {
            for (auto u : h_.edge(e))
                if (colors_[u] == uncolored)
                    return u;
            return h_.edge(e).front();
        }

        auto domain_of(Vertex v) const -> Domain
        {
            Domain dom;
            std::vector<ColorClass> forbidden;
            std::optional<std::vector<ColorClass>> allowed;
            std::vector<ColorClass> seen;

            for (auto e : h_.incident(v)) {
                if (open_uncolored_[e] != 1)
                    continue;
                const auto & edge = h_.edge(e);
                seen.clear();
                for (auto u : edge)
                    if (u != v)
                        seen.push_back(colors_[u]);
                std::sort(seen.begin(), seen.end());
                auto distinct = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
                seen.resize(distinct);

                if (forbid_mono_ && distinct == 1)
                    forbidden.push_back(seen.front());
                if (distinct == edge.size() - 1) {
                    // coloured vertices pairwise distinct: must repeat one of them
                    if (! allowed)
                        allowed = seen;
                    else {
                        std::vector<ColorClass> meet;
                        std::set_intersection(allowed->begin(), allowed->end(), seen.begin(), seen.end(),
                            std::back_inserter(meet));
                        *allowed = std::move(meet);
                    }
                }
            }

            auto permitted = [&](ColorClass c) {
                if (std::find(forbidden.begin(), forbidden.end(), c) != forbidden.end())
                    return false;
                if (partite_ && part_uses_[partite_->part_of(v)][c] > 0)
                    return false;
                return true;
            };

            if (allowed) {
                dom.open = false;
                for (auto c : *allowed)
                    if (permitted(c))
                        dom.values.push_back(c);
            }
            else {
                for (ColorClass c = 0; c < num_classes_; ++c)
                    if (permitted(c))
                        dom.values.push_back(c);
            }
            return dom;
        }

        auto consistent_after(Vertex v) -> bool
        {
            for (auto e : h_.incident(v))
                if (open_uncolored_[e] == 1 && domain_of(last_uncolored(e)).empty())
                    return false;
            if (partite_)
                return parts_have_matching();
            return true;
        }

        // Every uncoloured vertex with a finite domain must get a distinct
        // class within its part (Hall's condition via augmenting paths).
        auto parts_have_matching() -> bool
        {
            for (auto p : constrained_parts_) {
                domains_.clear();
                for (auto u : partite_->part(p)) {
                    if (colors_[u] != uncolored)
                        continue;
                    bool constrained = false;
                    for (auto e : h_.incident(u))
                        if (open_uncolored_[e] == 1) {
                            constrained = true;
                            break;
                        }
                    if (! constrained)
                        continue;
                    auto dom = domain_of(u);
                    if (dom.empty())
                        return false;
                    if (! dom.open)
                        domains_.push_back(std::move(dom.values));
                }
                if (! matching_saturates())
                    return false;
            }
            return true;
        }

        auto matching_saturates() -> bool
        {
            if (domains_.size() <= 1)
                return true;
            match_of_class_.assign(num_classes_, -1);
            for (std::size_t i = 0; i < domains_.size(); ++i) {
                visited_.assign(num_classes_, 0);
                if (! augment(static_cast<int>(i)))
                    return false;
            }
            return true;
        }

        auto augment(int i) -> bool
        {
            for (auto c : domains_[i]) {
                if (visited_[c])
                    continue;
                visited_[c] = 1;
                if (match_of_class_[c] < 0 || augment(match_of_class_[c])) {
                    match_of_class_[c] = i;
                    return true;
                }
            }
            return false;
        }

        const Hypergraph & h_;
        const PartiteHypergraph * partite_;
        bool forbid_mono_;
        std::uint64_t budget_;

        std::vector<ColorClass> colors_;
        std::vector<std::size_t> open_uncolored_;
        std::vector<Vertex> order_;
        ColorClass num_classes_ = 0;
        std::vector<std::vector<std::uint32_t>> part_uses_;
        std::vector<std::size_t> constrained_parts_;

        std::vector<std::vector<ColorClass>> domains_;
        std::vector<int> match_of_class_;
        std::vector<char> visited_;

        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
    };

}

auto find_good_coloring(const Hypergraph & h, std::uint64_t budget) -> Verdict
{
    return Search(h, nullptr, true, budget).run();
}

auto verify_rm_unavoidable(const Hypergraph & h, std::uint64_t budget) -> Verdict
{
    return find_good_coloring(h, budget);
}

auto find_part_rainbow_bad(const PartiteHypergraph & p, std::uint64_t budget) -> Verdict
{
    return Search(p.base(), &p, false, budget).run();
}

auto verify_part_rainbow_forced(const PartiteHypergraph & p, std::uint64_t budget) -> Verdict
{
    return find_part_rainbow_bad(p, budget);
}

}
