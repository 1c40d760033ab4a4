#include <rmg/coloring.hpp>

#include <algorithm>
#include <unordered_map>

namespace rmg {

auto Coloring::num_classes() const -> std::size_t
{
    std::vector<ColorClass> seen(classes_.begin(), classes_.end());
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

auto Coloring::class_sizes() const -> std::vector<std::size_t>
{
    auto c = canonical();
    std::vector<std::size_t> sizes(c.num_classes(), 0);
    for (auto k : c.classes_)
        ++sizes[k];
    return sizes;
}

auto Coloring::canonical() const -> Coloring
{
    std::unordered_map<ColorClass, ColorClass> relabel;
    std::vector<ColorClass> out;
    out.reserve(classes_.size());
    for (auto k : classes_) {
        auto [it, fresh] = relabel.emplace(k, static_cast<ColorClass>(relabel.size()));
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

auto Coloring::is_canonical() const -> bool
{
    ColorClass next = 0;
    for (auto k : classes_) {
        if (k > next)
            return false;
        if (k == next)
            ++next;
    }
    return true;
}

auto to_string(EdgeClass c) -> std::string
{
    switch (c) {
    case EdgeClass::Monochromatic: return "monochromatic";
    case EdgeClass::Rainbow: return "rainbow";
    case EdgeClass::Mixed: return "mixed";
    }
    return {};
}

auto to_string(Outcome o) -> std::string
{
    switch (o) {
    case Outcome::WitnessFound: return "witness_found";
    case Outcome::PropertyHolds: return "property_holds";
    case Outcome::BudgetExceeded: return "budget_exceeded";
    }
    return {};
}

auto classify_edge(std::span<const ColorClass> colors, std::span<const Vertex> edge) -> EdgeClass
{
    std::vector<ColorClass> seen;
    seen.reserve(edge.size());
    for (auto v : edge) {
        if (v >= colors.size() || colors[v] == uncolored)
            throw InvalidArgument("vertex #" + std::to_string(v) + " is not coloured");
        seen.push_back(colors[v]);
    }
    std::sort(seen.begin(), seen.end());
    auto distinct = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    if (distinct == 1)
        return EdgeClass::Monochromatic;
    if (distinct == edge.size())
        return EdgeClass::Rainbow;
    return EdgeClass::Mixed;
}

auto classify_edge(const Coloring & c, std::span<const Vertex> edge) -> EdgeClass
{
    return classify_edge(c.classes(), edge);
}

auto is_good(const Hypergraph & h, const Coloring & c) -> bool
{
    if (c.size() != h.num_vertices())
        return false;
    return std::all_of(h.edges().begin(), h.edges().end(),
        [&](const Edge & e) { return classify_edge(c, e) == EdgeClass::Mixed; });
}

auto has_rainbow_edge(const Hypergraph & h, const Coloring & c) -> bool
{
    return std::any_of(h.edges().begin(), h.edges().end(),
        [&](const Edge & e) { return classify_edge(c, e) == EdgeClass::Rainbow; });
}

auto is_part_rainbow(const PartiteHypergraph & p, const Coloring & c) -> bool
{
    if (c.size() != p.base().num_vertices())
        return false;
    for (const auto & part : p.parts()) {
        std::vector<ColorClass> used;
        for (auto v : part)
            used.push_back(c[v]);
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end())
            return false;
    }
    return true;
}

auto enumerate_partitions(unsigned n, const std::function<bool(std::span<const ColorClass>)> & visit)
    -> std::uint64_t
{
    if (n > max_partition_elements)
        throw InvalidArgument("enumerate_partitions supports at most " + std::to_string(max_partition_elements)
            + " elements, got " + std::to_string(n));

    std::vector<ColorClass> rgs(n, 0);
    // prefix_max[i] = max(rgs[0..i-1]) + 1, the number of classes open before i
    std::vector<ColorClass> prefix_max(n + 1, 0);
    for (unsigned i = 1; i <= n; ++i)
        prefix_max[i] = 1;
    std::uint64_t visited = 0;

    while (true) {
        ++visited;
        if (! visit(rgs))
            return visited;
        // find rightmost position that can be incremented
        int i = static_cast<int>(n) - 1;
        while (i > 0 && rgs[i] == prefix_max[i])
            --i;
        if (i <= 0)
            return visited;
        ++rgs[i];
        prefix_max[i + 1] = std::max(prefix_max[i], rgs[i] + 1);
        for (unsigned j = static_cast<unsigned>(i) + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j + 1] = prefix_max[j];
        }
    }
}

}
