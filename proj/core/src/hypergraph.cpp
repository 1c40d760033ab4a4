#include <rmg/hypergraph.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace rmg {

namespace {

auto default_labels(std::size_t n) -> std::vector<std::string>
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

auto describe(const Edge & e, std::span<const std::string> labels) -> std::string
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            out << ',';
        if (e[i] < labels.size())
            out << labels[e[i]];
        else
            out << '#' << e[i];
    }
    out << '}';
    return out.str();
}

}

Uniformity::Uniformity(std::size_t r) : r_(r)
{
    if (r < 2)
        throw InvalidArgument("uniformity must be at least 2, got " + std::to_string(r));
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Edge> edges) :
    Hypergraph(default_labels(num_vertices), std::move(edges))
{
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges) :
    labels_(std::move(labels)), edges_(std::move(edges))
{
    validate_and_index();
}

auto Hypergraph::from_labels(std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>> & edges) -> Hypergraph
{
    std::unordered_map<std::string, Vertex> index;
    index.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (! index.emplace(vertices[i], static_cast<Vertex>(i)).second)
            throw ValidationError(ValidationError::Kind::DuplicateVertex, "duplicate vertex '" + vertices[i] + "'");

    std::vector<Edge> converted;
    converted.reserve(edges.size());
    for (const auto & e : edges) {
        Edge out;
        out.reserve(e.size());
        for (const auto & name : e) {
            auto it = index.find(name);
            if (it == index.end())
                throw ValidationError(ValidationError::Kind::UnknownVertex,
                    "edge refers to unknown vertex '" + name + "'");
            out.push_back(it->second);
        }
        converted.push_back(std::move(out));
    }
    return Hypergraph(std::move(vertices), std::move(converted));
}

void Hypergraph::validate_and_index()
{
    const auto n = labels_.size();
    by_label_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (! by_label_.emplace(labels_[i], static_cast<Vertex>(i)).second)
            throw ValidationError(ValidationError::Kind::DuplicateVertex, "duplicate vertex '" + labels_[i] + "'");

    for (auto & e : edges_) {
        std::sort(e.begin(), e.end());
        for (auto v : e)
            if (v >= n)
                throw ValidationError(ValidationError::Kind::UnknownVertex,
                    "edge " + describe(e, labels_) + " is not a subset of the vertex set");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ValidationError(ValidationError::Kind::RepeatedVertexInEdge,
                "edge " + describe(e, labels_) + " lists a vertex twice");
        if (e.size() < 2)
            throw ValidationError(ValidationError::Kind::EdgeTooSmall,
                "edge " + describe(e, labels_) + " has fewer than 2 vertices");
    }

    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw ValidationError(ValidationError::Kind::DuplicateEdge, "duplicate edge " + describe(*dup, labels_));

    incidence_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (auto v : edges_[i])
            incidence_[v].push_back(static_cast<EdgeIndex>(i));
}

auto Hypergraph::find(const std::string & label) const -> std::optional<Vertex>
{
    if (auto it = by_label_.find(label); it != by_label_.end())
        return it->second;
    return std::nullopt;
}

auto Hypergraph::vertex(const std::string & label) const -> Vertex
{
    if (auto v = find(label))
        return *v;
    throw ValidationError(ValidationError::Kind::UnknownVertex, "unknown vertex '" + label + "'");
}

auto Hypergraph::min_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < incidence_.size(); ++v)
        best = v == 0 ? incidence_[v].size() : std::min(best, incidence_[v].size());
    return best;
}

auto Hypergraph::max_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (const auto & inc : incidence_)
        best = std::max(best, inc.size());
    return best;
}

auto Hypergraph::is_uniform(Uniformity r) const -> bool
{
    return std::all_of(edges_.begin(), edges_.end(), [&](const Edge & e) { return e.size() == r.value(); });
}

auto Hypergraph::uniformity() const -> std::optional<std::size_t>
{
    if (edges_.empty())
        return std::nullopt;
    auto r = edges_.front().size();
    if (! is_uniform(Uniformity(r)))
        return std::nullopt;
    return r;
}

auto Hypergraph::find_edge(const Edge & sorted) const -> std::optional<EdgeIndex>
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted);
    if (it != edges_.end() && *it == sorted)
        return static_cast<EdgeIndex>(it - edges_.begin());
    return std::nullopt;
}

auto Hypergraph::incidences() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & e : edges_)
        total += e.size();
    return total;
}

auto complete_hypergraph(std::size_t n, Uniformity r) -> Hypergraph
{
    std::vector<Edge> edges;
    if (r.value() <= n) {
        Edge current(r.value());
        std::iota(current.begin(), current.end(), 0U);
        while (true) {
            edges.push_back(current);
            // next combination in lexicographic order
            std::size_t i = r.value();
            while (i > 0 && current[i - 1] == n - r.value() + (i - 1))
                --i;
            if (i == 0)
                break;
            ++current[i - 1];
            for (std::size_t j = i; j < r.value(); ++j)
                current[j] = current[j - 1] + 1;
        }
    }
    return Hypergraph(n, std::move(edges));
}

auto induced(const Hypergraph & h, std::span<const Vertex> keep) -> Hypergraph
{
    constexpr auto absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Vertex> image(h.num_vertices(), absent);
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (auto v : sorted) {
        if (v >= h.num_vertices())
            throw ValidationError(ValidationError::Kind::UnknownVertex, "vertex #" + std::to_string(v) + " out of range");
        image[v] = static_cast<Vertex>(labels.size());
        labels.push_back(h.label(v));
    }

    std::vector<Edge> edges;
    for (const auto & e : h.edges()) {
        if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return image[v] == absent; }))
            continue;
        Edge mapped;
        mapped.reserve(e.size());
        for (auto v : e)
            mapped.push_back(image[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph(std::move(labels), std::move(edges));
}

auto induced(const Hypergraph & h, const std::vector<std::string> & keep) -> Hypergraph
{
    std::vector<Vertex> vs;
    vs.reserve(keep.size());
    for (const auto & name : keep)
        vs.push_back(h.vertex(name));
    return induced(h, vs);
}

auto disjoint_union(std::span<const Hypergraph> inputs) -> DisjointUnion
{
    DisjointUnion result;
    std::size_t total_vertices = 0, total_edges = 0;
    for (const auto & h : inputs) {
        total_vertices += h.num_vertices();
        total_edges += h.num_edges();
    }

    std::vector<Edge> edges;
    edges.reserve(total_edges);
    Vertex offset = 0;
    for (const auto & h : inputs) {
        std::vector<Vertex> map(h.num_vertices());
        std::iota(map.begin(), map.end(), offset);
        for (const auto & e : h.edges()) {
            Edge mapped;
            mapped.reserve(e.size());
            for (auto v : e)
                mapped.push_back(map[v]);
            edges.push_back(std::move(mapped));
        }
        offset += static_cast<Vertex>(h.num_vertices());
        result.embeddings.push_back(std::move(map));
    }
    result.graph = Hypergraph(total_vertices, std::move(edges));
    return result;
}

PartiteHypergraph::PartiteHypergraph(Hypergraph base, std::vector<std::vector<Vertex>> parts) :
    base_(std::move(base)), parts_(std::move(parts))
{
    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    part_of_.assign(base_.num_vertices(), unassigned);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        std::sort(parts_[i].begin(), parts_[i].end());
        for (auto v : parts_[i]) {
            if (v >= base_.num_vertices())
                throw ValidationError(ValidationError::Kind::UnknownVertex,
                    "part " + std::to_string(i + 1) + " refers to an unknown vertex");
            if (part_of_[v] != unassigned)
                throw ValidationError(ValidationError::Kind::PartsNotDisjoint,
                    "vertex '" + base_.label(v) + "' lies in more than one part");
            part_of_[v] = i;
        }
    }
    for (Vertex v = 0; v < base_.num_vertices(); ++v)
        if (part_of_[v] == unassigned)
            throw ValidationError(ValidationError::Kind::PartsNotCovering,
                "vertex '" + base_.label(v) + "' is not in any part");

    std::vector<char> seen(parts_.size(), 0);
    for (const auto & e : base_.edges()) {
        std::fill(seen.begin(), seen.end(), 0);
        for (auto v : e) {
            if (seen[part_of_[v]])
                throw ValidationError(ValidationError::Kind::EdgeHitsPartTwice,
                    "an edge has two vertices in part " + std::to_string(part_of_[v] + 1));
            seen[part_of_[v]] = 1;
        }
    }
}

auto PartiteHypergraph::part_sizes() const -> std::vector<std::size_t>
{
    std::vector<std::size_t> sizes;
    sizes.reserve(parts_.size());
    for (const auto & p : parts_)
        sizes.push_back(p.size());
    return sizes;
}

auto PartiteHypergraph::is_complete_transversal() const -> bool
{
    return std::all_of(base_.edges().begin(), base_.edges().end(),
        [&](const Edge & e) { return e.size() == parts_.size(); });
}

}
