#include <rmg/io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rmg {

namespace {

    auto is_integer_label(const std::string & s) -> bool
    {
        if (s.empty() || s.size() > 18)
            return false;
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size())
            return false;
        if (s[i] == '0')
            return s.size() == i + 1 && i == 0;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    }

    auto label_json(const std::string & label) -> Json
    {
        if (is_integer_label(label))
            return std::stoll(label);
        return label;
    }

    auto schema_error(const std::string & what) -> ParseError { return ParseError(what, 0, 0); }

    auto label_from(const Json & j, const std::string & where) -> std::string
    {
        if (j.is_number_integer())
            return std::to_string(j.get<std::int64_t>());
        if (j.is_string())
            return j.get<std::string>();
        throw schema_error(where + ": vertex labels must be integers or strings");
    }

    auto label_list(const Json & j, const std::string & where) -> std::vector<std::string>
    {
        if (! j.is_array())
            throw schema_error(where + " must be an array");
        std::vector<std::string> out;
        out.reserve(j.size());
        for (const auto & x : j)
            out.push_back(label_from(x, where));
        return out;
    }

    auto line_and_column(std::string_view text, std::size_t byte) -> std::pair<std::size_t, std::size_t>
    {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        return {line, column};
    }

    auto labelled_list(const Hypergraph & h, std::span<const Vertex> vs) -> Json
    {
        auto out = Json::array();
        for (auto v : vs)
            out.push_back(label_json(h.label(v)));
        return out;
    }

}

auto parse_document(std::string_view text) -> Document
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    }
    catch (const Json::parse_error & e) {
        auto [line, column] = line_and_column(text, e.byte);
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column),
            line, column);
    }
    if (! j.is_object())
        throw schema_error("top-level value must be an object");
    if (! j.contains("vertices") || ! j.contains("edges"))
        throw schema_error("object needs \"vertices\" and \"edges\"");

    auto vertices = label_list(j["vertices"], "vertices");
    const auto & edges_json = j["edges"];
    if (! edges_json.is_array())
        throw schema_error("edges must be an array");
    std::vector<std::vector<std::string>> edges;
    for (const auto & e : edges_json)
        edges.push_back(label_list(e, "edge"));

    Document doc;
    doc.graph = Hypergraph::from_labels(std::move(vertices), edges);
    if (j.contains("parts")) {
        const auto & parts_json = j["parts"];
        if (! parts_json.is_array())
            throw schema_error("parts must be an array");
        std::vector<std::vector<Vertex>> parts;
        for (const auto & p : parts_json) {
            std::vector<Vertex> part;
            for (const auto & l : label_list(p, "part"))
                part.push_back(doc.graph.vertex(l));
            parts.push_back(std::move(part));
        }
        doc.partite.emplace(doc.graph, std::move(parts));
    }
    for (const auto & [key, value] : j.items())
        if (key != "vertices" && key != "edges" && key != "parts")
            doc.extra[key] = value;
    return doc;
}

auto read_document(const std::filesystem::path & path) -> Document
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot open " + path.string(), 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

auto to_json(const Hypergraph & h) -> Json
{
    Json j;
    auto vertices = Json::array();
    for (const auto & l : h.labels())
        vertices.push_back(label_json(l));
    j["vertices"] = std::move(vertices);
    auto edges = Json::array();
    for (const auto & e : h.edges())
        edges.push_back(labelled_list(h, e));
    j["edges"] = std::move(edges);
    return j;
}

auto to_json(const PartiteHypergraph & p) -> Json
{
    auto j = to_json(p.base());
    auto parts = Json::array();
    for (const auto & part : p.parts())
        parts.push_back(labelled_list(p.base(), part));
    j["parts"] = std::move(parts);
    return j;
}

auto to_json(const Document & d) -> Json
{
    auto j = d.partite ? to_json(*d.partite) : to_json(d.graph);
    for (const auto & [key, value] : d.extra.items())
        j[key] = value;
    return j;
}

auto canonical_dump(const Json & j) -> std::string
{
    return j.dump() + "\n";
}

auto to_dot(const Hypergraph & h) -> std::string
{
    auto quoted = [](const std::string & s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };

    std::ostringstream out;
    out << "graph incidence {\n";
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        out << "  v" << v << " [shape=circle, label=" << quoted(h.label(v)) << "];\n";
    for (EdgeIndex e = 0; e < h.num_edges(); ++e)
        out << "  e" << e << " [shape=box, label=\"E" << e << "\"];\n";
    for (EdgeIndex e = 0; e < h.num_edges(); ++e)
        for (auto v : h.edge(e))
            out << "  v" << v << " -- e" << e << ";\n";
    out << "}\n";
    return out.str();
}

auto coloring_to_json(const Hypergraph & h, const Coloring & c) -> Json
{
    auto j = Json::object();
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        j[h.label(v)] = c[v];
    return j;
}

auto cycle_to_json(const Hypergraph & h, const CycleWitness & w) -> Json
{
    Json j;
    auto edges = Json::array();
    for (auto e : w.edges)
        edges.push_back(labelled_list(h, h.edge(e)));
    j["edges"] = std::move(edges);
    j["vertices"] = labelled_list(h, w.vertices);
    j["length"] = w.length();
    return j;
}

auto trace_to_json(const ConstructionTrace & t) -> Json
{
    Json j;
    j["step"] = t.step;
    if (t.r)
        j["r"] = t.r;
    if (t.g)
        j["g"] = t.g;
    j["vertices"] = t.vertices;
    j["edges"] = t.edges;
    if (! t.part_sizes.empty())
        j["part_sizes"] = t.part_sizes;
    auto put = [&](const char * key, const auto & value) {
        if (value)
            j[key] = *value;
    };
    put("ell", t.ell);
    put("e_prime", t.e_prime);
    put("q", t.q);
    put("a", t.a);
    put("copies", t.copies);
    put("part_index", t.part_index);
    put("girth", t.girth);
    if (! t.children.empty()) {
        auto children = Json::array();
        for (const auto & c : t.children)
            children.push_back(trace_to_json(c));
        j["children"] = std::move(children);
    }
    return j;
}

auto estimate_to_json(const SizeEstimate & e) -> Json
{
    Json j;
    j["astronomical"] = e.astronomical();
    j["exact"] = e.exact;
    j["vertices"] = e.vertices ? Json(*e.vertices) : Json(nullptr);
    j["edges"] = e.edges ? Json(*e.edges) : Json(nullptr);
    auto parts = Json::array();
    for (const auto & p : e.part_sizes)
        parts.push_back(p ? Json(*p) : Json(nullptr));
    j["part_sizes"] = std::move(parts);
    return j;
}

void write_file_atomically(const std::filesystem::path & path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (! out)
            throw Error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (! out)
            throw Error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}
