#include <rmg/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

using namespace rmg;

namespace {

auto count_matches(const std::string & text, const std::string & pattern) -> std::size_t
{
    std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}

TEST(Io, ParsesMixedLabels)
{
    auto doc = parse_document(R"({"vertices": [1, "b", 3], "edges": [["b", 1], [3, "b"]], "note": "kept"})");
    EXPECT_EQ(doc.graph.num_vertices(), 3U);
    EXPECT_EQ(doc.graph.num_edges(), 2U);
    EXPECT_FALSE(doc.partite);
    EXPECT_EQ(doc.extra["note"], "kept");
    auto j = to_json(doc);
    EXPECT_EQ(j["vertices"][0], 1);
    EXPECT_EQ(j["vertices"][1], "b");
    EXPECT_EQ(j["note"], "kept");
}

TEST(Io, RoundTripIsByteStable)
{
    const std::string text =
        R"({"edges":[["y","x"],["z","y"]],"parts":[["x","z"],["y"]],"vertices":["x","y","z"],"extra":{"k":[1,2]}})";
    auto first = canonical_dump(to_json(parse_document(text)));
    auto second = canonical_dump(to_json(parse_document(first)));
    EXPECT_EQ(first, second);
    EXPECT_EQ(first.back(), '\n');
    auto doc = parse_document(first);
    ASSERT_TRUE(doc.partite);
    EXPECT_EQ(doc.partite->num_parts(), 2U);
}

TEST(Io, MalformedJsonReportsPosition)
{
    try {
        parse_document("{\n  \"vertices\": [1, 2],\n  \"edges\": [[1, 2],,]\n}");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_GT(e.column(), 0U);
    }
}

TEST(Io, SchemaErrors)
{
    EXPECT_THROW(parse_document(R"({"edges": []})"), ParseError);
    EXPECT_THROW(parse_document(R"({"vertices": [1], "edges": [[1, 2]]})"), ValidationError);
    EXPECT_THROW(parse_document(R"({"vertices": [1, 1], "edges": []})"), ValidationError);
    EXPECT_THROW(parse_document(R"({"vertices": [1.5], "edges": []})"), ParseError);
    EXPECT_THROW(parse_document(R"([1, 2])"), ParseError);
    EXPECT_THROW(parse_document(R"({"vertices": [1, 2], "edges": [[1, 2]], "parts": [[1, 2]]})"), ValidationError);
    EXPECT_THROW(read_document("/nonexistent/file.json"), ParseError);
}

TEST(Io, DotListsIncidences)
{
    auto h = Hypergraph::from_labels({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    auto dot = to_dot(h);
    EXPECT_EQ(dot.rfind("graph incidence {", 0), 0U);
    EXPECT_EQ(count_matches(dot, R"(\bv\d+ \[shape=circle)"), 3U);
    EXPECT_EQ(count_matches(dot, R"(\be\d+ \[shape=box)"), 2U);
    EXPECT_EQ(count_matches(dot, R"(v\d+ -- e\d+)"), 4U);
}

TEST(Io, AtomicWrite)
{
    auto dir = std::filesystem::temp_directory_path() / "rmg_io_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "out.json";
    write_file_atomically(path, "first\n");
    write_file_atomically(path, "second\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto & entry : std::filesystem::directory_iterator(dir))
        ++files;
    EXPECT_EQ(files, 1U);
    std::filesystem::remove_all(dir);
}
