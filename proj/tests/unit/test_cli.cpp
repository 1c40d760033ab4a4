#include "cli.hpp"

#include <rmg/io.hpp>
#include <rmg/solver.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rmg;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

auto run(std::vector<std::string> args) -> Result
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("rmg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }

    void TearDown() override
    {
        unsetenv(cli::output_dir_env);
        fs::remove_all(dir_);
    }

    auto write(const std::string & name, const std::string & content) -> std::string
    {
        auto path = dir_ / name;
        std::ofstream(path) << content;
        return path.string();
    }

    static auto slurp(const fs::path & path) -> std::string
    {
        std::ifstream in(path);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

const std::string path_graph = R"({"vertices":["x","y","z"],"edges":[["x","y"],["y","z"]],"parts":[["x","z"],["y"]]})";

}

TEST_F(CliTest, GirthOfPath)
{
    auto r = run({"girth", write("p.json", path_graph)});
    EXPECT_EQ(r.code, cli::success);
    EXPECT_EQ(Json::parse(r.out)["girth"], "infinite");
}

TEST_F(CliTest, SolveExitCodesFollowVerdicts)
{
    auto k5 = run({"construct", "h", "--r", "3", "--g", "2"});
    ASSERT_EQ(k5.code, cli::success);
    auto file = write("k5.json", k5.out);
    auto holds = run({"solve", "good", file});
    EXPECT_EQ(holds.code, cli::property_holds);
    EXPECT_EQ(Json::parse(holds.out)["verdict"], "property_holds");

    auto single = write("t.json", R"({"vertices":[1,2,3],"edges":[[1,2,3]]})");
    auto found = run({"solve", "good", single});
    EXPECT_EQ(found.code, cli::success);
    EXPECT_TRUE(Json::parse(found.out).contains("witness"));

    auto k10 = write("k10.json", canonical_dump(to_json(complete_hypergraph(10, Uniformity(4)))));
    EXPECT_EQ(run({"solve", "good", k10, "--budget", "5"}).code, cli::budget_exceeded);

    EXPECT_EQ(run({"solve", "part-rainbow", write("p.json", path_graph)}).code, cli::property_holds);
    EXPECT_EQ(run({"solve", "part-rainbow", single}).code, cli::input_error);
}

TEST_F(CliTest, ErrorExitCodes)
{
    EXPECT_EQ(run({}).code, cli::usage_error);
    EXPECT_EQ(run({"frobnicate"}).code, cli::usage_error);
    EXPECT_EQ(run({"solve", "sideways", "x.json"}).code, cli::usage_error);
    EXPECT_EQ(run({"girth", (dir_ / "missing.json").string()}).code, cli::input_error);
    EXPECT_EQ(run({"girth", write("bad.json", "{\"vertices\": [")}).code, cli::input_error);
    EXPECT_EQ(run({"girth", write("inv.json", R"({"vertices":[1],"edges":[[1,2]]})")}).code, cli::input_error);
    EXPECT_EQ(run({"construct", "h", "--r", "2", "--g", "3"}).code, cli::limit_exceeded);
    EXPECT_EQ(run({"construct", "pr", "--r", "3", "--g", "3", "--max-edges", "10"}).code, cli::limit_exceeded);
    EXPECT_EQ(run({"construct", "tilde"}).code, cli::usage_error);
    EXPECT_EQ(run({"convert", write("p.json", path_graph)}).code, cli::usage_error);
    EXPECT_EQ(run({"bound", "--r", "2", "--g", "3"}).code, cli::usage_error);
    EXPECT_EQ(run({"--help"}).code, cli::success);
}

TEST_F(CliTest, ArtifactsAreClosedUnderTheSchema)
{
    auto input = write("p.json", path_graph);
    std::vector<std::vector<std::string>> producers{
        {"construct", "pr", "--r", "3", "--g", "3"},
        {"construct", "h", "--r", "3", "--g", "2"},
        {"construct", "tilde", input},
        {"construct", "factor", input, "--a", "3"},
        {"random", "carrier", "--n", "20", "--R", "3", "--g", "3", "--seed", "2"},
        {"convert", input, "--json"},
    };
    for (const auto & args : producers) {
        auto produced = run(args);
        ASSERT_EQ(produced.code, cli::success) << args[0] << " " << args[1] << produced.err;
        auto file = write("artifact.json", produced.out);
        auto doc = read_document(file);
        auto g = run({"girth", file, "--cap", "3"});
        EXPECT_EQ(g.code, cli::success) << g.err;
        auto s = run({"solve", "good", file, "--budget", "100000"});
        EXPECT_LE(s.code, cli::budget_exceeded) << s.err;
        EXPECT_EQ(run({"convert", file, "--json"}).out, canonical_dump(to_json(doc)));
    }
}

TEST_F(CliTest, AmalgamateAlongPart)
{
    auto input = write("p.json", path_graph);
    auto f = write("f.json", R"({"vertices":[1,2,3],"edges":[[1,2],[2,3]]})");
    auto r = run({"construct", "amalgamate", input, "--part", "0", "--with", f});
    ASSERT_EQ(r.code, cli::success) << r.err;
    auto doc = parse_document(r.out);
    EXPECT_EQ(doc.graph.num_edges(), 4U);
    EXPECT_EQ(doc.extra["meta"]["part"], 0);
    EXPECT_EQ(run({"construct", "amalgamate", input, "--part", "0"}).code, cli::usage_error);
}

TEST_F(CliTest, ReplayFromMetaIsByteIdentical)
{
    auto first = run({"random", "search", "--r", "3", "--g", "2", "--tries", "4", "--seed", "11"});
    ASSERT_LE(first.code, cli::property_holds);
    auto meta = Json::parse(first.out)["meta"];
    auto again = run({"random", "search", "--r", std::to_string(meta["r"].get<int>()), "--g",
        std::to_string(meta["g"].get<int>()), "--n", std::to_string(meta["n"].get<int>()), "--tries",
        std::to_string(meta["tries"].get<int>()), "--seed", std::to_string(meta["seed"].get<int>())});
    EXPECT_EQ(first.out, again.out);

    auto pr = run({"construct", "pr", "--r", "3", "--g", "3", "--seed", "5"});
    auto pm = Json::parse(pr.out)["meta"];
    EXPECT_EQ(pm["command"], "construct pr");
    auto pr_again = run({"construct", "pr", "--r", "3", "--g", "3", "--seed", std::to_string(pm["seed"].get<int>()),
        "--supplier", pm["supplier"].get<std::string>()});
    EXPECT_EQ(pr.out, pr_again.out);
}

TEST_F(CliTest, SearchArtifactCarriesItsSequence)
{
    auto r = run({"random", "search", "--r", "3", "--g", "2", "--tries", "8", "--seed", "3"});
    ASSERT_LE(r.code, cli::property_holds);
    auto j = Json::parse(r.out);
    auto carrier = parse_document(j["search"]["carrier"].dump());
    EXPECT_EQ(j["search"]["sequence"].size(), carrier.graph.num_edges());
    auto doc = parse_document(r.out);
    auto verdict = verify_rm_unavoidable(doc.graph);
    EXPECT_EQ(to_string(verdict.outcome), j["search"]["verdict"]);
}

TEST_F(CliTest, OutputDirectoryFromEnvironment)
{
    setenv(cli::output_dir_env, (dir_ / "artifacts").c_str(), 1);
    auto r = run({"construct", "h", "--r", "3", "--g", "2", "-o", "k5.json"});
    ASSERT_EQ(r.code, cli::success) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto written = dir_ / "artifacts" / "k5.json";
    ASSERT_TRUE(fs::exists(written));
    EXPECT_EQ(read_document(written).graph.num_edges(), 10U);

    auto absolute = dir_ / "abs.dot";
    ASSERT_EQ(run({"convert", written.string(), "--dot", "-o", absolute.string()}).code, cli::success);
    EXPECT_NE(slurp(absolute).find("graph incidence {"), std::string::npos);
}

TEST_F(CliTest, BoundAndCycles)
{
    auto b = Json::parse(run({"bound", "--r", "3", "--g", "2"}).out);
    EXPECT_EQ(b["a"], 10);
    EXPECT_EQ(b["R"], 5);
    auto c = run({"cycles", "--r", "3", "--ell", "2", "--n", "5"});
    EXPECT_EQ(c.code, cli::success);
    EXPECT_EQ(Json::parse(c.out)["count"], 30);
    auto e = Json::parse(run({"estimate", "h", "--r", "2", "--g", "3"}).out);
    EXPECT_EQ(e["within_limits"], false);
}
