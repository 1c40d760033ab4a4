#include "cli.hpp"

#include <rmg/construct.hpp>
#include <rmg/girth.hpp>
#include <rmg/io.hpp>
#include <rmg/probabilistic.hpp>
#include <rmg/solver.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace rmg::cli {

namespace {

    namespace fs = std::filesystem;

    struct Options {
        std::string file;
        std::string other_file;
        std::string output;
        std::string kind;
        std::size_t cap = 0;
        bool witness = false;
        std::uint64_t budget = default_solver_budget;
        std::size_t r = 3, g = 3, n = 0, R = 0, a = 0, ell = 2, part = 0;
        std::uint64_t seed = 0;
        std::size_t tries = 16, attempts = 8;
        std::uint64_t max_vertices = SizeLimits{}.max_vertices;
        std::uint64_t max_edges = SizeLimits{}.max_edges;
        std::string supplier = "auto";
        bool json = false, dot = false;
    };

    auto resolve(const std::string & path) -> fs::path
    {
        fs::path p(path);
        if (p.is_relative())
            if (const char * dir = std::getenv(output_dir_env); dir && *dir)
                return fs::path(dir) / p;
        return p;
    }

    void emit(const std::string & path, const std::string & text, std::ostream & out)
    {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        auto target = resolve(path);
        if (target.has_parent_path())
            fs::create_directories(target.parent_path());
        write_file_atomically(target, text);
    }

    auto verdict_code(Outcome o) -> int
    {
        switch (o) {
        case Outcome::WitnessFound: return success;
        case Outcome::PropertyHolds: return property_holds;
        case Outcome::BudgetExceeded: return budget_exceeded;
        }
        return failure;
    }

    auto params_from(const Options & o) -> ConstructionParams
    {
        ConstructionParams p;
        p.r = o.r;
        p.g = o.g;
        p.seed = o.seed;
        p.limits = {o.max_vertices, o.max_edges};
        p.supplier = parse_supplier_strategy(o.supplier);
        return p;
    }

    auto construct_meta(const std::string & command, const Options & o) -> Json
    {
        Json meta;
        meta["command"] = command;
        meta["r"] = o.r;
        meta["g"] = o.g;
        meta["seed"] = o.seed;
        meta["supplier"] = o.supplier;
        meta["max_vertices"] = o.max_vertices;
        meta["max_edges"] = o.max_edges;
        return meta;
    }

    auto cmd_girth(const Options & o, std::ostream & out) -> int
    {
        auto doc = read_document(o.file);
        auto cap = o.cap ? o.cap : std::max<std::size_t>(2, doc.graph.num_edges());
        auto result = girth(doc.graph, cap);
        Json j;
        j["girth"] = result.girth.to_string();
        j["cap"] = cap;
        if (o.witness && result.witness)
            j["witness"] = cycle_to_json(doc.graph, *result.witness);
        out << canonical_dump(j);
        return success;
    }

    auto cmd_solve(const Options & o, std::ostream & out) -> int
    {
        auto doc = read_document(o.file);
        Verdict verdict;
        if (o.kind == "good")
            verdict = find_good_coloring(doc.graph, o.budget);
        else {
            if (! doc.partite)
                throw ParseError("part-rainbow search needs a \"parts\" entry in " + o.file, 0, 0);
            verdict = find_part_rainbow_bad(*doc.partite, o.budget);
        }
        Json j;
        j["mode"] = o.kind;
        j["verdict"] = to_string(verdict.outcome);
        j["nodes"] = verdict.nodes;
        if (verdict.witness)
            j["witness"] = coloring_to_json(doc.graph, *verdict.witness);
        out << canonical_dump(j);
        return verdict_code(verdict.outcome);
    }

    auto cmd_construct(const Options & o, std::ostream & out) -> int
    {
        Json artifact;
        if (o.kind == "pr") {
            auto built = build_pr(o.r, o.g, params_from(o));
            artifact = to_json(built.graph);
            artifact["trace"] = trace_to_json(built.trace);
            artifact["meta"] = construct_meta("construct pr", o);
        }
        else if (o.kind == "h") {
            auto built = build_h(o.r, o.g, params_from(o));
            artifact = to_json(built.graph);
            artifact["trace"] = trace_to_json(built.trace);
            artifact["meta"] = construct_meta("construct h", o);
        }
        else {
            auto doc = read_document(o.file);
            if (! doc.partite)
                throw ParseError(o.kind + " needs a \"parts\" entry in " + o.file, 0, 0);
            Json meta;
            meta["command"] = "construct " + o.kind;
            if (o.kind == "tilde")
                artifact = to_json(tilde(*doc.partite));
            else if (o.kind == "factor") {
                artifact = to_json(complete_partite_factor(*doc.partite, o.a).graph);
                meta["a"] = o.a;
            }
            else {
                auto f = read_document(o.other_file);
                artifact = to_json(amalgamate(*doc.partite, o.part, f.graph).graph);
                meta["part"] = o.part;
            }
            artifact["meta"] = std::move(meta);
        }
        emit(o.output, canonical_dump(artifact), out);
        return success;
    }

    auto cmd_estimate(const Options & o, std::ostream & out) -> int
    {
        auto strategy = parse_supplier_strategy(o.supplier);
        auto est = o.kind == "pr" ? estimate_pr_size(o.r, o.g, strategy) : estimate_h_size(o.r, o.g, strategy);
        auto j = estimate_to_json(est);
        j["kind"] = o.kind;
        j["r"] = o.r;
        j["g"] = o.g;
        j["within_limits"] = ! est.exceeds({o.max_vertices, o.max_edges});
        out << canonical_dump(j);
        return success;
    }

    auto cmd_carrier(const Options & o, std::ostream & out) -> int
    {
        auto carrier = random_high_girth(o.n, o.R, o.g, o.seed, {o.attempts, false});
        auto artifact = to_json(carrier.graph);
        Json meta;
        meta["command"] = "random carrier";
        meta["n"] = o.n;
        meta["R"] = o.R;
        meta["g"] = o.g;
        meta["seed"] = o.seed;
        meta["attempts"] = o.attempts;
        artifact["meta"] = std::move(meta);
        Json report;
        report["sampled"] = carrier.sampled;
        report["deleted"] = carrier.deleted;
        report["edges"] = carrier.graph.num_edges();
        report["target"] = carrier.target;
        report["target_met"] = carrier.target_met;
        report["attempts_used"] = carrier.attempts;
        artifact["carrier"] = std::move(report);
        emit(o.output, canonical_dump(artifact), out);
        return success;
    }

    auto cmd_search(const Options & o, std::ostream & out) -> int
    {
        SearchParams p;
        p.r = o.r;
        p.g = o.g;
        p.n = o.n;
        p.tries = o.tries;
        p.budget = o.budget;
        p.seed = o.seed;
        auto result = random_search_rm(p);

        auto artifact = to_json(result.sample.graph);
        Json meta;
        meta["command"] = "random search";
        meta["r"] = o.r;
        meta["g"] = o.g;
        meta["n"] = result.n;
        meta["tries"] = o.tries;
        meta["budget"] = o.budget;
        meta["seed"] = o.seed;
        artifact["meta"] = std::move(meta);

        Json search;
        search["found"] = result.found;
        search["try"] = result.try_index;
        search["try_seed"] = result.try_seed;
        search["verdict"] = to_string(result.verdict.outcome);
        search["nodes"] = result.verdict.nodes;
        const auto vertices = to_json(result.sample.graph)["vertices"];
        auto sequence = Json::array();
        for (const auto & e : result.sample.sequence) {
            auto labels = Json::array();
            for (auto v : e)
                labels.push_back(vertices[v]);
            sequence.push_back(std::move(labels));
        }
        search["sequence"] = std::move(sequence);
        search["carrier"] = to_json(result.carrier);
        artifact["search"] = std::move(search);
        emit(o.output, canonical_dump(artifact), out);
        return verdict_code(result.verdict.outcome);
    }

    auto cmd_bound(const Options & o, std::ostream & out) -> int
    {
        auto t = counting_threshold(o.r, o.g);
        Json j;
        j["r"] = t.r;
        j["g"] = t.g;
        j["R"] = (t.r - 1) * (t.r - 1) + 1;
        j["a"] = t.a;
        j["n"] = t.n;
        j["lhs"] = t.lhs;
        j["rhs"] = t.rhs;
        j["lhs_before"] = t.lhs_before;
        j["rhs_before"] = t.rhs_before;
        out << canonical_dump(j);
        return success;
    }

    auto cmd_cycles(const Options & o, std::ostream & out) -> int
    {
        auto report = cycle_count_bound_check(o.r, o.ell, o.n, o.budget);
        Json j;
        j["r"] = report.r;
        j["ell"] = report.ell;
        j["n"] = report.n;
        j["count"] = report.count;
        j["per_set"] = report.per_set;
        j["sets"] = report.sets;
        j["max_support"] = report.max_support;
        j["holds"] = report.holds;
        out << canonical_dump(j);
        return report.holds ? success : failure;
    }

    auto cmd_convert(const Options & o, std::ostream & out) -> int
    {
        if (o.json == o.dot)
            throw CLI::ValidationError("convert", "exactly one of --json and --dot is required");
        auto doc = read_document(o.file);
        emit(o.output, o.json ? canonical_dump(to_json(doc)) : to_dot(doc.graph), out);
        return success;
    }

}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Constructions and exact checks for rm-unavoidable hypergraphs of large girth", "rmg"};
    app.require_subcommand(1);
    Options o;

    auto add_limits = [&](CLI::App * sub) {
        sub->add_option("--max-vertices", o.max_vertices, "Abort above this many vertices");
        sub->add_option("--max-edges", o.max_edges, "Abort above this many edges");
    };
    auto add_output = [&](CLI::App * sub) {
        sub->add_option("-o,--output", o.output, "Output file (default: stdout)");
    };
    const std::vector<std::string> strategies{"auto", "complete", "random"};

    auto * girth_cmd = app.add_subcommand("girth", "Berge girth of a hypergraph");
    girth_cmd->add_option("file", o.file, "Hypergraph JSON")->required();
    girth_cmd->add_option("--cap", o.cap, "Search cycles up to this length (default: edge count)");
    girth_cmd->add_flag("--witness", o.witness, "Print a shortest cycle");

    auto * solve_cmd = app.add_subcommand("solve", "Exhaustive colouring search");
    solve_cmd->add_option("mode", o.kind, "good | part-rainbow")
        ->required()
        ->check(CLI::IsMember({"good", "part-rainbow"}));
    solve_cmd->add_option("file", o.file, "Hypergraph JSON")->required();
    solve_cmd->add_option("--budget", o.budget, "Search node budget")->check(CLI::PositiveNumber);

    auto * construct_cmd = app.add_subcommand("construct", "Build a hypergraph");
    construct_cmd->add_option("kind", o.kind, "pr | h | tilde | factor | amalgamate")
        ->required()
        ->check(CLI::IsMember({"pr", "h", "tilde", "factor", "amalgamate"}));
    construct_cmd->add_option("file", o.file, "Partite input for tilde, factor and amalgamate");
    construct_cmd->add_option("--r", o.r, "Uniformity")->check(CLI::Range(2, 1 << 20));
    construct_cmd->add_option("--g", o.g, "Girth target")->check(CLI::Range(2, 1 << 20));
    construct_cmd->add_option("--seed", o.seed, "Random seed");
    construct_cmd->add_option("--supplier", o.supplier, "auto | complete | random")->check(CLI::IsMember(strategies));
    construct_cmd->add_option("--a", o.a, "Number of parts of the factor");
    construct_cmd->add_option("--part", o.part, "Part index to amalgamate along");
    construct_cmd->add_option("--with", o.other_file, "Hypergraph to amalgamate with");
    add_limits(construct_cmd);
    add_output(construct_cmd);

    auto * estimate_cmd = app.add_subcommand("estimate", "Predicted size of a construction");
    estimate_cmd->add_option("kind", o.kind, "pr | h")->required()->check(CLI::IsMember({"pr", "h"}));
    estimate_cmd->add_option("--r", o.r, "Uniformity")->check(CLI::Range(2, 1 << 20));
    estimate_cmd->add_option("--g", o.g, "Girth target")->check(CLI::Range(2, 1 << 20));
    estimate_cmd->add_option("--supplier", o.supplier, "auto | complete | random")->check(CLI::IsMember(strategies));
    add_limits(estimate_cmd);

    auto * random_cmd = app.add_subcommand("random", "Probabilistic constructions");
    random_cmd->require_subcommand(1);
    auto * carrier_cmd = random_cmd->add_subcommand("carrier", "Random uniform hypergraph of large girth");
    carrier_cmd->add_option("--n", o.n, "Vertices")->required();
    carrier_cmd->add_option("--R", o.R, "Edge size")->required();
    carrier_cmd->add_option("--g", o.g, "Girth target")->required();
    carrier_cmd->add_option("--seed", o.seed, "Random seed");
    carrier_cmd->add_option("--attempts", o.attempts, "Fresh samples before giving up on the edge target");
    add_output(carrier_cmd);
    auto * search_cmd = random_cmd->add_subcommand("search", "Search random Q-sequences for an rm-unavoidable one");
    search_cmd->add_option("--r", o.r, "Uniformity")->required();
    search_cmd->add_option("--g", o.g, "Girth target")->required();
    search_cmd->add_option("--n", o.n, "Vertices (default: (r-1)^2 + 4)");
    search_cmd->add_option("--tries", o.tries, "Independent tries");
    search_cmd->add_option("--budget", o.budget, "Solver node budget per try");
    search_cmd->add_option("--seed", o.seed, "Master seed");
    add_output(search_cmd);

    auto * bound_cmd = app.add_subcommand("bound", "Smallest n satisfying the counting inequality");
    bound_cmd->add_option("--r", o.r, "Uniformity")->required();
    bound_cmd->add_option("--g", o.g, "Girth target")->required();

    auto * cycles_cmd = app.add_subcommand("cycles", "Exact cycle count against the per-support bound");
    cycles_cmd->add_option("--r", o.r, "Uniformity")->required();
    cycles_cmd->add_option("--ell", o.ell, "Cycle length")->required();
    cycles_cmd->add_option("--n", o.n, "Vertices of the complete hypergraph")->required();
    cycles_cmd->add_option("--budget", o.budget, "Candidate budget");

    auto * convert_cmd = app.add_subcommand("convert", "Re-serialise a hypergraph file");
    convert_cmd->add_option("file", o.file, "Hypergraph JSON")->required();
    convert_cmd->add_flag("--json", o.json, "Canonical JSON");
    convert_cmd->add_flag("--dot", o.dot, "Graphviz incidence graph");
    add_output(convert_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        if (girth_cmd->parsed())
            return cmd_girth(o, out);
        if (solve_cmd->parsed())
            return cmd_solve(o, out);
        if (construct_cmd->parsed()) {
            if ((o.kind == "tilde" || o.kind == "factor" || o.kind == "amalgamate") && o.file.empty())
                throw CLI::ValidationError("construct", o.kind + " needs an input file");
            if (o.kind == "amalgamate" && o.other_file.empty())
                throw CLI::ValidationError("construct", "amalgamate needs --with");
            return cmd_construct(o, out);
        }
        if (estimate_cmd->parsed())
            return cmd_estimate(o, out);
        if (carrier_cmd->parsed())
            return cmd_carrier(o, out);
        if (search_cmd->parsed())
            return cmd_search(o, out);
        if (bound_cmd->parsed())
            return cmd_bound(o, out);
        if (cycles_cmd->parsed())
            return cmd_cycles(o, out);
        if (convert_cmd->parsed())
            return cmd_convert(o, out);
    }
    catch (const CLI::ValidationError & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    catch (const ValidationError & e) {
        err << "error: invalid hypergraph: " << e.what() << "\n";
        return input_error;
    }
    catch (const SizeLimitExceeded & e) {
        err << "error: " << e.what() << "\n";
        return limit_exceeded;
    }
    catch (const BudgetExhausted & e) {
        err << "error: " << e.what() << "\n";
        return budget_exceeded;
    }
    catch (const InvalidArgument & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
    return usage_error;
}

}
