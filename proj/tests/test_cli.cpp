#include <hfree/cli.hpp>
#include <hfree/error.hpp>
#include <hfree/harness.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hfree;

namespace
{
    struct Outcome
    {
        int code;
        std::string out, err;
    };

    auto call(std::vector<std::string> args) -> Outcome
    {
        args.insert(args.begin(), "hfree");
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto temp_path(const std::string & name) -> std::string
    {
        auto p = std::filesystem::temp_directory_path() / name;
        std::filesystem::remove(p);
        return p.string();
    }

    auto lines(const std::string & path) -> std::vector<std::string>
    {
        std::ifstream in(path);
        std::vector<std::string> result;
        for (std::string line; std::getline(in, line);)
            result.push_back(line);
        return result;
    }
}

TEST_CASE("graph arguments")
{
    CHECK(cli::parse_graph_argument("g6:D~{").size() == 10);
    CHECK(cli::parse_graph_argument("gen:turan:9:3").size() == 27);
    CHECK(cli::parse_graph_argument("K4").size() == 6);
    CHECK(cli::parse_graph_argument("K3(2)").size() == 12);
    CHECK_THROWS_AS(cli::parse_graph_argument("nonsense"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_graph_argument("g6:"), InvalidArgument);
}

TEST_CASE("count, contains and color")
{
    auto r = call({"count", "--graph", "g6:D~{", "--pattern", "K3"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");

    r = call({"count", "--graph", "gen:complete:6", "--pattern", "K2(2)"});
    CHECK(r.out == "45\n");

    r = call({"contains", "--graph", "gen:cycle:5", "--forbid", "K3"});
    CHECK(r.out == "no\n");
    r = call({"contains", "--graph", "K4", "--forbid", "K3"});
    CHECK(r.out.starts_with("yes\ncopy "));

    r = call({"color", "--graph", "gen:cycle:5"});
    CHECK(r.out.starts_with("chromatic_number 3\n"));
    r = call({"color", "--graph", "gen:cycle:5", "--k", "2"});
    CHECK(r.out == "colorable no\n");
}

TEST_CASE("solve prints count, proof and a bipartite witness")
{
    auto r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2", "--forbid", "K3", "--mode", "exact"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count 9\n") != std::string::npos);
    CHECK(r.out.find("proof branch_and_bound\n") != std::string::npos);
    CHECK(r.out.find("witness 0-1 0-2 0-3 1-4 1-5 2-4 2-5 3-4 3-5\n") != std::string::npos);

    r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2", "--forbid", "K3", "--strategy", "exhaustive",
        "--all-optima"});
    CHECK(r.out.find("proof exhaustive\n") != std::string::npos);
    CHECK(r.out.find("optima 10\n") != std::string::npos);

    r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2", "--forbid", "K3", "--mode", "heuristic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count 9\n") != std::string::npos);
    CHECK(r.out.find("proof heuristic\n") != std::string::npos);
}

TEST_CASE("solve failures map to exit codes")
{
    auto r = call({"solve", "--graph", "gen:complete:9", "--pattern", "K2", "--forbid", "K3", "--node-budget", "5", "--no-incumbent"});
    CHECK(r.code == cli::exit_unknown);
    CHECK(r.err.find("budget") != std::string::npos);

    r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2", "--forbid", "K3", "--mode", "heuristic", "--strategy",
        "exhaustive"});
    CHECK(r.code == cli::exit_input);
    CHECK(r.err.find("contradictory") != std::string::npos);

    r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2"});
    CHECK(r.code == cli::exit_input);
    CHECK(r.err.find("--forbid") != std::string::npos);

    r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2", "--forbid", "K3", "--mode", "fast"});
    CHECK(r.code == cli::exit_input);

    r = call({"solve", "--graph", "gen:complete:6", "--pattern", "K2", "--forbid", "K2(0)"});
    CHECK(r.code == cli::exit_input);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("formula")
{
    auto r = call({"formula", "aes-threshold", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "2/5 (0.4)\n");

    r = call({"formula", "es-threshold", "--k", "3"});
    CHECK(r.out == "1/3 (0.333333333333)\n");

    r = call({"formula", "predict-ex-clique", "--n", "6", "--k", "3", "--m", "2"});
    CHECK(r.out == "9 (9)\n");

    r = call({"formula", "reinsertion-scale", "--n", "10", "--k", "5", "--m", "3", "--t", "2"});
    CHECK(r.out.find("unverified") != std::string::npos);

    r = call({"formula", "aes-threshold"});
    CHECK(r.code == cli::exit_input);
    CHECK(r.err.find("--k") != std::string::npos);

    r = call({"formula", "golden-ratio", "--k", "3"});
    CHECK(r.code == cli::exit_input);
    CHECK(r.err.find("unknown formula") != std::string::npos);
}

TEST_CASE("peel, partite and rebuild")
{
    auto r = call({"partite", "--graph", "gen:complete:6", "--pattern", "K2", "--k", "2"});
    CHECK(r.out.starts_with("count 9\n"));

    r = call({"peel", "--graph", "gen:complete:5", "--k", "3"});
    CHECK(r.out.find("stop degree_threshold_met\n") != std::string::npos);

    r = call({"rebuild", "--graph", "gen:turan:9:3", "--pattern", "K2", "--forbid", "K4", "--k", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count 27\n") != std::string::npos);
    CHECK(r.out.find("h_free yes\n") != std::string::npos);
}

TEST_CASE("verify and scan write records; replay reproduces them")
{
    auto path = temp_path("hfree_cli_records.jsonl");
    auto r = call({"--out", path, "verify", "colorable", "--graph", "gen:complete:6", "--forbid", "K3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict all_optima_colorable holds\n") != std::string::npos);

    r = call({"--out", path, "--threads", "2", "scan", "--fractions", "1,3/4", "--n", "6", "--trials", "2"});
    CHECK(r.code == 0);

    r = call({"--out", path, "verify", "prediction", "--forbid", "K3", "--n-min", "4", "--n-max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5 6 25/4 24/25\n") != std::string::npos);

    auto records = read_records(path);
    REQUIRE(records.size() == 3);
    CHECK(records[0].kind == "extremal_colorable");
    CHECK(records[1].kind == "threshold_scan");

    r = call({"replay", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("differs") == std::string::npos);

    auto tampered = temp_path("hfree_cli_tampered.jsonl");
    {
        auto record = records[0];
        record.results["optimum"] = "10";
        append_record(tampered, record);
    }
    r = call({"replay", tampered});
    CHECK(r.code == cli::exit_replay_mismatch);
    CHECK(r.out.find("/results/optimum") != std::string::npos);

    r = call({"verify", "colorable", "--graph", "gen:complete:9", "--forbid", "K3", "--node-budget", "3"});
    CHECK(r.code == cli::exit_unknown);
    CHECK(r.out.find("unknown") != std::string::npos);

    std::filesystem::remove(path);
    std::filesystem::remove(tampered);
}

TEST_CASE("plain commands append output lines")
{
    auto path = temp_path("hfree_cli_output.jsonl");
    call({"--out", path, "count", "--graph", "K4", "--pattern", "K3"});
    call({"--out", path, "--timings", "formula", "aes-threshold", "--k", "4"});
    auto all = lines(path);
    REQUIRE(all.size() == 2);
    auto first = Json::parse(all[0]);
    CHECK(first["format"] == "hfree-output/1");
    CHECK(first["command"] == "count");
    CHECK(first["result"]["count"] == "4");
    CHECK_FALSE(first.contains("timings"));
    auto second = Json::parse(all[1]);
    CHECK(second["result"]["value"] == "5/8");
    CHECK(second.contains("timings"));
    std::filesystem::remove(path);
}

TEST_CASE("parse errors")
{
    auto r = call({});
    CHECK(r.code == cli::exit_input);
    r = call({"count", "--graph", "K4"});
    CHECK(r.code == cli::exit_input);
    r = call({"--threads", "0", "count", "--graph", "K4", "--pattern", "K3"});
    CHECK(r.code == cli::exit_input);
    r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("solve") != std::string::npos);
}
