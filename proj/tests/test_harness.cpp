#include <hfree/error.hpp>
#include <hfree/generators.hpp>
#include <hfree/graph6.hpp>
#include <hfree/harness.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace hfree;

namespace
{
    auto complete(int n) -> Graph { return generate(gen::Complete{n}); }

    auto colorable_spec(Graph g, Graph h, int k, Pattern t = Pattern::clique(2)) -> ColorableSpec
    {
        ColorableSpec spec;
        spec.g = std::move(g);
        spec.h = std::move(h);
        spec.k = k;
        spec.t = t;
        return spec;
    }

    auto verdict(const ExperimentRecord & r, const std::string & claim) -> std::string
    {
        return r.verdicts.at(claim).get<std::string>();
    }
}

TEST_CASE("extremal colorable on K6")
{
    auto r = verify_extremal_colorable(colorable_spec(complete(6), complete(3), 3));
    CHECK(r.results["optimum"] == "9");
    CHECK(verdict(r, "witness_colorable") == "holds");
    CHECK(verdict(r, "all_optima_colorable") == "holds");
    // Every K_{3,3} inside K_6: C(6,3)/2 = 10 of them.
    CHECK(r.results["optima"] == 10);
    CHECK(r.results["forbidden_edge_critical"] == true);
    CHECK(r.results["critical_vertex"] == 0);
    CHECK(r.counterexamples.empty());
    CHECK(r.id.rfind("extremal_colorable-", 0) == 0);
}

TEST_CASE("extremal colorable on K5 minus a matching on four vertices")
{
    auto g = complete(5);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    CHECK(g.min_degree() == 3);
    auto r = verify_extremal_colorable(colorable_spec(g, complete(3), 3));
    CHECK(r.results["optimum"] == "6");
    CHECK(verdict(r, "witness_colorable") != "unknown");
    for (auto & cx : r.counterexamples)
        CHECK(check_counterexample(cx).valid);
}

TEST_CASE("C5 is its own optimum and is not bipartite")
{
    auto spec = colorable_spec(generate(gen::Cycle{5}), complete(3), 3);
    spec.eps = Rational(1, 10);
    auto r = verify_extremal_colorable(spec);
    CHECK(r.results["optimum"] == "5");
    CHECK(r.results["hypothesis_met"] == false);
    CHECK(verdict(r, "witness_colorable") == "fails");
    CHECK(verdict(r, "all_optima_colorable") == "fails");
    REQUIRE(r.counterexamples.size() == 1);
    auto report = check_counterexample(r.counterexamples[0]);
    CHECK_MESSAGE(report.valid, report.reason);

    SUBCASE("tampered counterexamples are rejected")
    {
        auto cx = r.counterexamples[0];
        cx["count"] = "4";
        CHECK_FALSE(check_counterexample(cx).valid);

        cx = r.counterexamples[0];
        cx["colors"] = 3;
        CHECK_FALSE(check_counterexample(cx).valid);

        cx = r.counterexamples[0];
        Graph path(5);
        for (Vertex v = 0; v < 4; ++v)
            path.add_edge(v, v + 1);
        cx["witness"] = to_graph6(path);
        CHECK_FALSE(check_counterexample(cx).valid);

        cx = r.counterexamples[0];
        cx["host"] = to_graph6(complete(5));
        CHECK_FALSE(check_counterexample(cx).valid);

        cx = r.counterexamples[0];
        cx["claim"] = "nonsense";
        CHECK_FALSE(check_counterexample(cx).valid);
    }
}

TEST_CASE("budget exhaustion gives unknown verdicts")
{
    auto spec = colorable_spec(complete(8), complete(3), 3);
    spec.budget.node_budget = 5;
    auto r = verify_extremal_colorable(spec);
    CHECK(verdict(r, "witness_colorable") == "unknown");
    CHECK(verdict(r, "all_optima_colorable") == "unknown");
    CHECK(r.results.contains("error"));

    spec = colorable_spec(complete(6), complete(3), 3);
    spec.budget.optima_cap = 3;
    r = verify_extremal_colorable(spec);
    CHECK(verdict(r, "witness_colorable") == "holds");
    CHECK(verdict(r, "all_optima_colorable") == "unknown");
}

TEST_CASE("near colorable")
{
    auto r = verify_near_colorable(colorable_spec(complete(6), complete(3), 3));
    CHECK(r.results["deletions"] == "0");
    CHECK(verdict(r, "witness_colorable") == "holds");

    // K_4 plus a pendant vertex: chromatic number 4 and not edge-critical.
    Graph h(5);
    for (auto & e : complete(4).edges())
        h.add_edge(e.u, e.v);
    h.add_edge(3, 4);
    r = verify_near_colorable(colorable_spec(complete(6), h, 4));
    auto deletions = std::stoi(r.results["deletions"].get<std::string>());
    CHECK(deletions >= 0);
    CHECK(deletions <= r.results["witness_size"].get<int>());
    if (deletions > 0) {
        CHECK(verdict(r, "witness_colorable") == "fails");
        REQUIRE(r.counterexamples.size() == 1);
        CHECK(check_counterexample(r.counterexamples[0]).valid);
    }

    auto g = generate(gen::Cycle{5});
    r = verify_near_colorable(colorable_spec(g, complete(3), 3));
    CHECK(r.results["deletions"] == "1");
    CHECK(r.results["deletions_over_n2"] == "1/25");
}

TEST_CASE("compare_prediction")
{
    PredictionSpec spec;
    spec.n_min = 4;
    spec.n_max = 8;
    spec.k = 3;
    spec.m = 2;
    spec.h = complete(3);
    auto r = compare_prediction(spec);
    auto & rows = r.results["rows"];
    REQUIRE(rows.size() == 5);
    std::vector<std::string> exact{"4", "6", "9", "12", "16"};
    std::vector<std::string> ratio{"1", "24/25", "1", "48/49", "1"};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(rows[i]["exact"] == exact[i]);
        CHECK(rows[i]["ratio"] == ratio[i]);
    }
    CHECK(r.results["unknown_rows"] == 0);

    spec.n_min = spec.n_max = 6;
    spec.k = 4;
    spec.m = 3;
    spec.h = complete(4);
    r = compare_prediction(spec);
    CHECK(r.results["rows"][0]["exact"] == "8");
    CHECK(r.results["rows"][0]["prediction"] == "8");
    CHECK(r.results["rows"][0]["ratio"] == "1");

    spec.m = 2;
    spec.k = 3;
    spec.t = 2;
    spec.n_min = 4;
    spec.n_max = 6;
    spec.h = complete(3);
    r = compare_prediction(spec);
    CHECK(r.results["pattern"] == "K2(2)");
    CHECK(r.results["rows"][2]["prediction"] == "9");
    CHECK(r.results["rows"][2]["exact"] == "9");

    spec.budget.node_budget = 2;
    r = compare_prediction(spec);
    CHECK(r.results["unknown_rows"] == 3);
    CHECK(r.results["rows"][0]["status"] == "unknown");
}

TEST_CASE("threshold scan")
{
    ScanSpec spec;
    spec.h = complete(3);
    spec.n = 6;
    spec.fractions = {Rational(1), Rational(0)};
    spec.trials = 30;
    spec.seed = 11;
    auto r = threshold_scan(spec);
    auto & rows = r.results["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["pass_rate"] == "1");
    CHECK(rows[0]["holds"] == 30);
    CHECK(verdict(r, "all_optima_colorable@1") == "holds");
    CHECK(rows[1]["fails"].get<int>() > 0);
    CHECK(verdict(r, "all_optima_colorable@0") == "fails");
    CHECK(r.results["trials"].size() == 60);
    for (auto & trial : r.results["trials"]) {
        auto g = from_graph6(trial["graph"].get<std::string>());
        CHECK(g.min_degree() == trial["min_degree"]);
        if (trial["fraction"] == "1")
            CHECK(g == complete(6));
    }
    CHECK(r.counterexamples.size() == rows[1]["fails"].get<std::size_t>());
    for (auto & cx : r.counterexamples)
        CHECK(check_counterexample(cx).valid);

    spec.budget.node_budget = 3;
    spec.fractions = {Rational(1)};
    spec.trials = 2;
    r = threshold_scan(spec);
    CHECK(r.results["rows"][0]["unknown"] == 2);
    CHECK(r.results["rows"][0]["pass_rate"].is_null());
    CHECK(verdict(r, "all_optima_colorable@1") == "unknown");

    spec.fractions = {Rational(3, 2)};
    CHECK_THROWS_AS(threshold_scan(spec), InvalidArgument);
}

TEST_CASE("dichotomy on K6")
{
    DichotomySpec spec;
    spec.g = complete(6);
    spec.k = 3;
    spec.t = Pattern::clique(2);
    spec.gamma = Rational(1, 2);
    auto r = verify_dichotomy(spec);
    CHECK(r.results["optimum"] == "9");
    CHECK(r.results["subgraphs"].get<int>() > 0);
    auto & frontier = r.results["frontier"];
    REQUIRE_FALSE(frontier.empty());
    // Distance 0 is reached by the optimum itself.
    CHECK(frontier[0]["distance"] == "0");
    CHECK(frontier[0]["max_ratio"] == "1");
    for (auto & cx : r.counterexamples)
        CHECK(check_counterexample(cx).valid);
    CHECK(r.counterexamples.size() == std::min<std::size_t>(5, r.results["neither"].get<std::size_t>()));
    if (r.results["neither"].get<int>() > 0)
        CHECK(verdict(r, "dichotomy") == "fails");
    else
        CHECK(verdict(r, "dichotomy") == "holds");

    spec.maximal_only = false;
    spec.g = generate(gen::Cycle{5});
    r = verify_dichotomy(spec);
    // Includes the edgeless subgraph with ratio 0.
    CHECK(r.results["subgraphs"] == 32);
    CHECK(r.results["small_ratio"].get<int>() > 0);

    spec.gamma = Rational(1, 10);
    spec.tolerance = 0;
    r = verify_dichotomy(spec);
    // C5 itself: ratio 1, distance 1.
    CHECK(verdict(r, "dichotomy") == "fails");
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK(check_counterexample(r.counterexamples[0]).valid);

    spec.t = Pattern::blowup(2, 2);
    spec.k = 4;
    CHECK_THROWS_AS(verify_dichotomy(spec), InvalidArgument);
}

TEST_CASE("records round-trip and replay identically")
{
    ScanSpec scan;
    scan.h = complete(3);
    scan.n = 6;
    scan.fractions = {Rational(3, 4), Rational(1, 2)};
    scan.trials = 8;
    scan.seed = 3;
    auto record = threshold_scan(scan, {1, true});
    CHECK(record.timings.has_value());
    auto line = to_line(record);
    auto parsed = parse_record(line);
    CHECK(to_line(parsed) == line);

    for (int threads : {1, 8}) {
        auto report = replay(parsed, {threads, false});
        CHECK(report.identical);
        CHECK(report.differences.empty());
    }
    auto one = threshold_scan(scan, {1, false});
    auto eight = threshold_scan(scan, {8, false});
    CHECK(to_line(one) == to_line(eight));

    auto tampered = parsed;
    tampered.results["rows"][0]["holds"] = 99;
    auto report = replay(tampered);
    CHECK_FALSE(report.identical);
    REQUIRE(report.differences.size() == 1);
    CHECK(report.differences[0] == "/results/rows/0/holds");

    CHECK_THROWS_AS(parse_record("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_record("{\"format\":\"other\"}"), InvalidArgument);
    CHECK_THROWS_AS(run_record_spec("nope", Json::object()), InvalidArgument);
    CHECK_THROWS_AS(run_record_spec("prediction", Json::object()), InvalidArgument);
}

TEST_CASE("every record kind replays")
{
    std::vector<ExperimentRecord> records;
    records.push_back(verify_extremal_colorable(colorable_spec(generate(gen::Cycle{5}), complete(3), 3)));
    records.push_back(verify_near_colorable(colorable_spec(complete(5), complete(3), 3)));
    PredictionSpec prediction;
    prediction.n_min = 3;
    prediction.n_max = 5;
    prediction.h = complete(3);
    records.push_back(compare_prediction(prediction));
    DichotomySpec dichotomy;
    dichotomy.g = complete(5);
    records.push_back(verify_dichotomy(dichotomy));

    auto path = (std::filesystem::temp_directory_path() / "hfree-records-test.jsonl").string();
    std::remove(path.c_str());
    for (auto & r : records)
        append_record(path, r);
    auto loaded = read_records(path);
    REQUIRE(loaded.size() == records.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(to_line(loaded[i]) == to_line(records[i]));
        CHECK(replay(loaded[i], {8, false}).identical);
    }
    std::remove(path.c_str());
}

TEST_CASE("experiment ids depend only on kind and spec")
{
    auto a = Json{{"x", 1}};
    auto b = Json{{"x", 2}};
    CHECK(experiment_id("k", a) == experiment_id("k", a));
    CHECK(experiment_id("k", a) != experiment_id("k", b));
    CHECK(experiment_id("k", a).size() == 2 + 16);
}
