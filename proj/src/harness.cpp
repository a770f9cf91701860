#include <hfree/coloring.hpp>
#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/formulas.hpp>
#include <hfree/generators.hpp>
#include <hfree/graph6.hpp>
#include <hfree/harness.hpp>
#include <hfree/partite.hpp>
#include <hfree/rng.hpp>
#include <hfree/solver.hpp>

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace hfree
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto verdict_of(Tri answer) -> Verdict
        {
            switch (answer) {
                case Tri::yes: return Verdict::holds;
                case Tri::no: return Verdict::fails;
                case Tri::unknown: return Verdict::unknown;
            }
            return Verdict::unknown;
        }

        /// fails beats unknown beats holds.
        auto combine(Verdict a, Verdict b) -> Verdict
        {
            if (a == Verdict::fails || b == Verdict::fails)
                return Verdict::fails;
            if (a == Verdict::unknown || b == Verdict::unknown)
                return Verdict::unknown;
            return Verdict::holds;
        }

        auto verdict_json(Verdict v) -> Json { return std::string(to_string(v)); }

        auto rational_json(const Rational & value) -> Json { return to_string(value); }

        auto rational_from(const Json & json) -> Rational { return parse_rational(json.get<std::string>()); }

        auto budget_json(const SolverBudget & budget) -> Json
        {
            Json j = Json::object();
            j["node_budget"] = budget.node_budget;
            j["edge_budget"] = budget.edge_budget;
            j["optima_cap"] = budget.optima_cap;
            return j;
        }

        auto budget_from(const Json & json) -> SolverBudget
        {
            SolverBudget budget;
            budget.node_budget = json.at("node_budget").get<std::uint64_t>();
            budget.edge_budget = json.at("edge_budget").get<std::size_t>();
            budget.optima_cap = json.at("optima_cap").get<std::size_t>();
            return budget;
        }

        auto graph_from(const Json & json) -> Graph { return from_graph6(json.get<std::string>()); }

        auto parse_edge_list(const std::string & text, int n) -> Graph
        {
            Graph g(n);
            std::size_t pos = 0;
            while (pos < text.size()) {
                auto end = text.find(' ', pos);
                auto token = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
                if (! token.empty()) {
                    auto dash = token.find('-');
                    if (dash == std::string::npos)
                        throw InvalidArgument("malformed edge '" + token + "'");
                    g.add_edge(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
                }
                if (end == std::string::npos)
                    break;
                pos = end + 1;
            }
            return g;
        }

        auto solve_options(const SolverBudget & budget, bool collect) -> SolveOptions
        {
            SolveOptions options;
            options.node_budget = budget.node_budget;
            options.branch_and_bound_edge_budget = budget.edge_budget;
            options.collect_optima = collect;
            options.optima_cap = budget.optima_cap;
            return options;
        }

        struct Exact
        {
            std::optional<SolveResult> result;
            std::string error;
        };

        auto solve_exact(const Graph & g, const Pattern & t, const Graph & h, const SolverBudget & budget, bool collect)
            -> Exact
        {
            try {
                return {max_hfree_subgraph(g, t, h, solve_options(budget, collect)), {}};
            }
            catch (const BudgetExceeded & e) {
                return {std::nullopt, e.what()};
            }
        }

        auto colorable(const Graph & g, int colors) -> Verdict
        {
            return verdict_of(is_k_colorable(g, colors).answer);
        }

        auto colorable_counterexample(const Graph & host, const Graph & h, const Pattern & t, const SolveResult & result,
            const std::vector<Edge> & edges, int colors) -> Json
        {
            Json cx = Json::object();
            cx["claim"] = "colorable";
            cx["host"] = to_graph6(host);
            cx["forbidden"] = to_graph6(h);
            cx["pattern"] = t.literal();
            cx["witness"] = to_graph6(Graph::from_edges(host.order(), edges));
            cx["edges"] = format_edges(edges);
            cx["count"] = to_string(result.best_count);
            cx["colors"] = colors;
            return cx;
        }

        /// Calls work(i) for i in [0, count) on up to threads workers and rethrows the
        /// first failure by index.
        template <typename Work>
        void parallel_for(std::size_t count, int threads, Work work)
        {
            std::vector<std::exception_ptr> errors(count);
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i; (i = next++) < count;) {
                    try {
                        work(i);
                    }
                    catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            };
            auto workers = static_cast<std::size_t>(std::max(1, threads));
            workers = std::min(workers, std::max<std::size_t>(count, 1));
            if (workers <= 1)
                worker();
            else {
                std::vector<std::thread> pool;
                for (std::size_t w = 0; w < workers; ++w)
                    pool.emplace_back(worker);
                for (auto & thread : pool)
                    thread.join();
            }
            for (auto & error : errors)
                if (error)
                    std::rethrow_exception(error);
        }

        void finish(ExperimentRecord & record, const RunOptions & options, Clock::time_point start)
        {
            record.id = experiment_id(record.kind, record.spec);
            if (options.timings)
                record.timings = Json{{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
        }

        auto hypothesis_met(const Graph & g, const Rational & eps) -> bool
        {
            // min degree >= (1 - eps) n
            return Rational(g.min_degree()) >= (1 - eps) * g.order();
        }

        auto deletion_distance(const Graph & g, int parts) -> std::pair<Count, bool>
        {
            PartiteOptions options;
            bool exact = g.order() <= options.exact_vertex_budget;
            if (! exact)
                options.mode = PartiteMode::local_search;
            auto best = max_partite(g, parts, Pattern::clique(2), options);
            return {Count(g.size()) - best.count, exact};
        }

        // Brute-force routines for the standalone checker.

        auto brute_embeds(const Graph & g, const Graph & h, std::vector<Vertex> & image, Mask used) -> bool
        {
            auto i = static_cast<Vertex>(image.size());
            if (i == h.order())
                return true;
            for (Vertex x = 0; x < g.order(); ++x) {
                if (used & bit(x))
                    continue;
                bool ok = true;
                for (Vertex j = 0; j < i && ok; ++j)
                    if (h.has_edge(i, j) && ! g.has_edge(x, image[static_cast<std::size_t>(j)]))
                        ok = false;
                if (! ok)
                    continue;
                image.push_back(x);
                if (brute_embeds(g, h, image, used | bit(x)))
                    return true;
                image.pop_back();
            }
            return false;
        }

        auto brute_contains(const Graph & g, const Graph & h) -> bool
        {
            std::vector<Vertex> image;
            return brute_embeds(g, h, image, 0);
        }

        auto brute_colorable(const Graph & g, int colors, std::vector<int> & assigned) -> bool
        {
            auto v = static_cast<Vertex>(assigned.size());
            if (v == g.order())
                return true;
            int used = 0;
            for (int c : assigned)
                used = std::max(used, c + 1);
            for (int c = 0; c < std::min(colors, used + 1); ++c) {
                bool ok = true;
                for (Vertex u = 0; u < v && ok; ++u)
                    if (assigned[static_cast<std::size_t>(u)] == c && g.has_edge(u, v))
                        ok = false;
                if (! ok)
                    continue;
                assigned.push_back(c);
                if (brute_colorable(g, colors, assigned))
                    return true;
                assigned.pop_back();
            }
            return false;
        }

        /// Fewest deletions making g parts-partite, over all parts^n assignments.
        auto brute_distance(const Graph & g, int parts) -> std::size_t
        {
            auto edges = g.edges();
            std::vector<int> assignment(static_cast<std::size_t>(g.order()), 0);
            std::size_t best = edges.size();
            while (true) {
                std::size_t inside = 0;
                for (auto & e : edges)
                    if (assignment[static_cast<std::size_t>(e.u)] == assignment[static_cast<std::size_t>(e.v)])
                        ++inside;
                best = std::min(best, inside);
                std::size_t i = 0;
                while (i < assignment.size() && ++assignment[i] == parts)
                    assignment[i++] = 0;
                if (i == assignment.size())
                    break;
            }
            return best;
        }

        auto independent_optimum(const Graph & host, const Pattern & t, const Graph & h) -> Count
        {
            SolveOptions options;
            options.strategy = Strategy::branch_and_bound;
            options.forward_check = false;
            options.critical_neighbourhood = false;
            options.heuristic_incumbent = false;
            return max_hfree_subgraph(host, t, h, options).best_count;
        }

        auto fail(std::string reason) -> CheckReport { return {false, std::move(reason)}; }

        auto subgraph_of(const Graph & sub, const Graph & host) -> bool
        {
            if (sub.order() != host.order())
                return false;
            for (auto & e : sub.edges())
                if (! host.has_edge(e.u, e.v))
                    return false;
            return true;
        }

        auto check_colorable(const Json & cx) -> CheckReport
        {
            auto host = graph_from(cx.at("host"));
            auto h = graph_from(cx.at("forbidden"));
            auto t = parse_pattern(cx.at("pattern").get<std::string>());
            auto witness = graph_from(cx.at("witness"));
            auto colors = cx.at("colors").get<int>();
            auto count = Count(cx.at("count").get<std::string>());
            if (parse_edge_list(cx.at("edges").get<std::string>(), host.order()) != witness)
                return fail("edge list and graph6 witness disagree");
            if (! subgraph_of(witness, host))
                return fail("witness is not a subgraph of the host");
            if (brute_contains(witness, h))
                return fail("witness contains the forbidden graph");
            if (count_pattern_generic(witness, t.graph()) != count)
                return fail("witness count differs from the claimed count");
            std::vector<int> assigned;
            if (brute_colorable(witness, colors, assigned))
                return fail("witness is " + std::to_string(colors) + "-colourable");
            if (independent_optimum(host, t, h) != count)
                return fail("claimed count is not the optimum");
            return {true, "witness is an optimum and not " + std::to_string(colors) + "-colourable"};
        }

        auto check_dichotomy(const Json & cx) -> CheckReport
        {
            auto host = graph_from(cx.at("host"));
            auto k = cx.at("k").get<int>();
            auto t = parse_pattern(cx.at("pattern").get<std::string>());
            auto sub = graph_from(cx.at("subgraph"));
            auto optimum = Count(cx.at("optimum").get<std::string>());
            auto gamma = rational_from(cx.at("gamma"));
            auto tolerance = rational_from(cx.at("tolerance"));
            auto kk = generate(gen::Complete{k});
            if (! subgraph_of(sub, host))
                return fail("subgraph is not contained in the host");
            if (brute_contains(sub, kk))
                return fail("subgraph contains K_" + std::to_string(k));
            if (independent_optimum(host, t, kk) != optimum)
                return fail("claimed optimum is wrong");
            auto count = count_pattern_generic(sub, t.graph());
            if (optimum > 0 && Rational(count, optimum) <= gamma)
                return fail("copy ratio is at most gamma");
            if (optimum == 0)
                return fail("optimum is zero, so the ratio is not above gamma");
            if (host.order() > 10)
                return fail("host too large for the brute-force distance");
            auto n = host.order();
            if (Rational(brute_distance(sub, k - 1)) <= tolerance * n * n)
                return fail("deletion distance is within tolerance");
            return {true, "neither alternative holds"};
        }

        auto maximal_kk_free(const Graph & g, const Graph & sub, int k) -> bool
        {
            for (auto & e : g.edges()) {
                if (sub.has_edge(e.u, e.v))
                    continue;
                if (count_cliques_within(sub, sub.row(e.u) & sub.row(e.v), k - 2) == 0)
                    return false;
            }
            return true;
        }

        /// K_k-free spanning subgraphs of g, include-first over sorted edges.
        class FreeSubgraphs
        {
        public:
            FreeSubgraphs(const Graph & g, int k, bool maximal_only, std::uint64_t budget) :
                _g(g),
                _edges(g.edges()),
                _k(k),
                _maximal_only(maximal_only),
                _budget(budget),
                _current(g.order())
            {
            }

            auto run() -> std::vector<Graph>
            {
                visit(0);
                return std::move(_found);
            }

        private:
            void visit(std::size_t i)
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded("subgraph enumeration exceeded " + std::to_string(_budget) + " nodes");
                if (i == _edges.size()) {
                    if (! _maximal_only || maximal_kk_free(_g, _current, _k))
                        _found.push_back(_current);
                    return;
                }
                auto e = _edges[i];
                if (count_cliques_within(_current, _current.row(e.u) & _current.row(e.v), _k - 2) == 0) {
                    _current.add_edge(e.u, e.v);
                    visit(i + 1);
                    _current.remove_edge(e.u, e.v);
                }
                visit(i + 1);
            }

            const Graph & _g;
            std::vector<Edge> _edges;
            int _k;
            bool _maximal_only;
            std::uint64_t _budget;
            std::uint64_t _nodes = 0;
            Graph _current;
            std::vector<Graph> _found;
        };
    }

    auto to_string(Verdict verdict) -> std::string_view
    {
        switch (verdict) {
            case Verdict::holds: return "holds";
            case Verdict::fails: return "fails";
            case Verdict::unknown: return "unknown";
        }
        return "?";
    }

    auto to_json(const ExperimentRecord & record) -> Json
    {
        Json j = Json::object();
        j["format"] = std::string(record_format);
        j["kind"] = record.kind;
        j["id"] = record.id;
        j["spec"] = record.spec;
        j["results"] = record.results;
        j["verdicts"] = record.verdicts;
        j["counterexamples"] = record.counterexamples;
        if (record.timings)
            j["timings"] = *record.timings;
        return j;
    }

    auto record_from_json(const Json & json) -> ExperimentRecord
    {
        if (json.value("format", "") != record_format)
            throw InvalidArgument("record format is not " + std::string(record_format));
        ExperimentRecord record;
        record.kind = json.at("kind").get<std::string>();
        record.id = json.at("id").get<std::string>();
        record.spec = json.at("spec");
        record.results = json.at("results");
        record.verdicts = json.at("verdicts");
        record.counterexamples = json.at("counterexamples");
        if (json.contains("timings"))
            record.timings = json.at("timings");
        return record;
    }

    auto to_line(const ExperimentRecord & record) -> std::string
    {
        return to_json(record).dump();
    }

    auto parse_record(std::string_view line) -> ExperimentRecord
    {
        Json json;
        try {
            json = Json::parse(line);
        }
        catch (const Json::parse_error & e) {
            throw InvalidArgument(std::string("malformed record: ") + e.what());
        }
        try {
            return record_from_json(json);
        }
        catch (const Json::exception & e) {
            throw InvalidArgument(std::string("malformed record: ") + e.what());
        }
    }

    auto experiment_id(std::string_view kind, const Json & spec) -> std::string
    {
        std::uint64_t hash = 0xcbf29ce484222325ULL;
        for (unsigned char c : spec.dump()) {
            hash ^= c;
            hash *= 0x100000001b3ULL;
        }
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
        return std::string(kind) + "-" + hex;
    }

    void append_record(const std::string & path, const ExperimentRecord & record)
    {
        static std::mutex mutex;
        auto line = to_line(record);
        std::lock_guard lock(mutex);
        std::ofstream out(path, std::ios::app);
        if (! out)
            throw Error("cannot open " + path + " for appending");
        out << line << '\n';
    }

    auto read_records(const std::string & path) -> std::vector<ExperimentRecord>
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot read " + path);
        std::vector<ExperimentRecord> records;
        for (std::string line; std::getline(in, line);)
            if (! line.empty())
                records.push_back(parse_record(line));
        return records;
    }

    auto colorable_spec_to_json(const ColorableSpec & spec) -> Json
    {
        Json j = Json::object();
        j["graph"] = to_graph6(spec.g);
        j["forbidden"] = to_graph6(spec.h);
        j["pattern"] = spec.t.literal();
        j["k"] = spec.k;
        j["eps"] = rational_json(spec.eps);
        j["budget"] = budget_json(spec.budget);
        return j;
    }

    auto colorable_spec_from_json(const Json & json) -> ColorableSpec
    {
        ColorableSpec spec;
        spec.g = graph_from(json.at("graph"));
        spec.h = graph_from(json.at("forbidden"));
        spec.t = parse_pattern(json.at("pattern").get<std::string>());
        spec.k = json.at("k").get<int>();
        spec.eps = rational_from(json.at("eps"));
        spec.budget = budget_from(json.at("budget"));
        return spec;
    }

    auto prediction_spec_to_json(const PredictionSpec & spec) -> Json
    {
        Json j = Json::object();
        j["n_min"] = spec.n_min;
        j["n_max"] = spec.n_max;
        j["k"] = spec.k;
        j["m"] = spec.m;
        j["t"] = spec.t;
        j["forbidden"] = to_graph6(spec.h);
        j["budget"] = budget_json(spec.budget);
        return j;
    }

    auto prediction_spec_from_json(const Json & json) -> PredictionSpec
    {
        PredictionSpec spec;
        spec.n_min = json.at("n_min").get<int>();
        spec.n_max = json.at("n_max").get<int>();
        spec.k = json.at("k").get<int>();
        spec.m = json.at("m").get<int>();
        spec.t = json.at("t").get<int>();
        spec.h = graph_from(json.at("forbidden"));
        spec.budget = budget_from(json.at("budget"));
        return spec;
    }

    auto scan_spec_to_json(const ScanSpec & spec) -> Json
    {
        Json j = Json::object();
        j["forbidden"] = to_graph6(spec.h);
        j["pattern"] = spec.t.literal();
        j["k"] = spec.k;
        j["n"] = spec.n;
        j["fractions"] = Json::array();
        for (auto & f : spec.fractions)
            j["fractions"].push_back(rational_json(f));
        j["trials"] = spec.trials;
        j["seed"] = spec.seed;
        j["budget"] = budget_json(spec.budget);
        return j;
    }

    auto scan_spec_from_json(const Json & json) -> ScanSpec
    {
        ScanSpec spec;
        spec.h = graph_from(json.at("forbidden"));
        spec.t = parse_pattern(json.at("pattern").get<std::string>());
        spec.k = json.at("k").get<int>();
        spec.n = json.at("n").get<int>();
        for (auto & f : json.at("fractions"))
            spec.fractions.push_back(rational_from(f));
        spec.trials = json.at("trials").get<int>();
        spec.seed = json.at("seed").get<std::uint64_t>();
        spec.budget = budget_from(json.at("budget"));
        return spec;
    }

    auto dichotomy_spec_to_json(const DichotomySpec & spec) -> Json
    {
        Json j = Json::object();
        j["graph"] = to_graph6(spec.g);
        j["k"] = spec.k;
        j["pattern"] = spec.t.literal();
        j["gamma"] = rational_json(spec.gamma);
        j["tolerance"] = rational_json(spec.tolerance);
        j["maximal_only"] = spec.maximal_only;
        j["enumeration_budget"] = spec.enumeration_budget;
        j["budget"] = budget_json(spec.budget);
        return j;
    }

    auto dichotomy_spec_from_json(const Json & json) -> DichotomySpec
    {
        DichotomySpec spec;
        spec.g = graph_from(json.at("graph"));
        spec.k = json.at("k").get<int>();
        spec.t = parse_pattern(json.at("pattern").get<std::string>());
        spec.gamma = rational_from(json.at("gamma"));
        spec.tolerance = rational_from(json.at("tolerance"));
        spec.maximal_only = json.at("maximal_only").get<bool>();
        spec.enumeration_budget = json.at("enumeration_budget").get<std::uint64_t>();
        spec.budget = budget_from(json.at("budget"));
        return spec;
    }

    auto verify_extremal_colorable(const ColorableSpec & spec, const RunOptions & options) -> ExperimentRecord
    {
        auto start = Clock::now();
        if (spec.k < 2)
            throw InvalidArgument("verify: k must be at least 2");
        ExperimentRecord record;
        record.kind = "extremal_colorable";
        record.spec = colorable_spec_to_json(spec);
        auto & results = record.results;

        auto criticality = is_edge_critical(spec.h);
        auto critical = critical_vertex(spec.h);
        results["n"] = spec.g.order();
        results["min_degree"] = spec.g.min_degree();
        results["hypothesis_met"] = hypothesis_met(spec.g, spec.eps);
        results["chi_forbidden"] = criticality.chromatic_number;
        results["chi_matches_k"] = criticality.chromatic_number == spec.k;
        results["forbidden_edge_critical"] = criticality.critical;
        results["critical_vertex"] = critical ? Json(*critical) : Json(nullptr);

        auto exact = solve_exact(spec.g, spec.t, spec.h, spec.budget, true);
        if (! exact.result) {
            results["error"] = exact.error;
            record.verdicts["witness_colorable"] = verdict_json(Verdict::unknown);
            record.verdicts["all_optima_colorable"] = verdict_json(Verdict::unknown);
            finish(record, options, start);
            return record;
        }
        auto & solved = *exact.result;
        auto witness = Graph::from_edges(spec.g.order(), solved.best_edges);
        results["optimum"] = to_string(solved.best_count);
        results["proof"] = std::string(to_string(solved.proof));
        results["witness"] = to_graph6(witness);
        results["witness_edges"] = format_edges(solved.best_edges);
        results["optima"] = solved.optima.size();
        results["optima_truncated"] = solved.optima_truncated;

        auto witness_verdict = colorable(witness, spec.k - 1);
        if (witness_verdict == Verdict::fails)
            record.counterexamples.push_back(
                colorable_counterexample(spec.g, spec.h, spec.t, solved, solved.best_edges, spec.k - 1));

        auto all = solved.optima_truncated ? Verdict::unknown : Verdict::holds;
        std::size_t failing = 0;
        for (auto & optimum : solved.optima) {
            auto v = colorable(Graph::from_edges(spec.g.order(), optimum), spec.k - 1);
            all = combine(all, v);
            if (v == Verdict::fails) {
                ++failing;
                if (witness_verdict != Verdict::fails && failing == 1)
                    record.counterexamples.push_back(
                        colorable_counterexample(spec.g, spec.h, spec.t, solved, optimum, spec.k - 1));
            }
        }
        results["optima_not_colorable"] = failing;
        record.verdicts["witness_colorable"] = verdict_json(witness_verdict);
        record.verdicts["all_optima_colorable"] = verdict_json(all);
        finish(record, options, start);
        return record;
    }

    auto verify_near_colorable(const ColorableSpec & spec, const RunOptions & options) -> ExperimentRecord
    {
        auto start = Clock::now();
        if (spec.k < 2)
            throw InvalidArgument("verify: k must be at least 2");
        ExperimentRecord record;
        record.kind = "near_colorable";
        record.spec = colorable_spec_to_json(spec);
        auto & results = record.results;
        results["n"] = spec.g.order();
        results["min_degree"] = spec.g.min_degree();
        results["hypothesis_met"] = hypothesis_met(spec.g, spec.eps);

        auto exact = solve_exact(spec.g, spec.t, spec.h, spec.budget, false);
        if (! exact.result) {
            results["error"] = exact.error;
            record.verdicts["witness_colorable"] = verdict_json(Verdict::unknown);
            finish(record, options, start);
            return record;
        }
        auto & solved = *exact.result;
        auto witness = Graph::from_edges(spec.g.order(), solved.best_edges);
        auto [deletions, exact_distance] = deletion_distance(witness, spec.k - 1);
        auto n = spec.g.order();
        results["optimum"] = to_string(solved.best_count);
        results["witness"] = to_graph6(witness);
        results["witness_edges"] = format_edges(solved.best_edges);
        results["witness_size"] = witness.size();
        results["deletions"] = to_string(deletions);
        results["deletions_exact"] = exact_distance;
        results["deletions_over_n2"] = n == 0 ? rational_json(0) : rational_json(Rational(deletions, Count(n) * n));

        auto verdict = deletions == 0 ? Verdict::holds : exact_distance ? Verdict::fails : Verdict::unknown;
        if (verdict == Verdict::fails)
            record.counterexamples.push_back(
                colorable_counterexample(spec.g, spec.h, spec.t, solved, solved.best_edges, spec.k - 1));
        record.verdicts["witness_colorable"] = verdict_json(verdict);
        finish(record, options, start);
        return record;
    }

    auto compare_prediction(const PredictionSpec & spec, const RunOptions & options) -> ExperimentRecord
    {
        auto start = Clock::now();
        if (spec.n_min < 0 || spec.n_max < spec.n_min)
            throw InvalidArgument("compare_prediction: empty or negative n range");
        auto t = spec.t == 1 ? Pattern::clique(spec.m) : Pattern::blowup(spec.m, spec.t);
        // Validates the parameters before any solving.
        if (spec.t == 1)
            predict_ex_clique(0, spec.k, spec.m);
        else
            predict_ex_blowup(0, spec.m, spec.t);

        ExperimentRecord record;
        record.kind = "prediction";
        record.spec = prediction_spec_to_json(spec);
        auto count = static_cast<std::size_t>(spec.n_max - spec.n_min + 1);
        std::vector<Json> rows(count);
        parallel_for(count, options.threads, [&](std::size_t i) {
            int n = spec.n_min + static_cast<int>(i);
            auto prediction = spec.t == 1 ? predict_ex_clique(n, spec.k, spec.m) : predict_ex_blowup(n, spec.m, spec.t);
            Json row = Json::object();
            row["n"] = n;
            row["prediction"] = rational_json(prediction.value);
            auto exact = solve_exact(generate(gen::Complete{n}), t, spec.h, spec.budget, false);
            if (exact.result) {
                row["status"] = "exact";
                row["exact"] = to_string(exact.result->best_count);
                row["ratio"] = prediction.value == 0 ? Json(nullptr)
                                                     : rational_json(Rational(exact.result->best_count) / prediction.value);
            }
            else {
                row["status"] = "unknown";
                row["error"] = exact.error;
            }
            rows[i] = std::move(row);
        });
        record.results["pattern"] = t.literal();
        record.results["rows"] = Json(rows);
        std::size_t unknown = 0;
        for (auto & row : rows)
            unknown += row["status"] == "unknown";
        record.results["unknown_rows"] = unknown;
        finish(record, options, start);
        return record;
    }

    auto threshold_scan(const ScanSpec & spec, const RunOptions & options) -> ExperimentRecord
    {
        auto start = Clock::now();
        if (spec.k < 2)
            throw InvalidArgument("scan: k must be at least 2");
        if (spec.trials < 0 || spec.n < 0)
            throw InvalidArgument("scan: trials and n must be non-negative");
        for (auto & f : spec.fractions)
            if (f < 0 || f > 1)
                throw InvalidArgument("scan: fractions must lie in [0, 1]");

        ExperimentRecord record;
        record.kind = "threshold_scan";
        record.spec = scan_spec_to_json(spec);

        auto trials = static_cast<std::size_t>(spec.trials);
        auto total = spec.fractions.size() * trials;
        std::vector<Json> slots(total);
        std::vector<Verdict> verdicts(total, Verdict::unknown);
        std::vector<std::optional<Json>> witnesses(total);
        parallel_for(total, options.threads, [&](std::size_t index) {
            const auto & phi = spec.fractions[index / trials];
            auto seed = derive_seed(spec.seed, index);
            auto g = min_degree_random(spec.n, 1 - phi, seed);
            Json trial = Json::object();
            trial["fraction"] = rational_json(phi);
            trial["trial"] = index % trials;
            trial["seed"] = seed;
            trial["graph"] = to_graph6(g);
            trial["min_degree"] = g.min_degree();
            auto exact = solve_exact(g, spec.t, spec.h, spec.budget, true);
            auto verdict = Verdict::unknown;
            if (exact.result) {
                auto & solved = *exact.result;
                trial["optimum"] = to_string(solved.best_count);
                trial["optima"] = solved.optima.size();
                verdict = solved.optima_truncated ? Verdict::unknown : Verdict::holds;
                for (auto & optimum : solved.optima) {
                    auto v = colorable(Graph::from_edges(g.order(), optimum), spec.k - 1);
                    if (v == Verdict::fails && ! witnesses[index])
                        witnesses[index] = colorable_counterexample(g, spec.h, spec.t, solved, optimum, spec.k - 1);
                    verdict = combine(verdict, v);
                }
            }
            else
                trial["error"] = exact.error;
            trial["verdict"] = verdict_json(verdict);
            verdicts[index] = verdict;
            slots[index] = std::move(trial);
        });

        Json rows = Json::array();
        for (std::size_t f = 0; f < spec.fractions.size(); ++f) {
            std::size_t holds = 0, fails = 0, unknown = 0;
            for (std::size_t i = 0; i < trials; ++i)
                switch (verdicts[f * trials + i]) {
                    case Verdict::holds: ++holds; break;
                    case Verdict::fails: ++fails; break;
                    case Verdict::unknown: ++unknown; break;
                }
            Json row = Json::object();
            row["fraction"] = rational_json(spec.fractions[f]);
            row["floor"] = min_degree_floor(spec.n, 1 - spec.fractions[f]);
            row["holds"] = holds;
            row["fails"] = fails;
            row["unknown"] = unknown;
            row["pass_rate"] = holds + fails == 0 ? Json(nullptr) : rational_json(Rational(holds, holds + fails));
            auto overall = unknown ? Verdict::unknown : Verdict::holds;
            if (fails)
                overall = Verdict::fails;
            record.verdicts["all_optima_colorable@" + to_string(spec.fractions[f])] = verdict_json(overall);
            rows.push_back(std::move(row));
        }
        record.results["rows"] = std::move(rows);
        record.results["trials"] = Json(slots);
        for (auto & w : witnesses)
            if (w)
                record.counterexamples.push_back(*w);
        finish(record, options, start);
        return record;
    }

    auto verify_dichotomy(const DichotomySpec & spec, const RunOptions & options) -> ExperimentRecord
    {
        auto start = Clock::now();
        if (spec.k < 3)
            throw InvalidArgument("dichotomy: k must be at least 3");
        if (spec.t.kind() != Pattern::Kind::clique && spec.t.kind() != Pattern::Kind::blowup)
            throw InvalidArgument("dichotomy: the pattern must be K_m or K_m(t)");
        int m = spec.t.m(), t = spec.t.kind() == Pattern::Kind::clique ? 1 : spec.t.t();
        if (spec.k != m + 1 && t != 1)
            throw InvalidArgument("dichotomy: needs k = m + 1 or t = 1");

        ExperimentRecord record;
        record.kind = "dichotomy";
        record.spec = dichotomy_spec_to_json(spec);
        auto & results = record.results;
        auto kk = generate(gen::Complete{spec.k});
        auto n = spec.g.order();

        auto exact = solve_exact(spec.g, spec.t, kk, spec.budget, false);
        if (! exact.result) {
            results["error"] = exact.error;
            record.verdicts["dichotomy"] = verdict_json(Verdict::unknown);
            finish(record, options, start);
            return record;
        }
        auto optimum = exact.result->best_count;
        results["optimum"] = to_string(optimum);

        std::vector<Graph> subgraphs;
        try {
            subgraphs = FreeSubgraphs(spec.g, spec.k, spec.maximal_only, spec.enumeration_budget).run();
        }
        catch (const BudgetExceeded & e) {
            results["error"] = e.what();
            record.verdicts["dichotomy"] = verdict_json(Verdict::unknown);
            finish(record, options, start);
            return record;
        }

        struct Entry
        {
            Rational ratio;
            Count distance;
            bool exact;
        };
        std::vector<Entry> entries(subgraphs.size());
        parallel_for(subgraphs.size(), options.threads, [&](std::size_t i) {
            auto count = count_pattern(subgraphs[i], spec.t);
            auto [distance, exact_distance] = deletion_distance(subgraphs[i], spec.k - 1);
            entries[i] = {optimum == 0 ? Rational(0) : Rational(count, optimum), distance, exact_distance};
        });

        Rational limit = spec.tolerance * n * n;
        std::size_t first = 0, second = 0, neither = 0, inexact = 0;
        std::map<Count, Rational> frontier;
        auto verdict = Verdict::holds;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto & e = entries[i];
            bool case1 = e.ratio <= spec.gamma;
            bool case2 = Rational(e.distance) <= limit;
            first += case1;
            second += case2;
            auto [it, fresh] = frontier.emplace(e.distance, e.ratio);
            if (! fresh && e.ratio > it->second)
                it->second = e.ratio;
            if (case1 || case2)
                continue;
            if (! e.exact) {
                // A local-search distance is only an upper bound.
                ++inexact;
                verdict = combine(verdict, Verdict::unknown);
                continue;
            }
            ++neither;
            verdict = Verdict::fails;
            if (record.counterexamples.size() < 5) {
                Json cx = Json::object();
                cx["claim"] = "dichotomy";
                cx["host"] = to_graph6(spec.g);
                cx["k"] = spec.k;
                cx["pattern"] = spec.t.literal();
                cx["subgraph"] = to_graph6(subgraphs[i]);
                cx["edges"] = format_edges(subgraphs[i].edges());
                cx["optimum"] = to_string(optimum);
                cx["ratio"] = rational_json(e.ratio);
                cx["distance"] = to_string(e.distance);
                cx["gamma"] = rational_json(spec.gamma);
                cx["tolerance"] = rational_json(spec.tolerance);
                record.counterexamples.push_back(std::move(cx));
            }
        }
        Json front = Json::array();
        for (auto & [distance, ratio] : frontier)
            front.push_back(Json{{"distance", to_string(distance)}, {"max_ratio", rational_json(ratio)}});
        results["subgraphs"] = subgraphs.size();
        results["small_ratio"] = first;
        results["near_partite"] = second;
        results["neither"] = neither;
        results["undecided"] = inexact;
        results["frontier"] = std::move(front);
        record.verdicts["dichotomy"] = verdict_json(verdict);
        finish(record, options, start);
        return record;
    }

    auto run_record_spec(std::string_view kind, const Json & spec, const RunOptions & options) -> ExperimentRecord
    {
        try {
            if (kind == "extremal_colorable")
                return verify_extremal_colorable(colorable_spec_from_json(spec), options);
            if (kind == "near_colorable")
                return verify_near_colorable(colorable_spec_from_json(spec), options);
            if (kind == "prediction")
                return compare_prediction(prediction_spec_from_json(spec), options);
            if (kind == "threshold_scan")
                return threshold_scan(scan_spec_from_json(spec), options);
            if (kind == "dichotomy")
                return verify_dichotomy(dichotomy_spec_from_json(spec), options);
        }
        catch (const Json::exception & e) {
            throw InvalidArgument(std::string("malformed spec: ") + e.what());
        }
        throw InvalidArgument("unknown record kind '" + std::string(kind) + "'");
    }

    auto replay(const ExperimentRecord & record, const RunOptions & options) -> ReplayReport
    {
        ReplayReport report;
        auto quiet = options;
        quiet.timings = false;
        report.recomputed = run_record_spec(record.kind, record.spec, quiet);
        auto before = to_json(record);
        before.erase("timings");
        auto after = to_json(report.recomputed);
        for (auto & op : Json::diff(before, after))
            report.differences.push_back(op.at("path").get<std::string>());
        report.identical = report.differences.empty();
        return report;
    }

    auto check_counterexample(const Json & counterexample) -> CheckReport
    {
        try {
            auto claim = counterexample.at("claim").get<std::string>();
            if (claim == "colorable")
                return check_colorable(counterexample);
            if (claim == "dichotomy")
                return check_dichotomy(counterexample);
            return fail("unknown claim '" + claim + "'");
        }
        catch (const Json::exception & e) {
            return fail(std::string("malformed counterexample: ") + e.what());
        }
        catch (const Error & e) {
            return fail(e.what());
        }
    }
}
