#include <hfree/cli.hpp>
#include <hfree/coloring.hpp>
#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/formulas.hpp>
#include <hfree/generators.hpp>
#include <hfree/graph6.hpp>
#include <hfree/harness.hpp>
#include <hfree/partite.hpp>
#include <hfree/peel.hpp>
#include <hfree/solver.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

namespace hfree::cli
{
    namespace
    {
        struct Global
        {
            int threads = 1;
            std::string out_path;
            bool timings = false;
        };

        auto join(const std::vector<int> & values) -> std::string
        {
            std::string s;
            for (std::size_t i = 0; i < values.size(); ++i)
                s += (i ? " " : "") + std::to_string(values[i]);
            return s;
        }

        auto exact_line(const Rational & value) -> std::string
        {
            return to_string(value) + " (" + to_decimal(value) + ")";
        }

        auto verdicts_unknown(const ExperimentRecord & record) -> bool
        {
            for (auto & [claim, verdict] : record.verdicts.items())
                if (verdict == "unknown")
                    return true;
            return false;
        }

        auto split(const std::string & text, char separator) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            std::size_t start = 0;
            while (true) {
                auto at = text.find(separator, start);
                parts.push_back(text.substr(start, at == std::string::npos ? std::string::npos : at - start));
                if (at == std::string::npos)
                    return parts;
                start = at + 1;
            }
        }

        class Runner
        {
        public:
            Runner(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) :
                _args(args),
                _out(out),
                _err(err)
            {
            }

            auto run() -> int
            {
                CLI::App app("Extremal H-free subgraphs maximising copies of cliques and clique blow-ups", "hfree");
                app.require_subcommand(1);
                app.add_option("--threads", _global.threads, "Worker threads for independent trials")
                    ->check(CLI::Range(1, 256));
                app.add_option("--out", _global.out_path, "Append machine-readable JSON lines to this file");
                app.add_flag("--timings", _global.timings, "Include wall-clock timings in machine output");

                std::function<int()> action;
                define_generate(app, action);
                define_count(app, action);
                define_contains(app, action);
                define_color(app, action);
                define_solve(app, action);
                define_partite(app, action);
                define_peel(app, action);
                define_rebuild(app, action);
                define_formula(app, action);
                define_verify(app, action);
                define_scan(app, action);
                define_replay(app, action);

                std::vector<std::string> reversed(_args.begin() + (_args.empty() ? 0 : 1), _args.end());
                std::reverse(reversed.begin(), reversed.end());
                try {
                    app.parse(reversed);
                }
                catch (const CLI::CallForHelp &) {
                    _out << app.help();
                    return exit_ok;
                }
                catch (const CLI::CallForAllHelp &) {
                    _out << app.help("", CLI::AppFormatMode::All);
                    return exit_ok;
                }
                catch (const CLI::ParseError & e) {
                    _err << "error: " << e.what() << "\n";
                    return exit_input;
                }

                try {
                    return action();
                }
                catch (const BudgetExceeded & e) {
                    _err << "budget exceeded: " << e.what() << "\n";
                    return exit_unknown;
                }
                catch (const InvalidArgument & e) {
                    _err << "error: " << e.what() << "\n";
                    return exit_input;
                }
                catch (const Error & e) {
                    _err << "error: " << e.what() << "\n";
                    return exit_input;
                }
            }

        private:
            void emit(const std::string & command, Json result, std::chrono::steady_clock::time_point start)
            {
                if (_global.out_path.empty())
                    return;
                Json line = Json::object();
                line["format"] = std::string(output_format);
                line["command"] = command;
                line["args"] = std::vector<std::string>(_args.begin() + 1, _args.end());
                line["result"] = std::move(result);
                if (_global.timings)
                    line["timings"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
                std::ofstream file(_global.out_path, std::ios::app);
                if (! file)
                    throw InvalidArgument("cannot open " + _global.out_path + " for appending");
                file << line.dump() << '\n';
            }

            void emit_record(const ExperimentRecord & record)
            {
                if (! _global.out_path.empty())
                    append_record(_global.out_path, record);
            }

            auto run_options() const -> RunOptions { return {_global.threads, _global.timings}; }

            void define_generate(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("generate", "Generate a graph and print it as graph6");
                auto spec = std::make_shared<std::string>();
                auto edges = std::make_shared<bool>(false);
                sub->add_option("spec", *spec, "complete:6, turan:9:3, blowup:3:2, coned_blowup:2:2, cycle:5, gnp:10:1/2:7, mindeg:10:1/5:1")
                    ->required();
                sub->add_flag("--edges", *edges, "Also print the edge list");
                sub->callback([this, &action, spec, edges] {
                    action = [this, spec, edges] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = generate(parse_gen_spec(*spec));
                        _out << to_graph6(g) << "\n";
                        if (*edges)
                            _out << format_edges(g.edges()) << "\n";
                        emit("generate", Json{{"graph", to_graph6(g)}, {"n", g.order()}, {"edges", g.size()}}, start);
                        return exit_ok;
                    };
                });
            }

            void define_count(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("count", "Count copies of a pattern");
                auto graph = std::make_shared<std::string>(), pattern = std::make_shared<std::string>();
                sub->add_option("--graph", *graph, "Host graph")->required();
                sub->add_option("--pattern", *pattern, "Pattern literal: K3, K3(2), K3+(2), g6:...")->required();
                sub->callback([this, &action, graph, pattern] {
                    action = [this, graph, pattern] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(*graph);
                        auto t = parse_pattern(*pattern);
                        auto count = count_pattern(g, t);
                        _out << to_string(count) << "\n";
                        emit("count", Json{{"count", to_string(count)}}, start);
                        return exit_ok;
                    };
                });
            }

            void define_contains(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("contains", "Test whether the host contains a copy of a graph");
                auto graph = std::make_shared<std::string>(), forbid = std::make_shared<std::string>();
                sub->add_option("--graph", *graph, "Host graph")->required();
                sub->add_option("--forbid,--pattern", *forbid, "Graph to look for")->required();
                sub->callback([this, &action, graph, forbid] {
                    action = [this, graph, forbid] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(*graph);
                        auto h = parse_graph_argument(*forbid);
                        auto copy = find_copy(g, h);
                        _out << (copy ? "yes" : "no") << "\n";
                        if (copy)
                            _out << "copy " << join(*copy) << "\n";
                        emit("contains", Json{{"contains", copy.has_value()}}, start);
                        return exit_ok;
                    };
                });
            }

            void define_color(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("color", "Chromatic number, or k-colourability with --k");
                auto graph = std::make_shared<std::string>();
                auto k = std::make_shared<int>(0);
                auto budget = std::make_shared<std::uint64_t>(ColoringOptions{}.node_budget);
                sub->add_option("--graph", *graph, "Graph to colour")->required();
                sub->add_option("--k", *k, "Only decide k-colourability")->check(CLI::PositiveNumber);
                sub->add_option("--node-budget", *budget, "Search nodes per colourability query")->capture_default_str();
                sub->callback([this, &action, graph, k, budget] {
                    action = [this, graph, k, budget] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(*graph);
                        ColoringOptions options;
                        options.node_budget = *budget;
                        if (*k > 0) {
                            auto r = is_k_colorable(g, *k, options);
                            _out << "colorable " << to_string(r.answer) << "\n";
                            if (r.answer == Tri::yes)
                                _out << "colors " << join(r.witness) << "\n";
                            emit("color", Json{{"k", *k}, {"colorable", to_string(r.answer)}, {"colors", r.witness}}, start);
                            return r.answer == Tri::unknown ? exit_unknown : exit_ok;
                        }
                        auto r = chromatic_number(g, options);
                        _out << "chromatic_number " << r.chromatic_number << "\n";
                        _out << "colors " << join(r.witness) << "\n";
                        emit("color", Json{{"chromatic_number", r.chromatic_number}, {"colors", r.witness}}, start);
                        return exit_ok;
                    };
                });
            }

            void define_solve(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("solve", "Largest number of pattern copies in an H-free subgraph");
                struct Args
                {
                    std::string graph, pattern, forbid, mode = "exact", strategy = "auto";
                    SolveOptions options;
                    bool no_forward = false, no_critical = false, no_incumbent = false, all = false;
                    std::uint64_t seed = 0;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("--graph", a->graph, "Host graph")->required();
                sub->add_option("--pattern", a->pattern, "Pattern T to maximise")->required();
                sub->add_option("--forbid", a->forbid, "Forbidden graph H")->required();
                sub->add_option("--mode", a->mode, "exact or heuristic")->capture_default_str()->check(CLI::IsMember({"exact", "heuristic"}));
                sub->add_option("--strategy", a->strategy, "auto, exhaustive or bnb")->capture_default_str()
                    ->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
                sub->add_option("--node-budget", a->options.node_budget, "Search nodes before giving up")->capture_default_str();
                sub->add_option("--exhaustive-edges", a->options.exhaustive_edge_budget, "Edge budget for exhaustive search")->capture_default_str();
                sub->add_option("--bnb-edges", a->options.branch_and_bound_edge_budget, "Edge budget for branch-and-bound")->capture_default_str();
                sub->add_flag("--no-forward-check", a->no_forward, "Disable dropping edges that complete H");
                sub->add_flag("--no-critical-rule", a->no_critical, "Disable the critical-vertex neighbourhood rule");
                sub->add_flag("--no-incumbent", a->no_incumbent, "Do not seed the search with the heuristic count");
                sub->add_flag("--all-optima", a->all, "List every optimum");
                sub->add_option("--seed", a->seed, "Seed for local search in heuristic mode")->capture_default_str();
                sub->callback([this, &action, a] {
                    action = [this, a] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(a->graph);
                        auto t = parse_pattern(a->pattern);
                        auto h = parse_graph_argument(a->forbid);
                        auto options = a->options;
                        options.mode = a->mode == "exact" ? SolveMode::exact : SolveMode::heuristic;
                        if (options.mode == SolveMode::heuristic && a->strategy != "auto")
                            throw InvalidArgument("contradictory flags: --strategy applies to exact mode only");
                        if (options.mode == SolveMode::heuristic && a->all)
                            throw InvalidArgument("contradictory flags: --all-optima needs exact mode");
                        options.strategy = a->strategy == "exhaustive" ? Strategy::exhaustive
                            : a->strategy == "bnb"                      ? Strategy::branch_and_bound
                                                                        : Strategy::automatic;
                        options.forward_check = ! a->no_forward;
                        options.critical_neighbourhood = ! a->no_critical;
                        options.heuristic_incumbent = ! a->no_incumbent;
                        options.collect_optima = a->all;
                        options.partite.seed = a->seed;
                        auto r = max_hfree_subgraph(g, t, h, options);
                        _out << "count " << to_string(r.best_count) << "\n";
                        _out << "proof " << to_string(r.proof) << "\n";
                        _out << "nodes " << r.stats.nodes << "\n";
                        _out << "witness " << format_edges(r.best_edges) << "\n";
                        for (auto & w : r.warnings)
                            _out << "warning " << w << "\n";
                        Json optima = Json::array();
                        if (a->all) {
                            _out << "optima " << r.optima.size() << (r.optima_truncated ? " (truncated)" : "") << "\n";
                            for (auto & o : r.optima) {
                                _out << "optimum " << format_edges(o) << "\n";
                                optima.push_back(format_edges(o));
                            }
                        }
                        Json result{{"count", to_string(r.best_count)}, {"proof", std::string(to_string(r.proof))},
                            {"nodes", r.stats.nodes}, {"witness", format_edges(r.best_edges)},
                            {"witness_graph6", to_graph6(Graph::from_edges(g.order(), r.best_edges))}};
                        if (a->all)
                            result["optima"] = optima;
                        emit("solve", std::move(result), start);
                        return exit_ok;
                    };
                });
            }

            void define_partite(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("partite", "Best k-partite subgraph for a pattern");
                struct Args
                {
                    std::string graph, pattern, mode = "exact";
                    int k = 2;
                    PartiteOptions options;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("--graph", a->graph, "Host graph")->required();
                sub->add_option("--pattern", a->pattern, "Pattern T")->required();
                sub->add_option("--k", a->k, "Number of parts")->required()->check(CLI::PositiveNumber);
                sub->add_option("--mode", a->mode, "exact or local")->capture_default_str()->check(CLI::IsMember({"exact", "local"}));
                sub->add_option("--seed", a->options.seed, "Local search seed")->capture_default_str();
                sub->add_option("--restarts", a->options.restarts, "Local search restarts")->capture_default_str();
                sub->add_option("--exact-vertices", a->options.exact_vertex_budget, "Vertex budget for exact mode")->capture_default_str();
                sub->callback([this, &action, a] {
                    action = [this, a] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(a->graph);
                        auto t = parse_pattern(a->pattern);
                        auto options = a->options;
                        options.mode = a->mode == "exact" ? PartiteMode::exact : PartiteMode::local_search;
                        auto r = max_partite(g, a->k, t, options);
                        _out << "count " << to_string(r.count) << "\n";
                        _out << "parts " << join(r.partition.assignment) << "\n";
                        emit("partite", Json{{"count", to_string(r.count)}, {"parts", r.partition.assignment}}, start);
                        return exit_ok;
                    };
                });
            }

            static auto trace_json(const PeelTrace & trace) -> Json
            {
                Json steps = Json::array();
                for (auto & s : trace.steps)
                    steps.push_back(Json{{"vertex", s.vertex}, {"degree", s.degree}, {"host_size", s.host_size},
                        {"removed", to_string(s.removed)}});
                return Json{{"steps", steps}, {"stop_reason", std::string(to_string(trace.stop_reason))},
                    {"exceeded_half", trace.exceeded_half}};
            }

            void print_trace(const PeelTrace & trace)
            {
                _out << "step vertex degree host_size removed\n";
                for (std::size_t i = 0; i < trace.steps.size(); ++i) {
                    auto & s = trace.steps[i];
                    _out << i + 1 << " " << s.vertex << " " << s.degree << " " << s.host_size << " " << to_string(s.removed) << "\n";
                }
                _out << "stop " << to_string(trace.stop_reason) << "\n";
                if (trace.exceeded_half)
                    _out << "warning more than n/2 vertices were removed\n";
            }

            void define_peel(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("peel", "Remove low-degree vertices until the degree threshold holds");
                struct Args
                {
                    std::string graph, pattern = "K2";
                    int k = 3, floor = 0;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("--graph", a->graph, "Host graph")->required();
                sub->add_option("--k", a->k, "Threshold parameter k")->capture_default_str();
                sub->add_option("--pattern", a->pattern, "Pattern whose losses are recorded")->capture_default_str();
                sub->add_option("--floor", a->floor, "Stop once this many vertices remain")->capture_default_str();
                sub->callback([this, &action, a] {
                    action = [this, a] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(a->graph);
                        auto r = peel(g, a->k, parse_pattern(a->pattern), a->floor);
                        print_trace(r.trace);
                        _out << "core " << join(r.core.original) << "\n";
                        _out << "core_graph6 " << to_graph6(r.core.graph) << "\n";
                        auto result = trace_json(r.trace);
                        result["core"] = r.core.original;
                        emit("peel", std::move(result), start);
                        return exit_ok;
                    };
                });
            }

            void define_rebuild(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("rebuild", "Peel, partition the core, reinsert the peeled vertices");
                struct Args
                {
                    std::string graph, pattern, forbid;
                    int k = 3;
                    RebuildOptions options;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("--graph", a->graph, "Host graph")->required();
                sub->add_option("--pattern", a->pattern, "Pattern T")->required();
                sub->add_option("--forbid", a->forbid, "Forbidden graph H")->required();
                sub->add_option("--k", a->k, "Build a (k-1)-partite subgraph")->capture_default_str();
                sub->add_option("--floor", a->options.floor, "Peel floor")->capture_default_str();
                sub->add_option("--seed", a->options.partite.seed, "Local search seed")->capture_default_str();
                sub->callback([this, &action, a] {
                    action = [this, a] {
                        auto start = std::chrono::steady_clock::now();
                        auto g = parse_graph_argument(a->graph);
                        auto r = rebuild(g, a->k, parse_pattern(a->pattern), parse_graph_argument(a->forbid), a->options);
                        print_trace(r.trace);
                        std::vector<std::string> gains;
                        for (auto & gain : r.gains)
                            gains.push_back(to_string(gain));
                        _out << "core_count " << to_string(r.core_count) << "\n";
                        _out << "gains";
                        for (auto & gain : gains)
                            _out << " " << gain;
                        _out << "\n";
                        _out << "parts " << join(r.partition.assignment) << "\n";
                        _out << "count " << to_string(r.solve.best_count) << "\n";
                        _out << "proof " << to_string(r.solve.proof) << "\n";
                        _out << "witness " << format_edges(r.solve.best_edges) << "\n";
                        _out << "h_free " << (r.h_free ? "yes" : "no") << "\n";
                        for (auto & w : r.solve.warnings)
                            _out << "warning " << w << "\n";
                        auto result = trace_json(r.trace);
                        result["core_count"] = to_string(r.core_count);
                        result["gains"] = gains;
                        result["parts"] = r.partition.assignment;
                        result["count"] = to_string(r.solve.best_count);
                        result["witness"] = format_edges(r.solve.best_edges);
                        result["h_free"] = r.h_free;
                        result["warnings"] = r.solve.warnings;
                        emit("rebuild", std::move(result), start);
                        return exit_ok;
                    };
                });
            }

            void define_formula(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("formula", "Evaluate a closed-form bound exactly");
                struct Args
                {
                    std::string id;
                    std::optional<long> n;
                    std::optional<int> k, m, t;
                    std::string eps = "0", c = "0", d, real_n;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("id", a->id,
                       "aes-threshold, es-threshold, predict-ex-clique, predict-ex-blowup, partition-lower-clique, "
                       "partition-lower-blowup, removal-bound-clique, removal-bound-blowup, sparse-copy-bound, "
                       "f-maximizer, reinsertion-scale")
                    ->required();
                sub->add_option("--n", a->real_n, "Vertex count (rational for sparse-copy-bound and f-maximizer)");
                sub->add_option("--k", a->k, "Forbidden clique size k");
                sub->add_option("--m", a->m, "Clique size m");
                sub->add_option("--t", a->t, "Blow-up part size t");
                sub->add_option("--eps", a->eps, "Epsilon as a rational")->capture_default_str();
                sub->add_option("--c", a->c, "Caller-supplied constant")->capture_default_str();
                sub->add_option("--d", a->d, "Degree d");
                sub->callback([this, &action, a] { action = [this, a] { return formula(*a); }; });
            }

            template <typename Args>
            auto formula(const Args & a) -> int
            {
                auto start = std::chrono::steady_clock::now();
                auto need = [&](const auto & value, const char * flag) {
                    if (! value)
                        throw InvalidArgument("formula " + a.id + " needs " + flag);
                    return *value;
                };
                auto n_rational = [&] {
                    if (a.real_n.empty())
                        throw InvalidArgument("formula " + a.id + " needs --n");
                    return parse_rational(a.real_n);
                };
                auto n_integer = [&] {
                    auto n = n_rational();
                    if (denominator(n) != 1)
                        throw InvalidArgument("formula " + a.id + " needs an integer --n");
                    return numerator(n).template convert_to<long>();
                };
                Json result = Json::object();
                auto print = [&](const std::string & name, const Rational & value) {
                    if (name == "value")
                        _out << exact_line(value) << "\n";
                    else
                        _out << name << " " << exact_line(value) << "\n";
                    result[name] = to_string(value);
                };

                const auto & id = a.id;
                if (id == "aes-threshold")
                    print("value", aes_threshold(need(a.k, "--k")));
                else if (id == "es-threshold")
                    print("value", es_threshold(need(a.k, "--k")));
                else if (id == "predict-ex-clique")
                    print("value", predict_ex_clique(n_integer(), need(a.k, "--k"), need(a.m, "--m")).value);
                else if (id == "predict-ex-blowup")
                    print("value", predict_ex_blowup(n_integer(), need(a.m, "--m"), need(a.t, "--t")).value);
                else if (id == "partition-lower-clique")
                    print("value", partition_lower_clique(n_integer(), need(a.k, "--k"), need(a.m, "--m"), parse_rational(a.eps)).value);
                else if (id == "partition-lower-blowup")
                    print("value", partition_lower_blowup(n_integer(), need(a.m, "--m"), need(a.t, "--t"), parse_rational(a.eps),
                                       parse_rational(a.c))
                                       .value);
                else if (id == "removal-bound-clique") {
                    auto r = removal_bound_clique(n_integer(), need(a.k, "--k"), need(a.m, "--m"));
                    print("value", r.bound.value);
                    print("delta", r.delta);
                }
                else if (id == "removal-bound-blowup") {
                    auto r = removal_bound_blowup(n_integer(), need(a.m, "--m"), need(a.t, "--t"));
                    print("value", r.bound.value);
                    print("normalisation", r.normalisation);
                    print("ratio", r.ratio);
                }
                else if (id == "sparse-copy-bound") {
                    if (a.d.empty())
                        throw InvalidArgument("formula sparse-copy-bound needs --d");
                    print("value", sparse_copy_bound(n_rational(), parse_rational(a.d), need(a.m, "--m"), need(a.t, "--t")).value);
                }
                else if (id == "f-maximizer")
                    print("value", f_maximizer(n_rational(), need(a.m, "--m"), need(a.t, "--t")));
                else if (id == "reinsertion-scale") {
                    auto r = reinsertion_scale(n_integer(), need(a.k, "--k"), need(a.m, "--m"), need(a.t, "--t"));
                    print("value", r.value);
                    if (! r.verified)
                        _out << "note outside k = m+1 or t = 1; unverified regime\n";
                    result["verified"] = r.verified;
                }
                else
                    throw InvalidArgument("unknown formula '" + id + "'");
                result["formula"] = id;
                emit("formula", std::move(result), start);
                return exit_ok;
            }

            void print_record(const ExperimentRecord & record)
            {
                _out << "id " << record.id << "\n";
                for (auto & [claim, verdict] : record.verdicts.items())
                    _out << "verdict " << claim << " " << verdict.template get<std::string>() << "\n";
                for (auto & [key, value] : record.results.items()) {
                    if (value.is_array() || value.is_object())
                        continue;
                    _out << key << " " << (value.is_string() ? value.template get<std::string>() : value.dump()) << "\n";
                }
                _out << "counterexamples " << record.counterexamples.size() << "\n";
            }

            void define_verify(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("verify", "Check a claim on exact optima and record the outcome");
                struct Args
                {
                    std::string claim, graph, forbid, pattern = "K2", eps = "0", gamma = "1/2", tolerance = "0";
                    int k = 3, n_min = 4, n_max = 8, m = 2, t = 1;
                    bool all_subgraphs = false;
                    SolverBudget budget;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("claim", a->claim, "colorable, near, prediction or dichotomy")
                    ->required()
                    ->check(CLI::IsMember({"colorable", "near", "prediction", "dichotomy"}));
                sub->add_option("--graph", a->graph, "Host graph (colorable, near, dichotomy)");
                sub->add_option("--forbid", a->forbid, "Forbidden graph H (colorable, near, prediction)");
                sub->add_option("--pattern", a->pattern, "Pattern T")->capture_default_str();
                sub->add_option("--k", a->k, "Chromatic number of H")->capture_default_str();
                sub->add_option("--eps", a->eps, "Hypothesis gate: min degree at least (1 - eps) n")->capture_default_str();
                sub->add_option("--gamma", a->gamma, "Dichotomy copy ratio")->capture_default_str();
                sub->add_option("--tolerance", a->tolerance, "Dichotomy distance tolerance, times n^2")->capture_default_str();
                sub->add_flag("--all-subgraphs", a->all_subgraphs, "Dichotomy over all K_k-free subgraphs, not only maximal");
                sub->add_option("--n-min", a->n_min, "Prediction: smallest n")->capture_default_str();
                sub->add_option("--n-max", a->n_max, "Prediction: largest n")->capture_default_str();
                sub->add_option("--m", a->m, "Prediction: clique size m")->capture_default_str();
                sub->add_option("--t", a->t, "Prediction: blow-up part size t")->capture_default_str();
                sub->add_option("--node-budget", a->budget.node_budget, "Solver node budget")->capture_default_str();
                sub->add_option("--edge-budget", a->budget.edge_budget, "Solver edge budget")->capture_default_str();
                sub->add_option("--optima-cap", a->budget.optima_cap, "Most optima enumerated")->capture_default_str();
                sub->callback([this, &action, a] {
                    action = [this, a] {
                        auto need = [&](const std::string & value, const char * flag) {
                            if (value.empty())
                                throw InvalidArgument("verify " + a->claim + " needs " + flag);
                            return parse_graph_argument(value);
                        };
                        ExperimentRecord record;
                        if (a->claim == "colorable" || a->claim == "near") {
                            ColorableSpec spec;
                            spec.g = need(a->graph, "--graph");
                            spec.h = need(a->forbid, "--forbid");
                            spec.t = parse_pattern(a->pattern);
                            spec.k = a->k;
                            spec.eps = parse_rational(a->eps);
                            spec.budget = a->budget;
                            record = a->claim == "colorable" ? verify_extremal_colorable(spec, run_options())
                                                             : verify_near_colorable(spec, run_options());
                        }
                        else if (a->claim == "prediction") {
                            PredictionSpec spec;
                            spec.h = need(a->forbid, "--forbid");
                            spec.n_min = a->n_min;
                            spec.n_max = a->n_max;
                            spec.k = a->k;
                            spec.m = a->m;
                            spec.t = a->t;
                            spec.budget = a->budget;
                            record = compare_prediction(spec, run_options());
                            _out << "n exact prediction ratio\n";
                            for (auto & row : record.results["rows"]) {
                                auto show = [](const Json & v) { return v.is_null() ? std::string("-") : v.get<std::string>(); };
                                _out << row["n"].get<int>() << " " << (row.contains("exact") ? show(row["exact"]) : "unknown")
                                     << " " << show(row["prediction"]) << " " << (row.contains("ratio") ? show(row["ratio"]) : "-")
                                     << "\n";
                            }
                        }
                        else {
                            DichotomySpec spec;
                            spec.g = need(a->graph, "--graph");
                            spec.k = a->k;
                            spec.t = parse_pattern(a->pattern);
                            spec.gamma = parse_rational(a->gamma);
                            spec.tolerance = parse_rational(a->tolerance);
                            spec.maximal_only = ! a->all_subgraphs;
                            spec.budget = a->budget;
                            record = verify_dichotomy(spec, run_options());
                            _out << "distance max_ratio\n";
                            for (auto & point : record.results["frontier"])
                                _out << point["distance"].get<std::string>() << " " << point["max_ratio"].get<std::string>() << "\n";
                        }
                        print_record(record);
                        emit_record(record);
                        bool unknown = verdicts_unknown(record) || record.results.value("unknown_rows", 0) > 0;
                        return unknown ? exit_unknown : exit_ok;
                    };
                });
            }

            void define_scan(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("scan", "Pass rates of the colourability claim across minimum-degree fractions");
                struct Args
                {
                    std::string forbid = "K3", pattern = "K2", fractions;
                    int k = 3, n = 8, trials = 10;
                    std::uint64_t seed = 0;
                    SolverBudget budget;
                };
                auto a = std::make_shared<Args>();
                sub->add_option("--forbid", a->forbid, "Forbidden graph H")->capture_default_str();
                sub->add_option("--pattern", a->pattern, "Pattern T")->capture_default_str();
                sub->add_option("--k", a->k, "Chromatic number of H")->capture_default_str();
                sub->add_option("--n", a->n, "Vertex count")->capture_default_str();
                sub->add_option("--fractions", a->fractions, "Comma-separated degree fractions, e.g. 1,3/4,1/2")->required();
                sub->add_option("--trials", a->trials, "Graphs per fraction")->capture_default_str();
                sub->add_option("--seed", a->seed, "Base seed")->capture_default_str();
                sub->add_option("--node-budget", a->budget.node_budget, "Solver node budget per trial")->capture_default_str();
                sub->add_option("--edge-budget", a->budget.edge_budget, "Solver edge budget")->capture_default_str();
                sub->add_option("--optima-cap", a->budget.optima_cap, "Most optima enumerated per trial")->capture_default_str();
                sub->callback([this, &action, a] {
                    action = [this, a] {
                        ScanSpec spec;
                        spec.h = parse_graph_argument(a->forbid);
                        spec.t = parse_pattern(a->pattern);
                        spec.k = a->k;
                        spec.n = a->n;
                        for (auto & f : split(a->fractions, ','))
                            spec.fractions.push_back(parse_rational(f));
                        spec.trials = a->trials;
                        spec.seed = a->seed;
                        spec.budget = a->budget;
                        auto record = threshold_scan(spec, run_options());
                        _out << "fraction floor holds fails unknown pass_rate\n";
                        for (auto & row : record.results["rows"]) {
                            auto rate = row["pass_rate"];
                            _out << row["fraction"].get<std::string>() << " " << row["floor"].get<int>() << " "
                                 << row["holds"].get<int>() << " " << row["fails"].get<int>() << " " << row["unknown"].get<int>() << " "
                                 << (rate.is_null() ? std::string("-") : exact_line(parse_rational(rate.get<std::string>()))) << "\n";
                        }
                        print_record(record);
                        emit_record(record);
                        return verdicts_unknown(record) ? exit_unknown : exit_ok;
                    };
                });
            }

            void define_replay(CLI::App & app, std::function<int()> & action)
            {
                auto * sub = app.add_subcommand("replay", "Re-execute stored records and compare field by field");
                auto path = std::make_shared<std::string>();
                sub->add_option("records", *path, "File of JSON-line records")->required();
                sub->callback([this, &action, path] {
                    action = [this, path] {
                        int status = exit_ok;
                        for (auto & record : read_records(*path)) {
                            auto report = replay(record, {_global.threads, false});
                            if (report.identical)
                                _out << "identical " << record.id << "\n";
                            else {
                                status = exit_replay_mismatch;
                                _out << "differs " << record.id;
                                for (auto & d : report.differences)
                                    _out << " " << d;
                                _out << "\n";
                            }
                            if (! _global.out_path.empty())
                                append_record(_global.out_path, report.recomputed);
                        }
                        return status;
                    };
                });
            }

            const std::vector<std::string> & _args;
            std::ostream & _out;
            std::ostream & _err;
            Global _global;
        };
    }

    auto parse_graph_argument(std::string_view text) -> Graph
    {
        if (text.starts_with("g6:"))
            return from_graph6(text.substr(3));
        if (text.starts_with("gen:"))
            return generate(parse_gen_spec(text.substr(4)));
        try {
            return parse_pattern(text).graph();
        }
        catch (const InvalidArgument &) {
            throw InvalidArgument("graph argument '" + std::string(text) +
                "' is neither g6:<graph6>, gen:<generator spec> nor a pattern literal");
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        return Runner(args, out, err).run();
    }
}
