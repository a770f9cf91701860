#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/solver.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>

namespace hfree
{
    namespace
    {
        using Rows = std::array<Mask, word_bits>;

        auto graph_of(const Rows & rows, int n) -> Graph
        {
            return Graph::from_rows(std::span<const Mask>(rows.data(), static_cast<std::size_t>(n)));
        }

        auto is_complete(const Graph & h) -> bool
        {
            auto n = static_cast<std::size_t>(h.order());
            return h.size() == n * (n - 1) / 2;
        }

        /// Clique of size r inside cand, appended to out.
        auto find_clique(const Rows & rows, Mask cand, int r, std::vector<Vertex> & out) -> bool
        {
            if (r == 0)
                return true;
            if (std::popcount(cand) < r)
                return false;
            for (Mask rest = cand; rest; rest &= rest - 1) {
                Vertex v = std::countr_zero(rest);
                out.push_back(v);
                if (find_clique(rows, rows[static_cast<std::size_t>(v)] & rest & ~bit(v), r - 1, out))
                    return true;
                out.pop_back();
            }
            return false;
        }

        void record(SolveResult & result, const SolveOptions & options, Count count, std::vector<Edge> edges, bool better)
        {
            if (better) {
                result.best_count = count;
                result.best_edges = edges;
                result.optima.clear();
                result.optima_truncated = false;
            }
            if (options.collect_optima) {
                if (result.optima.size() < options.optima_cap)
                    result.optima.push_back(std::move(edges));
                else
                    result.optima_truncated = true;
            }
        }

        class Exhaustive
        {
        public:
            Exhaustive(const Graph & g, const Pattern & t, const Graph & h, const SolveOptions & options) :
                _graph(g.order()),
                _edges(g.edges()),
                _t(t),
                _h(h),
                _options(options)
            {
            }

            auto run() -> SolveResult
            {
                _result.proof = Proof::exhaustive;
                visit(0);
                std::stable_sort(_result.optima.begin(), _result.optima.end(),
                    [](const auto & a, const auto & b) { return edge_set_precedes(a, b); });
                if (_result.optima.size() > _options.optima_cap) {
                    _result.optima.resize(_options.optima_cap);
                    _result.optima_truncated = true;
                }
                _result.stats.nodes = _nodes;
                return _result;
            }

        private:
            void leaf()
            {
                const auto & g = _graph;
                auto count = count_pattern(g, _t);
                auto edges = g.edges();
                if (! _found || count > _result.best_count) {
                    _found = true;
                    _result.best_count = count;
                    _result.best_edges = edges;
                    _result.optima.clear();
                }
                else if (count < _result.best_count)
                    return;
                else if (edge_set_precedes(edges, _result.best_edges))
                    _result.best_edges = edges;
                if (_options.collect_optima)
                    _result.optima.push_back(std::move(edges));
            }

            void visit(std::size_t i)
            {
                if (++_nodes > _options.node_budget)
                    throw BudgetExceeded("exhaustive search exceeded " + std::to_string(_options.node_budget) + " nodes");
                if (i == _edges.size()) {
                    leaf();
                    return;
                }
                auto e = _edges[i];
                _graph.add_edge(e.u, e.v);
                if (! find_copy_through_edge(_graph, _h, e))
                    visit(i + 1);
                _graph.remove_edge(e.u, e.v);
                visit(i + 1);
            }

            Graph _graph;
            std::vector<Edge> _edges;
            const Pattern & _t;
            const Graph & _h;
            const SolveOptions & _options;
            SolveResult _result;
            bool _found = false;
            std::uint64_t _nodes = 0;
        };

        class BranchAndBound
        {
        public:
            BranchAndBound(const Graph & g, const Pattern & t, const Graph & h, const SolveOptions & options,
                std::optional<Count> lower_bound) :
                _n(g.order()),
                _edges(g.edges()),
                _t(t),
                _h(h),
                _h_complete(is_complete(h)),
                _h_edges(h.edges()),
                _options(options),
                _lower_bound(std::move(lower_bound))
            {
                if (options.critical_neighbourhood && h.size() > 0) {
                    auto criticality = is_edge_critical(h, options.coloring);
                    if (criticality.critical)
                        if (auto c = critical_vertex(h, options.coloring))
                            _h_minus = remove_vertex(h, *c).graph;
                }
            }

            auto run() -> SolveResult
            {
                _result.proof = Proof::branch_and_bound;
                Rows inc{};
                visit(0, inc, _opt_root());
                _result.stats.nodes = _nodes;
                return _result;
            }

            auto found() const -> bool { return _found; }

        private:
            auto _opt_root() const -> Rows
            {
                Rows rows{};
                for (auto & e : _edges) {
                    rows[static_cast<std::size_t>(e.u)] |= bit(e.v);
                    rows[static_cast<std::size_t>(e.v)] |= bit(e.u);
                }
                return rows;
            }

            /// Would adding f to inc complete a copy of h?
            auto completes(const Rows & inc, Edge f) const -> bool
            {
                if (_h_complete) {
                    std::vector<Vertex> scratch;
                    Mask common = inc[static_cast<std::size_t>(f.u)] & inc[static_cast<std::size_t>(f.v)];
                    return find_clique(inc, common, _h.order() - 2, scratch);
                }
                auto with = inc;
                with[static_cast<std::size_t>(f.u)] |= bit(f.v);
                with[static_cast<std::size_t>(f.v)] |= bit(f.u);
                return find_copy_through_edge(graph_of(with, _n), _h, f).has_value();
            }

            auto find_h(const Rows & rows) const -> std::optional<std::vector<Vertex>>
            {
                if (_h_complete) {
                    std::vector<Vertex> out;
                    if (find_clique(rows, low_bits(_n), _h.order(), out))
                        return out;
                    return std::nullopt;
                }
                return find_copy(graph_of(rows, _n), _h);
            }

            /// Some vertex touched by the new edge has h minus the critical vertex in its neighbourhood.
            auto neighbourhood_violation(const Rows & inc, Edge e) const -> bool
            {
                auto g = graph_of(inc, _n);
                Mask touched = bit(e.u) | bit(e.v) | (inc[static_cast<std::size_t>(e.u)] & inc[static_cast<std::size_t>(e.v)]);
                for (Mask rest = touched; rest; rest &= rest - 1) {
                    Vertex x = std::countr_zero(rest);
                    if (contains(induced_subgraph(g, inc[static_cast<std::size_t>(x)]).graph, *_h_minus))
                        return true;
                }
                return false;
            }

            /// Upper bound on the best leaf below this node; nullopt when no leaf is h-free.
            auto bound(const Rows & inc, const Rows & opt) const -> std::optional<Count>
            {
                auto opt_graph = graph_of(opt, _n);
                Count total = count_pattern(opt_graph, _t);
                Count largest = 0, sum = 0;
                auto work = opt;
                while (auto copy = find_h(work)) {
                    std::optional<Count> cheapest;
                    for (auto & he : _h_edges) {
                        Edge e((*copy)[static_cast<std::size_t>(he.u)], (*copy)[static_cast<std::size_t>(he.v)]);
                        auto su = static_cast<std::size_t>(e.u), sv = static_cast<std::size_t>(e.v);
                        if (inc[su] & bit(e.v))
                            continue;
                        auto loss = copies_through_edge(opt_graph, _t, e);
                        if (! cheapest || loss < *cheapest)
                            cheapest = loss;
                        work[su] &= ~bit(e.v);
                        work[sv] &= ~bit(e.u);
                    }
                    if (! cheapest)
                        return std::nullopt;
                    largest = std::max(largest, *cheapest);
                    sum += *cheapest;
                }
                auto te = static_cast<long long>(_t.edge_count());
                Count spread = te == 0 ? Count(0) : Count((sum + te - 1) / te);
                return total - std::max(largest, spread);
            }

            auto prune(const Count & ub) const -> bool
            {
                if (_found)
                    return ub < _result.best_count || (ub == _result.best_count && ! _options.collect_optima);
                return _lower_bound && ub < *_lower_bound;
            }

            void visit(std::size_t i, const Rows & inc, const Rows & opt)
            {
                if (++_nodes > _options.node_budget)
                    throw BudgetExceeded("branch-and-bound exceeded " + std::to_string(_options.node_budget) + " nodes");

                auto ub = bound(inc, opt);
                if (! ub || prune(*ub))
                    return;

                // skip edges already ruled out
                while (i < _edges.size() && ! (opt[static_cast<std::size_t>(_edges[i].u)] & bit(_edges[i].v)))
                    ++i;

                if (i == _edges.size()) {
                    leaf(inc);
                    return;
                }

                auto e = _edges[i];
                auto su = static_cast<std::size_t>(e.u), sv = static_cast<std::size_t>(e.v);

                auto with = inc;
                with[su] |= bit(e.v);
                with[sv] |= bit(e.u);
                if (! (_h_minus && neighbourhood_violation(with, e))) {
                    auto next_opt = opt;
                    if (_options.forward_check)
                        for (std::size_t j = i + 1; j < _edges.size(); ++j) {
                            auto f = _edges[j];
                            auto fu = static_cast<std::size_t>(f.u), fv = static_cast<std::size_t>(f.v);
                            if ((next_opt[fu] & bit(f.v)) && completes(with, f)) {
                                next_opt[fu] &= ~bit(f.v);
                                next_opt[fv] &= ~bit(f.u);
                            }
                        }
                    visit(i + 1, with, next_opt);
                }

                auto without = opt;
                without[su] &= ~bit(e.v);
                without[sv] &= ~bit(e.u);
                visit(i + 1, inc, without);
            }

            void leaf(const Rows & inc)
            {
                auto g = graph_of(inc, _n);
                if (! _options.forward_check && contains(g, _h))
                    return;
                auto count = count_pattern(g, _t);
                if (_lower_bound && ! _found && count < *_lower_bound)
                    return;
                if (! _found || count > _result.best_count) {
                    _found = true;
                    record(_result, _options, count, g.edges(), true);
                }
                else if (count == _result.best_count)
                    record(_result, _options, count, g.edges(), false);
            }

            int _n;
            std::vector<Edge> _edges;
            const Pattern & _t;
            const Graph & _h;
            bool _h_complete;
            std::vector<Edge> _h_edges;
            std::optional<Graph> _h_minus;
            const SolveOptions & _options;
            std::optional<Count> _lower_bound;
            SolveResult _result;
            bool _found = false;
            std::uint64_t _nodes = 0;
        };

        auto seconds_since(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    }

    auto to_string(Proof proof) -> std::string_view
    {
        switch (proof) {
            case Proof::exhaustive: return "exhaustive";
            case Proof::branch_and_bound: return "branch_and_bound";
            case Proof::heuristic: return "heuristic";
        }
        return "?";
    }

    auto to_string(Strategy strategy) -> std::string_view
    {
        switch (strategy) {
            case Strategy::automatic: return "automatic";
            case Strategy::exhaustive: return "exhaustive";
            case Strategy::branch_and_bound: return "branch_and_bound";
        }
        return "?";
    }

    auto edge_set_precedes(std::span<const Edge> a, std::span<const Edge> b) -> bool
    {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++i;
                ++j;
            }
            else
                return a[i] < b[j];
        }
        return i < a.size();
    }

    auto max_hfree_subgraph(const Graph & g, const Pattern & t, const Graph & h, const SolveOptions & options)
        -> SolveResult
    {
        require_word_graph(g, "max_hfree_subgraph");
        require_word_graph(h, "max_hfree_subgraph");
        if (h.size() == 0)
            throw InvalidArgument("max_hfree_subgraph: h has no edges, so every subgraph large enough contains it");
        auto start = std::chrono::steady_clock::now();

        if (options.mode == SolveMode::heuristic) {
            int k = chromatic_number(h, options.coloring).chromatic_number;
            auto rebuilt = rebuild(g, k, t, h, RebuildOptions{0, options.partite, options.coloring});
            rebuilt.solve.stats.seconds = seconds_since(start);
            return rebuilt.solve;
        }

        auto edges = g.size();
        auto strategy = options.strategy == Strategy::automatic ? Strategy::branch_and_bound : options.strategy;
        auto budget = strategy == Strategy::exhaustive ? options.exhaustive_edge_budget : options.branch_and_bound_edge_budget;
        if (edges > budget)
            throw BudgetExceeded("max_hfree_subgraph: " + std::string(to_string(strategy)) + " allows at most " +
                std::to_string(budget) + " edges, got " + std::to_string(edges));

        SolveResult result;
        if (strategy == Strategy::exhaustive)
            result = Exhaustive(g, t, h, options).run();
        else {
            std::optional<Count> lower_bound;
            if (options.heuristic_incumbent) {
                int k = chromatic_number(h, options.coloring).chromatic_number;
                auto rebuilt = rebuild(g, k, t, h, RebuildOptions{0, options.partite, options.coloring});
                if (rebuilt.h_free)
                    lower_bound = rebuilt.solve.best_count;
            }
            BranchAndBound search(g, t, h, options, lower_bound);
            result = search.run();
            if (! search.found())
                throw Error("max_hfree_subgraph: heuristic lower bound was not attained");
        }
        result.stats.seconds = seconds_since(start);
        return result;
    }

    auto rebuild(const Graph & g, int k, const Pattern & t, const Graph & h, const RebuildOptions & options)
        -> RebuildResult
    {
        require_word_graph(g, "rebuild");
        if (k < 2)
            throw InvalidArgument("rebuild: k must be at least 2");

        RebuildResult result;
        auto peeled = peel(g, k, t, options.floor);
        result.trace = peeled.trace;

        const auto & core = peeled.core;
        auto partite = options.partite;
        if (partite.mode == PartiteMode::exact && core.graph.order() > partite.exact_vertex_budget)
            partite.mode = PartiteMode::local_search;
        auto best = max_partite(core.graph, k - 1, t, partite);
        result.core_count = best.count;

        result.partition = Partition::empty(g.order(), k - 1);
        for (std::size_t i = 0; i < core.original.size(); ++i)
            result.partition.assignment[static_cast<std::size_t>(core.original[i])] = best.partition.assignment[i];

        for (auto step = result.trace.steps.rbegin(); step != result.trace.steps.rend(); ++step) {
            auto added = reinsert(g, result.partition, step->vertex, t);
            result.partition = std::move(added.partition);
            result.gains.push_back(added.gain);
        }

        auto final_graph = multipartite_subgraph(g, result.partition);
        auto & solve = result.solve;
        solve.proof = Proof::heuristic;
        solve.best_count = count_pattern(final_graph, t);
        solve.best_edges = final_graph.edges();

        int chi = chromatic_number(h, options.coloring).chromatic_number;
        if (chi != k) {
            solve.warnings.push_back("chromatic number of h is " + std::to_string(chi) + ", not k = " + std::to_string(k));
            result.h_free = ! contains(final_graph, h);
            if (! result.h_free)
                solve.warnings.push_back("rebuilt subgraph contains h");
        }
        return result;
    }
}
