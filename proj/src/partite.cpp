#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/partite.hpp>
#include <hfree/rng.hpp>

namespace hfree
{
    namespace
    {
        void check_partition(const Graph & g, const Partition & partition)
        {
            if (partition.assignment.size() != static_cast<std::size_t>(g.order()))
                throw InvalidArgument("partition size does not match the graph");
            for (int p : partition.assignment)
                if (p != Partition::unassigned && (p < 0 || p >= partition.parts))
                    throw InvalidArgument("partition assigns a part index out of range");
        }

        auto gain_of(const Graph & g, Partition & partition, Vertex v, int part, const Pattern & t) -> Count
        {
            partition.assignment[static_cast<std::size_t>(v)] = part;
            auto gain = copies_through_vertex(multipartite_subgraph(g, partition), t, v);
            return gain;
        }

        class ExactSearch
        {
        public:
            ExactSearch(const Graph & g, int k, const Pattern & t) :
                _g(g),
                _k(k),
                _t(t),
                _current(Partition::empty(g.order(), k))
            {
            }

            auto run() -> PartiteResult
            {
                if (_g.order() == 0)
                    return {_current, count_pattern(multipartite_subgraph(_g, _current), _t)};
                assign(0, 0);
                return {_best, _best_count};
            }

        private:
            void assign(Vertex v, int blocks_used)
            {
                if (v == _g.order()) {
                    auto count = count_pattern(multipartite_subgraph(_g, _current), _t);
                    if (! _found || count > _best_count) {
                        _found = true;
                        _best_count = count;
                        _best = _current;
                    }
                    return;
                }
                int limit = std::min(_k - 1, blocks_used);
                for (int p = 0; p <= limit; ++p) {
                    _current.assignment[static_cast<std::size_t>(v)] = p;
                    assign(v + 1, std::max(blocks_used, p + 1));
                }
                _current.assignment[static_cast<std::size_t>(v)] = Partition::unassigned;
            }

            const Graph & _g;
            int _k;
            const Pattern & _t;
            Partition _current, _best;
            Count _best_count = 0;
            bool _found = false;
        };

        auto local_search(const Graph & g, int k, const Pattern & t, const PartiteOptions & options) -> PartiteResult
        {
            int n = g.order();
            PartiteResult best{Partition::empty(n, k), -1};
            for (int restart = 0; restart < options.restarts; ++restart) {
                Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(restart)));
                auto current = Partition::empty(n, k);
                for (auto & p : current.assignment)
                    p = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));

                for (int step = 0; n > 0 && step < options.moves_per_vertex * n; ++step) {
                    auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
                    int here = current.assignment[static_cast<std::size_t>(v)];
                    auto trial = current;
                    Count here_gain = gain_of(g, trial, v, here, t);
                    int best_part = here;
                    Count best_gain = here_gain;
                    for (int p = 0; p < k; ++p) {
                        if (p == here)
                            continue;
                        auto gain = gain_of(g, trial, v, p, t);
                        if (gain > best_gain) {
                            best_gain = gain;
                            best_part = p;
                        }
                    }
                    current.assignment[static_cast<std::size_t>(v)] = best_part;
                }

                auto count = count_pattern(multipartite_subgraph(g, current), t);
                if (count > best.count)
                    best = {current, count};
            }
            if (best.count < 0)
                best.count = count_pattern(multipartite_subgraph(g, best.partition), t);
            return best;
        }
    }

    auto Partition::empty(int n, int parts) -> Partition
    {
        return Partition{parts, std::vector<int>(static_cast<std::size_t>(n), unassigned)};
    }

    auto Partition::support() const -> Mask
    {
        Mask m = 0;
        for (std::size_t v = 0; v < assignment.size(); ++v)
            if (assignment[v] != unassigned)
                m |= bit(static_cast<Vertex>(v));
        return m;
    }

    auto multipartite_subgraph(const Graph & g, const Partition & partition) -> Graph
    {
        check_partition(g, partition);
        Graph result(g.order());
        for (auto & e : g.edges()) {
            int a = partition.assignment[static_cast<std::size_t>(e.u)];
            int b = partition.assignment[static_cast<std::size_t>(e.v)];
            if (a != Partition::unassigned && b != Partition::unassigned && a != b)
                result.add_edge(e.u, e.v);
        }
        return result;
    }

    auto max_partite(const Graph & g, int k, const Pattern & t, const PartiteOptions & options) -> PartiteResult
    {
        require_word_graph(g, "max_partite");
        if (k < 1)
            throw InvalidArgument("max_partite: k must be at least 1");
        if (options.mode == PartiteMode::exact) {
            if (g.order() > options.exact_vertex_budget)
                throw BudgetExceeded("max_partite: exact mode allows at most " + std::to_string(options.exact_vertex_budget) +
                    " vertices, got " + std::to_string(g.order()));
            return ExactSearch(g, k, t).run();
        }
        if (options.restarts < 1 || options.moves_per_vertex < 0)
            throw InvalidArgument("max_partite: local search needs at least one restart");
        return local_search(g, k, t, options);
    }

    auto reinsert(const Graph & g, const Partition & partition, Vertex v, const Pattern & t) -> ReinsertResult
    {
        require_word_graph(g, "reinsert");
        check_partition(g, partition);
        if (v < 0 || v >= g.order())
            throw InvalidArgument("reinsert: vertex " + std::to_string(v) + " out of range");
        if (partition.assignment[static_cast<std::size_t>(v)] != Partition::unassigned)
            throw InvalidArgument("reinsert: vertex " + std::to_string(v) + " is already assigned");
        if (partition.parts < 1)
            throw InvalidArgument("reinsert: partition has no parts");

        auto trial = partition;
        ReinsertResult best{partition, 0, -1};
        for (int p = 0; p < partition.parts; ++p) {
            auto gain = gain_of(g, trial, v, p, t);
            if (gain > best.gain) {
                best.gain = gain;
                best.part = p;
            }
        }
        best.partition.assignment[static_cast<std::size_t>(v)] = best.part;
        return best;
    }
}
