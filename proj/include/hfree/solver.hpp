#pragma once

#include <hfree/coloring.hpp>
#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>
#include <hfree/partite.hpp>
#include <hfree/pattern.hpp>
#include <hfree/peel.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hfree
{
    enum class SolveMode
    {
        exact,
        heuristic
    };

    enum class Strategy
    {
        automatic,
        exhaustive,
        branch_and_bound
    };

    enum class Proof
    {
        exhaustive,
        branch_and_bound,
        heuristic
    };

    auto to_string(Proof proof) -> std::string_view;
    auto to_string(Strategy strategy) -> std::string_view;

    struct SolveOptions
    {
        SolveMode mode = SolveMode::exact;
        Strategy strategy = Strategy::automatic;
        std::size_t exhaustive_edge_budget = 28;
        std::size_t branch_and_bound_edge_budget = 60;
        std::uint64_t node_budget = 500'000'000;

        /// Drop every undecided edge that would complete a copy of h.
        bool forward_check = true;
        /// Reject states where some neighbourhood contains h minus a critical vertex.
        /// Only active when h is edge-critical and has a critical vertex.
        bool critical_neighbourhood = true;
        /// Start branch-and-bound with the count of the rebuild heuristic as a lower bound.
        bool heuristic_incumbent = true;

        /// Also return every optimal edge set, up to optima_cap of them.
        bool collect_optima = false;
        std::size_t optima_cap = 10'000;

        /// Settings for heuristic mode and for the heuristic incumbent.
        PartiteOptions partite;
        ColoringOptions coloring;
    };

    struct SolveStats
    {
        std::uint64_t nodes = 0;
        double seconds = 0;
    };

    struct SolveResult
    {
        Count best_count;
        /// Sorted by (u, v).
        std::vector<Edge> best_edges;
        Proof proof = Proof::heuristic;
        SolveStats stats;
        /// Every optimum in tie-break order, when requested.
        std::vector<std::vector<Edge>> optima;
        bool optima_truncated = false;
        std::vector<std::string> warnings;
    };

    /// Tie-break order on sorted edge sets: at the first edge in exactly one of
    /// the two sets, the set holding that edge comes first. Strict.
    auto edge_set_precedes(std::span<const Edge> a, std::span<const Edge> b) -> bool;

    /// Spanning subgraph of g with no copy of h and the most copies of t. Exact
    /// mode returns the first maximiser in edge_set_precedes order and throws
    /// BudgetExceeded past the edge or node budget. Heuristic mode runs rebuild
    /// with k = chi(h).
    auto max_hfree_subgraph(const Graph & g, const Pattern & t, const Graph & h, const SolveOptions & options = {})
        -> SolveResult;

    struct RebuildOptions
    {
        int floor = 0;
        PartiteOptions partite;
        ColoringOptions coloring;
    };

    struct RebuildResult
    {
        /// proof is always heuristic; best_edges is the final multipartite subgraph.
        SolveResult solve;
        PeelTrace trace;
        /// Final (k-1)-partition of every vertex.
        Partition partition;
        /// Copies in the multipartite subgraph of the core before reinsertion.
        Count core_count;
        /// Gain of each reinsertion, in reinsertion order (reverse removal order).
        std::vector<Count> gains;
        bool h_free = true;
    };

    /// Peel, take the best (k-1)-partite subgraph of the core (exact within the
    /// partite vertex budget, local search otherwise), then reinsert the peeled
    /// vertices in reverse order. When chi(h) != k a warning is recorded and
    /// h-freeness is checked explicitly.
    auto rebuild(const Graph & g, int k, const Pattern & t, const Graph & h, const RebuildOptions & options = {})
        -> RebuildResult;
}
