#pragma once

#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>
#include <hfree/pattern.hpp>

#include <cstdint>
#include <vector>

namespace hfree
{
    /// Assignment of vertices to parts 0..parts-1. Vertices may be left
    /// unassigned; the support is the set of assigned vertices.
    struct Partition
    {
        static constexpr int unassigned = -1;

        int parts = 0;
        std::vector<int> assignment;

        static auto empty(int n, int parts) -> Partition;

        auto support() const -> Mask;
        friend auto operator==(const Partition &, const Partition &) -> bool = default;
    };

    /// Spanning subgraph keeping the host edges between assigned vertices in different parts.
    auto multipartite_subgraph(const Graph & g, const Partition & partition) -> Graph;

    enum class PartiteMode
    {
        exact,
        local_search
    };

    struct PartiteOptions
    {
        PartiteMode mode = PartiteMode::exact;
        /// Exact mode refuses larger vertex counts.
        int exact_vertex_budget = 14;
        int restarts = 20;
        /// Single-vertex move attempts per restart, as a multiple of n.
        int moves_per_vertex = 10;
        std::uint64_t seed = 0;
    };

    struct PartiteResult
    {
        Partition partition;
        Count count;
    };

    /// Best k-partite subgraph for copies of t. Exact mode enumerates set
    /// partitions into at most k blocks as restricted growth strings (vertex 0 in
    /// part 0) and keeps the first maximiser. Local search hill-climbs from seeded
    /// random partitions. Either way, count is N(multipartite_subgraph, t).
    auto max_partite(const Graph & g, int k, const Pattern & t, const PartiteOptions & options = {}) -> PartiteResult;

    struct ReinsertResult
    {
        Partition partition;
        int part = 0;
        Count gain;
    };

    /// Adds unassigned vertex v to the part creating the most new cross-part copies
    /// of t through v, lowest part index on ties.
    auto reinsert(const Graph & g, const Partition & partition, Vertex v, const Pattern & t) -> ReinsertResult;
}
