#pragma once

#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>
#include <hfree/pattern.hpp>

#include <string_view>
#include <vector>

namespace hfree
{
    enum class StopReason
    {
        degree_threshold_met,
        floor_reached
    };

    auto to_string(StopReason reason) -> std::string_view;

    struct PeelStep
    {
        /// Vertex id in the input graph.
        Vertex vertex = 0;
        int degree = 0;
        /// Order of the host graph just before the removal.
        int host_size = 0;
        /// Copies of t through the vertex at removal time.
        Count removed;
    };

    struct PeelTrace
    {
        std::vector<PeelStep> steps;
        StopReason stop_reason = StopReason::degree_threshold_met;
        /// More than n/2 removals happened.
        bool exceeded_half = false;
    };

    struct PeelResult
    {
        Subgraph core;
        PeelTrace trace;
    };

    /// True iff d < (1 - 3/(3k-4)) n, tested in integers.
    auto below_peel_threshold(int degree, int n, int k) -> bool;

    /// Removes minimum-degree vertices (lowest id first) while the minimum degree
    /// is below the threshold and more than floor vertices remain. For k = 2 the
    /// threshold is negative and nothing is removed.
    auto peel(const Graph & g, int k, const Pattern & t, int floor = 0) -> PeelResult;
}
