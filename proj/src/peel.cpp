#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/peel.hpp>

namespace hfree
{
    auto to_string(StopReason reason) -> std::string_view
    {
        switch (reason) {
            case StopReason::degree_threshold_met: return "degree_threshold_met";
            case StopReason::floor_reached: return "floor_reached";
        }
        return "?";
    }

    auto below_peel_threshold(int degree, int n, int k) -> bool
    {
        return static_cast<long long>(degree) * (3 * k - 4) < static_cast<long long>(3 * k - 7) * n;
    }

    auto peel(const Graph & g, int k, const Pattern & t, int floor) -> PeelResult
    {
        require_word_graph(g, "peel");
        if (k < 2)
            throw InvalidArgument("peel: k must be at least 2");
        if (floor < 0)
            throw InvalidArgument("peel: floor must be non-negative");

        PeelResult result;
        result.core.graph = g;
        result.core.original.resize(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v)
            result.core.original[static_cast<std::size_t>(v)] = v;

        auto & current = result.core.graph;
        auto & original = result.core.original;
        while (true) {
            int n = current.order();
            if (n <= floor) {
                result.trace.stop_reason = StopReason::floor_reached;
                break;
            }
            Vertex chosen = 0;
            for (Vertex v = 1; v < n; ++v)
                if (current.degree(v) < current.degree(chosen))
                    chosen = v;
            int d = current.degree(chosen);
            if (! below_peel_threshold(d, n, k)) {
                result.trace.stop_reason = StopReason::degree_threshold_met;
                break;
            }
            result.trace.steps.push_back(
                {original[static_cast<std::size_t>(chosen)], d, n, copies_through_vertex(current, t, chosen)});
            current = remove_vertex(current, chosen).graph;
            original.erase(original.begin() + chosen);
        }
        result.trace.exceeded_half = 2 * result.trace.steps.size() > static_cast<std::size_t>(g.order());
        return result;
    }
}
