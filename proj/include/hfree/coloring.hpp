#pragma once

#include <hfree/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hfree
{
    /// Answer of a bounded exact search. unknown means the budget ran out, never "no".
    enum class Tri
    {
        yes,
        no,
        unknown
    };

    auto to_string(Tri value) -> const char *;

    struct ColoringOptions
    {
        /// Search-tree nodes allowed per colourability query.
        std::uint64_t node_budget = 20'000'000;
        /// Replace the witness by the lexicographically least proper colouring.
        bool canonical_witness = true;
    };

    struct Colorability
    {
        Tri answer = Tri::unknown;
        /// Colour of each vertex when answer is yes, empty otherwise.
        std::vector<int> witness;
        std::uint64_t nodes = 0;
    };

    /// Exact k-colourability by DSATUR backtracking on each connected component.
    auto is_k_colorable(const Graph & g, int k, const ColoringOptions & options = {}) -> Colorability;

    struct ColorResult
    {
        int chromatic_number = 0;
        std::vector<int> witness;
    };

    /// Smallest k admitting a proper colouring; 0 for the empty graph. Throws BudgetExceeded.
    auto chromatic_number(const Graph & g, const ColoringOptions & options = {}) -> ColorResult;

    /// Independent check: every vertex coloured with a value in [0, k), no monochromatic edge.
    auto is_proper_coloring(const Graph & g, std::span<const int> colors, int k) -> bool;

    auto colors_used(std::span<const int> colors) -> int;

    struct EdgeCriticality
    {
        bool critical = false;
        /// Lowest edge whose removal lowers the chromatic number.
        std::optional<Edge> edge;
        int chromatic_number = 0;
    };

    /// Requires at least one edge. Throws BudgetExceeded.
    auto is_edge_critical(const Graph & h, const ColoringOptions & options = {}) -> EdgeCriticality;

    /// Lowest v with chi(h - v) = chi(h) - 1, or nullopt when no vertex has that property
    /// (for instance K_3(2)). Requires a nonempty graph. Throws BudgetExceeded.
    auto critical_vertex(const Graph & h, const ColoringOptions & options = {}) -> std::optional<Vertex>;
}
