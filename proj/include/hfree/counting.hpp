#pragma once

#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>
#include <hfree/pattern.hpp>

#include <optional>
#include <vector>

namespace hfree
{
    /// Largest pattern the generic injective-homomorphism counter accepts.
    inline constexpr int generic_pattern_limit = 12;

    /// Number of m-subsets inducing a complete graph; 1 for m = 0, n for m = 1.
    auto count_cliques(const Graph & g, int m) -> Count;

    /// Cliques of size m using only vertices in active.
    auto count_cliques_within(const Graph & g, Mask active, int m) -> Count;

    /// Unordered families of m disjoint t-sets, pairwise completely joined, inside active.
    auto count_blowups_within(const Graph & g, Mask active, int m, int t) -> Count;

    /// N(g, T): subgraph copies, i.e. injective homomorphisms divided by |Aut(T)|.
    /// Dispatches to the clique and blow-up fast paths where they apply.
    auto count_pattern(const Graph & g, const Pattern & t) -> Count;

    /// The generic route for any pattern, regardless of kind. Throws
    /// BudgetExceeded when the pattern has more than generic_pattern_limit vertices.
    auto count_pattern_generic(const Graph & g, const Graph & pattern) -> Count;

    /// Injective edge-preserving maps pattern -> g. With pin = (p, v), only maps sending p to v.
    auto count_injective_homomorphisms(const Graph & g, const Graph & pattern,
        std::optional<std::pair<Vertex, Vertex>> pin = std::nullopt) -> Count;

    /// |Aut(pattern)| by exhaustive backtracking.
    auto automorphism_count(const Graph & pattern) -> Count;

    /// An embedding of h in g as the image of every h-vertex, if one exists.
    auto find_copy(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>;

    /// An embedding of h in g that uses edge e (which must be present in g).
    auto find_copy_through_edge(const Graph & g, const Graph & h, Edge e) -> std::optional<std::vector<Vertex>>;

    /// True iff g has a (not necessarily induced) subgraph isomorphic to h.
    auto contains(const Graph & g, const Graph & h) -> bool;

    /// Copies of T that contain v.
    auto copies_through_vertex(const Graph & g, const Pattern & t, Vertex v) -> Count;

    /// Copies of T that contain edge e; zero when e is absent.
    auto copies_through_edge(const Graph & g, const Pattern & t, Edge e) -> Count;
}
