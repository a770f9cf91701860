#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hfree
{
    using Vertex = int;

    /// One machine word of vertex membership; the kernel representation for n <= 64.
    using Mask = std::uint64_t;

    inline constexpr int word_bits = 64;

    inline constexpr auto bit(Vertex v) -> Mask
    {
        return Mask{1} << v;
    }

    /// Mask with the low n bits set.
    inline constexpr auto low_bits(int n) -> Mask
    {
        return n >= word_bits ? ~Mask{0} : (Mask{1} << n) - 1;
    }

    /// Undirected edge, always stored with u < v.
    struct Edge
    {
        Vertex u = 0, v = 0;

        Edge() = default;
        Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

        auto operator<=>(const Edge &) const = default;
    };

    /// Simple undirected graph on vertices 0..n-1, one neighbour bitset per vertex.
    ///
    /// Rows are ceil(n/64) words wide. Graphs with n <= 64 use a single word per
    /// row, which is what the counting, colouring and search kernels operate on;
    /// those kernels reject larger graphs. Parsing, emitting and generation work
    /// at any size.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
        /// Word graph from neighbour rows. Throws unless rows are symmetric and loop-free.
        static auto from_rows(std::span<const Mask> rows) -> Graph;

        auto order() const -> int { return _n; }
        auto size() const -> std::size_t;

        auto has_edge(Vertex a, Vertex b) const -> bool;
        void add_edge(Vertex a, Vertex b);
        void remove_edge(Vertex a, Vertex b);

        auto degree(Vertex v) const -> int;
        /// Zero for graphs on at most one vertex.
        auto min_degree() const -> int;
        auto max_degree() const -> int;

        auto neighbours(Vertex v) const -> std::vector<Vertex>;
        /// Sorted by (u, v).
        auto edges() const -> std::vector<Edge>;

        /// True when the single-word kernels apply.
        auto fits_word() const -> bool { return _n <= word_bits; }

        /// Neighbourhood of v as a word. Requires fits_word().
        auto row(Vertex v) const -> Mask { return _bits[static_cast<std::size_t>(v) * _words]; }

        /// Every vertex, as a word. Requires fits_word().
        auto vertices() const -> Mask { return low_bits(_n); }

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        void check_vertex(Vertex v) const;

        int _n = 0;
        std::size_t _words = 0;
        std::vector<std::uint64_t> _bits;
    };

    /// A graph derived from another one, together with the original id of each new vertex.
    struct Subgraph
    {
        Graph graph;
        std::vector<Vertex> original;
    };

    /// Deletes v; ids above v shift down by one.
    auto remove_vertex(const Graph & g, Vertex v) -> Subgraph;

    /// The subgraph induced by vset, relabelled in increasing id order.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> vset) -> Subgraph;

    /// Same, for the single-word representation.
    auto induced_subgraph(const Graph & g, Mask vset) -> Subgraph;

    /// Spanning subgraph of g's vertex set with the given edges.
    auto edge_subgraph(int n, std::span<const Edge> edges) -> Graph;

    /// Throws InvalidArgument unless g fits the single-word kernels.
    void require_word_graph(const Graph & g, const char * operation);

    auto format_edges(std::span<const Edge> edges) -> std::string;
}
