#include <hfree/error.hpp>
#include <hfree/graph.hpp>

#include <algorithm>
#include <bit>
#include <limits>

namespace hfree
{
    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 0)
            throw InvalidArgument("negative vertex count");
        _words = (static_cast<std::size_t>(n) + word_bits - 1) / word_bits;
        _bits.assign(static_cast<std::size_t>(n) * _words, 0);
    }

    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        Graph g(n);
        for (auto & e : edges)
            g.add_edge(e.u, e.v);
        return g;
    }

    auto Graph::from_rows(std::span<const Mask> rows) -> Graph
    {
        if (rows.size() > static_cast<std::size_t>(word_bits))
            throw InvalidArgument("from_rows: more than " + std::to_string(word_bits) + " rows");
        Graph g(static_cast<int>(rows.size()));
        Mask all = g.vertices();
        for (std::size_t v = 0; v < rows.size(); ++v) {
            Mask r = rows[v];
            if ((r & ~all) || (r & bit(static_cast<Vertex>(v))))
                throw InvalidArgument("from_rows: row " + std::to_string(v) + " has a loop or an out-of-range bit");
            for (Mask rest = r; rest; rest &= rest - 1)
                if (! (rows[static_cast<std::size_t>(std::countr_zero(rest))] & bit(static_cast<Vertex>(v))))
                    throw InvalidArgument("from_rows: rows are not symmetric");
            g._bits[v] = r;
        }
        return g;
    }

    void Graph::check_vertex(Vertex v) const
    {
        if (v < 0 || v >= _n)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range for a graph on " + std::to_string(_n) + " vertices");
    }

    auto Graph::size() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto w : _bits)
            twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    auto Graph::has_edge(Vertex a, Vertex b) const -> bool
    {
        check_vertex(a);
        check_vertex(b);
        return (_bits[static_cast<std::size_t>(a) * _words + static_cast<std::size_t>(b) / word_bits] >> (b % word_bits)) & 1u;
    }

    void Graph::add_edge(Vertex a, Vertex b)
    {
        check_vertex(a);
        check_vertex(b);
        if (a == b)
            throw InvalidArgument("self-loop at vertex " + std::to_string(a));
        _bits[static_cast<std::size_t>(a) * _words + static_cast<std::size_t>(b) / word_bits] |= Mask{1} << (b % word_bits);
        _bits[static_cast<std::size_t>(b) * _words + static_cast<std::size_t>(a) / word_bits] |= Mask{1} << (a % word_bits);
    }

    void Graph::remove_edge(Vertex a, Vertex b)
    {
        check_vertex(a);
        check_vertex(b);
        _bits[static_cast<std::size_t>(a) * _words + static_cast<std::size_t>(b) / word_bits] &= ~(Mask{1} << (b % word_bits));
        _bits[static_cast<std::size_t>(b) * _words + static_cast<std::size_t>(a) / word_bits] &= ~(Mask{1} << (a % word_bits));
    }

    auto Graph::degree(Vertex v) const -> int
    {
        check_vertex(v);
        int d = 0;
        for (std::size_t w = 0; w < _words; ++w)
            d += std::popcount(_bits[static_cast<std::size_t>(v) * _words + w]);
        return d;
    }

    auto Graph::min_degree() const -> int
    {
        if (_n <= 1)
            return 0;
        int best = std::numeric_limits<int>::max();
        for (Vertex v = 0; v < _n; ++v)
            best = std::min(best, degree(v));
        return best;
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (Vertex v = 0; v < _n; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    auto Graph::neighbours(Vertex v) const -> std::vector<Vertex>
    {
        check_vertex(v);
        std::vector<Vertex> result;
        for (std::size_t w = 0; w < _words; ++w)
            for (Mask m = _bits[static_cast<std::size_t>(v) * _words + w]; m; m &= m - 1)
                result.push_back(static_cast<Vertex>(w * word_bits) + std::countr_zero(m));
        return result;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < _n; ++u)
            for (Vertex v : neighbours(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto remove_vertex(const Graph & g, Vertex v) -> Subgraph
    {
        if (v < 0 || v >= g.order())
            throw InvalidArgument("remove_vertex: vertex " + std::to_string(v) + " out of range");
        std::vector<Vertex> keep;
        keep.reserve(static_cast<std::size_t>(g.order()));
        for (Vertex u = 0; u < g.order(); ++u)
            if (u != v)
                keep.push_back(u);
        return induced_subgraph(g, keep);
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> vset) -> Subgraph
    {
        std::vector<Vertex> sorted(vset.begin(), vset.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidArgument("induced_subgraph: repeated vertex");
        for (Vertex v : sorted)
            if (v < 0 || v >= g.order())
                throw InvalidArgument("induced_subgraph: vertex " + std::to_string(v) + " out of range");

        Subgraph result{Graph(static_cast<int>(sorted.size())), sorted};
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                if (g.has_edge(sorted[i], sorted[j]))
                    result.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return result;
    }

    auto induced_subgraph(const Graph & g, Mask vset) -> Subgraph
    {
        require_word_graph(g, "induced_subgraph");
        vset &= g.vertices();
        std::vector<Vertex> ids;
        for (Mask m = vset; m; m &= m - 1)
            ids.push_back(std::countr_zero(m));

        Subgraph result{Graph(static_cast<int>(ids.size())), ids};
        for (std::size_t i = 0; i < ids.size(); ++i) {
            Mask row = g.row(ids[i]);
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (row & bit(ids[j]))
                    result.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
        return result;
    }

    auto edge_subgraph(int n, std::span<const Edge> edges) -> Graph
    {
        return Graph::from_edges(n, edges);
    }

    void require_word_graph(const Graph & g, const char * operation)
    {
        if (! g.fits_word())
            throw InvalidArgument(std::string(operation) + ": graphs above " + std::to_string(word_bits) +
                " vertices are not supported by this kernel");
    }

    auto format_edges(std::span<const Edge> edges) -> std::string
    {
        std::string out;
        for (auto & e : edges) {
            if (! out.empty())
                out += ' ';
            out += std::to_string(e.u) + "-" + std::to_string(e.v);
        }
        return out;
    }
}
