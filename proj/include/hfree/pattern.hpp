#pragma once

#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>

#include <string>
#include <string_view>

namespace hfree
{
    /// The graph T whose copies are counted: K_m, the blow-up K_m(t), the coned
    /// blow-up K+_m(t) (K_m(t) plus an apex joined to everything), or any graph.
    class Pattern
    {
    public:
        enum class Kind
        {
            clique,
            blowup,
            coned_blowup,
            arbitrary
        };

        static auto clique(int m) -> Pattern;
        static auto blowup(int m, int t) -> Pattern;
        static auto coned_blowup(int m, int t) -> Pattern;
        static auto arbitrary(Graph g) -> Pattern;

        auto kind() const -> Kind { return _kind; }
        auto m() const -> int { return _m; }
        auto t() const -> int { return _t; }

        /// The materialised pattern graph.
        auto graph() const -> const Graph & { return _graph; }
        auto vertex_count() const -> int { return _graph.order(); }
        auto edge_count() const -> std::size_t { return _graph.size(); }

        /// |Aut(T)|; closed form for the named families, exhaustive search otherwise.
        auto automorphisms() const -> Count;

        /// CLI literal: "K3", "K3(2)", "K3+(2)", "g6:<graph6>".
        auto literal() const -> std::string;

    private:
        Pattern(Kind kind, int m, int t, Graph graph);

        Kind _kind;
        int _m, _t;
        Graph _graph;
    };

    auto parse_pattern(std::string_view text) -> Pattern;
}
