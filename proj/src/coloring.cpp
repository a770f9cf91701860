#include <hfree/coloring.hpp>
#include <hfree/error.hpp>

#include <bit>

namespace hfree
{
    namespace
    {
        struct OutOfBudget
        {
        };

        auto components(const Graph & g) -> std::vector<Mask>
        {
            std::vector<Mask> result;
            Mask unseen = g.vertices();
            while (unseen) {
                Mask comp = bit(std::countr_zero(unseen)), frontier = comp;
                while (frontier) {
                    Mask next = 0;
                    for (Mask m = frontier; m; m &= m - 1)
                        next |= g.row(std::countr_zero(m));
                    frontier = next & ~comp;
                    comp |= next;
                }
                result.push_back(comp);
                unseen &= ~comp;
            }
            return result;
        }

        class Colourer
        {
        public:
            Colourer(const Graph & g, int k, std::uint64_t budget) :
                _g(g),
                _k(k),
                _budget(budget),
                _color(static_cast<std::size_t>(g.order()), -1)
            {
            }

            auto dsatur(Mask uncoloured, int max_used) -> bool
            {
                if (! uncoloured)
                    return true;
                tick();

                Vertex pick = -1;
                int best_sat = -1, best_deg = -1;
                Mask pick_avail = 0;
                for (Mask m = uncoloured; m; m &= m - 1) {
                    Vertex v = std::countr_zero(m);
                    Mask used = neighbour_colours(v);
                    int sat = std::popcount(used);
                    int deg = std::popcount(_g.row(v) & uncoloured);
                    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                        pick = v;
                        best_sat = sat;
                        best_deg = deg;
                        pick_avail = low_bits(_k) & ~used;
                    }
                }
                if (! pick_avail)
                    return false;

                for (Mask m = pick_avail & low_bits(max_used + 2); m; m &= m - 1) {
                    int c = std::countr_zero(m);
                    _color[static_cast<std::size_t>(pick)] = c;
                    if (dsatur(uncoloured & ~bit(pick), std::max(max_used, c)))
                        return true;
                }
                _color[static_cast<std::size_t>(pick)] = -1;
                return false;
            }

            /// Colours order[i..] in sequence, smallest feasible colour first.
            auto lexicographic(const std::vector<Vertex> & order, std::size_t i, int max_used) -> bool
            {
                if (i == order.size())
                    return true;
                tick();
                Vertex v = order[i];
                Mask avail = low_bits(_k) & ~neighbour_colours(v) & low_bits(max_used + 2);
                for (Mask m = avail; m; m &= m - 1) {
                    int c = std::countr_zero(m);
                    _color[static_cast<std::size_t>(v)] = c;
                    bool wiped = false;
                    for (Mask nb = _g.row(v); nb && ! wiped; nb &= nb - 1) {
                        Vertex u = std::countr_zero(nb);
                        if (_color[static_cast<std::size_t>(u)] < 0 && ! (low_bits(_k) & ~neighbour_colours(u)))
                            wiped = true;
                    }
                    if (! wiped && lexicographic(order, i + 1, std::max(max_used, c)))
                        return true;
                }
                _color[static_cast<std::size_t>(v)] = -1;
                return false;
            }

            void clear(Mask vs)
            {
                for (Mask m = vs; m; m &= m - 1)
                    _color[static_cast<std::size_t>(std::countr_zero(m))] = -1;
            }

            auto colours() const -> const std::vector<int> & { return _color; }
            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            void tick()
            {
                if (++_nodes > _budget)
                    throw OutOfBudget{};
            }

            auto neighbour_colours(Vertex v) const -> Mask
            {
                Mask used = 0;
                for (Mask nb = _g.row(v); nb; nb &= nb - 1) {
                    int c = _color[static_cast<std::size_t>(std::countr_zero(nb))];
                    if (c >= 0)
                        used |= bit(c);
                }
                return used;
            }

            const Graph & _g;
            int _k;
            std::uint64_t _budget;
            std::uint64_t _nodes = 0;
            std::vector<int> _color;
        };

        /// Relabels colours in order of first appearance.
        void normalise(std::vector<int> & colors)
        {
            std::vector<int> map;
            for (auto & c : colors) {
                if (static_cast<std::size_t>(c) >= map.size())
                    map.resize(static_cast<std::size_t>(c) + 1, -1);
                if (map[static_cast<std::size_t>(c)] < 0)
                    map[static_cast<std::size_t>(c)] = *std::max_element(map.begin(), map.end()) + 1;
                c = map[static_cast<std::size_t>(c)];
            }
        }
    }

    auto to_string(Tri value) -> const char *
    {
        switch (value) {
            case Tri::yes: return "yes";
            case Tri::no: return "no";
            case Tri::unknown: return "unknown";
        }
        return "unknown";
    }

    auto is_k_colorable(const Graph & g, int k, const ColoringOptions & options) -> Colorability
    {
        require_word_graph(g, "is_k_colorable");
        if (k < 0)
            throw InvalidArgument("is_k_colorable: k must be nonnegative");
        if (g.order() == 0)
            return {Tri::yes, {}, 0};
        if (k == 0)
            return {Tri::no, {}, 0};
        k = std::min(k, g.order());

        Colourer colourer(g, k, options.node_budget);
        auto parts = components(g);
        try {
            for (Mask comp : parts)
                if (! colourer.dsatur(comp, -1))
                    return {Tri::no, {}, colourer.nodes()};
        }
        catch (const OutOfBudget &) {
            return {Tri::unknown, {}, colourer.nodes()};
        }

        Colorability result{Tri::yes, colourer.colours(), colourer.nodes()};
        if (options.canonical_witness) {
            try {
                Colourer lex(g, k, options.node_budget);
                for (Mask comp : parts) {
                    std::vector<Vertex> order;
                    for (Mask m = comp; m; m &= m - 1)
                        order.push_back(std::countr_zero(m));
                    lex.lexicographic(order, 0, -1);
                }
                result.witness = lex.colours();
                result.nodes += lex.nodes();
                return result;
            }
            catch (const OutOfBudget &) {
                // keep the DSATUR witness
            }
        }
        normalise(result.witness);
        return result;
    }

    auto is_proper_coloring(const Graph & g, std::span<const int> colors, int k) -> bool
    {
        if (colors.size() != static_cast<std::size_t>(g.order()))
            return false;
        for (int c : colors)
            if (c < 0 || c >= k)
                return false;
        for (auto & e : g.edges())
            if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)])
                return false;
        return true;
    }

    auto colors_used(std::span<const int> colors) -> int
    {
        Mask seen = 0;
        for (int c : colors)
            if (c >= 0 && c < word_bits)
                seen |= bit(c);
        return std::popcount(seen);
    }

    auto chromatic_number(const Graph & g, const ColoringOptions & options) -> ColorResult
    {
        require_word_graph(g, "chromatic_number");
        if (g.order() == 0)
            return {0, {}};
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            auto answer = is_k_colorable(g, k, options);
            if (answer.answer == Tri::unknown)
                throw BudgetExceeded("chromatic_number: node budget exhausted at k = " + std::to_string(k));
            if (answer.answer == Tri::yes) {
                if (! is_proper_coloring(g, answer.witness, k))
                    throw Error("chromatic_number: internal error, improper witness");
                return {k, std::move(answer.witness)};
            }
        }
        throw Error("chromatic_number: no colouring within max degree + 1 colours");
    }

    auto is_edge_critical(const Graph & h, const ColoringOptions & options) -> EdgeCriticality
    {
        if (h.size() == 0)
            throw InvalidArgument("is_edge_critical: graph has no edges");
        int chi = chromatic_number(h, options).chromatic_number;
        EdgeCriticality result{false, std::nullopt, chi};
        for (auto & e : h.edges()) {
            auto without = h;
            without.remove_edge(e.u, e.v);
            auto answer = is_k_colorable(without, chi - 1, options);
            if (answer.answer == Tri::unknown)
                throw BudgetExceeded("is_edge_critical: node budget exhausted");
            if (answer.answer == Tri::yes) {
                result.critical = true;
                result.edge = e;
                break;
            }
        }
        return result;
    }

    auto critical_vertex(const Graph & h, const ColoringOptions & options) -> std::optional<Vertex>
    {
        if (h.order() == 0)
            throw InvalidArgument("critical_vertex: graph is empty");
        int chi = chromatic_number(h, options).chromatic_number;
        for (Vertex v = 0; v < h.order(); ++v) {
            auto answer = is_k_colorable(remove_vertex(h, v).graph, chi - 1, options);
            if (answer.answer == Tri::unknown)
                throw BudgetExceeded("critical_vertex: node budget exhausted");
            if (answer.answer == Tri::yes)
                return v;
        }
        return std::nullopt;
    }
}
