#include <hfree/counting.hpp>
#include <hfree/error.hpp>

#include <algorithm>
#include <bit>

namespace hfree
{
    namespace
    {
        using Wide = unsigned __int128;

        auto above(Vertex v) -> Mask
        {
            return ~low_bits(v + 1);
        }

        auto to_count(Wide value) -> Count
        {
            Count hi = static_cast<std::uint64_t>(value >> 64);
            return (hi << 64) + static_cast<std::uint64_t>(value);
        }

        auto cliques_from(const Graph & g, Mask cand, int depth) -> std::uint64_t
        {
            if (depth == 0)
                return 1;
            if (depth == 1)
                return static_cast<std::uint64_t>(std::popcount(cand));
            std::uint64_t total = 0;
            for (Mask m = cand; m; m &= m - 1) {
                Vertex v = std::countr_zero(m);
                Mask next = cand & g.row(v) & above(v);
                if (std::popcount(next) >= depth - 1)
                    total += cliques_from(g, next, depth - 1);
            }
            return total;
        }

        // Classes are emitted in increasing order of their smallest vertex, so each
        // unordered family of m classes is reached exactly once.
        class BlowupCounter
        {
        public:
            BlowupCounter(const Graph & g, int t) : _g(g), _t(t) {}

            void classes(Mask cand, int remaining)
            {
                if (remaining == 1) {
                    total += binomial(static_cast<std::uint64_t>(std::popcount(cand)), static_cast<std::uint64_t>(_t));
                    return;
                }
                for (Mask m = cand; m; m &= m - 1) {
                    Vertex anchor = std::countr_zero(m);
                    Mask pool = cand & above(anchor);
                    members(pool, _t - 1, pool & _g.row(anchor), remaining);
                }
            }

        private:
            void members(Mask pool, int need, Mask common, int remaining)
            {
                if (std::popcount(common) < (remaining - 1) * _t)
                    return;
                if (need == 0) {
                    classes(common, remaining - 1);
                    return;
                }
                for (Mask m = pool; m; m &= m - 1) {
                    Vertex x = std::countr_zero(m);
                    members(pool & above(x), need - 1, common & _g.row(x), remaining);
                }
            }

            const Graph & _g;
            int _t;

        public:
            Count total = 0;
        };

        /// Backtracking embedder of a pattern into a word graph, pattern vertices
        /// taken in a connectivity-first order so each step intersects neighbour rows.
        class Embedder
        {
        public:
            Embedder(const Graph & g, const Graph & h, std::span<const std::pair<Vertex, Vertex>> pins) :
                _g(g),
                _h(h)
            {
                require_word_graph(g, "subgraph search");
                require_word_graph(h, "subgraph search");
                int k = h.order();
                std::vector<bool> placed(static_cast<std::size_t>(k), false);
                std::vector<Mask> pin_mask(static_cast<std::size_t>(k), g.vertices());

                for (auto [p, v] : pins) {
                    _order.push_back(p);
                    placed[static_cast<std::size_t>(p)] = true;
                    pin_mask[static_cast<std::size_t>(p)] = bit(v) & g.vertices();
                }
                while (static_cast<int>(_order.size()) < k) {
                    Vertex best = -1;
                    int best_links = -1, best_degree = -1;
                    for (Vertex p = 0; p < k; ++p) {
                        if (placed[static_cast<std::size_t>(p)])
                            continue;
                        int links = 0;
                        for (Vertex q : _order)
                            links += h.has_edge(p, q) ? 1 : 0;
                        int d = h.degree(p);
                        if (links > best_links || (links == best_links && d > best_degree)) {
                            best = p;
                            best_links = links;
                            best_degree = d;
                        }
                    }
                    _order.push_back(best);
                    placed[static_cast<std::size_t>(best)] = true;
                }

                _back.resize(static_cast<std::size_t>(k));
                _allowed.resize(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) {
                    Vertex p = _order[static_cast<std::size_t>(i)];
                    for (int j = 0; j < i; ++j)
                        if (h.has_edge(p, _order[static_cast<std::size_t>(j)]))
                            _back[static_cast<std::size_t>(i)].push_back(j);
                    Mask ok = 0;
                    int need = h.degree(p);
                    for (Vertex x = 0; x < g.order(); ++x)
                        if (g.degree(x) >= need)
                            ok |= bit(x);
                    _allowed[static_cast<std::size_t>(i)] = ok & pin_mask[static_cast<std::size_t>(p)];
                }
                _image.assign(static_cast<std::size_t>(k), -1);
            }

            auto count() -> Wide
            {
                if (_order.empty())
                    return 1;
                return count_from(0, 0);
            }

            auto find() -> std::optional<std::vector<Vertex>>
            {
                if (! find_from(0, 0))
                    return std::nullopt;
                std::vector<Vertex> result(_order.size());
                for (std::size_t i = 0; i < _order.size(); ++i)
                    result[static_cast<std::size_t>(_order[i])] = _image[i];
                return result;
            }

        private:
            auto candidates(std::size_t i, Mask used) const -> Mask
            {
                Mask cand = _allowed[i] & ~used;
                for (int j : _back[i])
                    cand &= _g.row(_image[static_cast<std::size_t>(j)]);
                return cand;
            }

            auto count_from(std::size_t i, Mask used) -> Wide
            {
                Mask cand = candidates(i, used);
                if (i + 1 == _order.size())
                    return static_cast<Wide>(std::popcount(cand));
                Wide total = 0;
                for (Mask m = cand; m; m &= m - 1) {
                    Vertex x = std::countr_zero(m);
                    _image[i] = x;
                    total += count_from(i + 1, used | bit(x));
                }
                return total;
            }

            auto find_from(std::size_t i, Mask used) -> bool
            {
                if (i == _order.size())
                    return true;
                Mask cand = candidates(i, used);
                for (Mask m = cand; m; m &= m - 1) {
                    Vertex x = std::countr_zero(m);
                    _image[i] = x;
                    if (find_from(i + 1, used | bit(x)))
                        return true;
                }
                return false;
            }

            const Graph & _g;
            const Graph & _h;
            std::vector<Vertex> _order;
            std::vector<std::vector<int>> _back;
            std::vector<Mask> _allowed;
            std::vector<Vertex> _image;
        };

        void check_generic_budget(const Graph & pattern)
        {
            if (pattern.order() > generic_pattern_limit)
                throw BudgetExceeded("generic counting supports patterns on at most " + std::to_string(generic_pattern_limit) +
                    " vertices, got " + std::to_string(pattern.order()));
        }

        auto pattern_count_within(const Graph & g, Mask active, const Pattern & t) -> Count
        {
            switch (t.kind()) {
                case Pattern::Kind::clique:
                    return count_cliques_within(g, active, t.m());
                case Pattern::Kind::blowup:
                    return count_blowups_within(g, active, t.m(), t.t());
                case Pattern::Kind::coned_blowup: {
                    if (t.t() == 1)
                        return count_cliques_within(g, active, t.m() + 1);
                    // With t >= 2 the apex is the unique vertex of top degree.
                    Count total = 0;
                    for (Mask m = active; m; m &= m - 1) {
                        Vertex apex = std::countr_zero(m);
                        total += count_blowups_within(g, active & g.row(apex), t.m(), t.t());
                    }
                    return total;
                }
                case Pattern::Kind::arbitrary: {
                    if (active == g.vertices())
                        return count_pattern_generic(g, t.graph());
                    return count_pattern_generic(induced_subgraph(g, active).graph, t.graph());
                }
            }
            return 0;
        }
    }

    auto count_cliques_within(const Graph & g, Mask active, int m) -> Count
    {
        require_word_graph(g, "count_cliques");
        if (m < 0)
            throw InvalidArgument("count_cliques: negative clique size");
        return cliques_from(g, active & g.vertices(), m);
    }

    auto count_cliques(const Graph & g, int m) -> Count
    {
        require_word_graph(g, "count_cliques");
        return count_cliques_within(g, g.vertices(), m);
    }

    auto count_blowups_within(const Graph & g, Mask active, int m, int t) -> Count
    {
        require_word_graph(g, "count_blowups");
        if (m < 1 || t < 1)
            throw InvalidArgument("blow-up counting needs m >= 1 and t >= 1");
        if (t == 1)
            return count_cliques_within(g, active, m);
        BlowupCounter counter(g, t);
        counter.classes(active & g.vertices(), m);
        return counter.total;
    }

    auto count_pattern(const Graph & g, const Pattern & t) -> Count
    {
        require_word_graph(g, "count_pattern");
        return pattern_count_within(g, g.vertices(), t);
    }

    auto count_injective_homomorphisms(const Graph & g, const Graph & pattern,
        std::optional<std::pair<Vertex, Vertex>> pin) -> Count
    {
        check_generic_budget(pattern);
        if (pattern.order() > g.order())
            return 0;
        std::vector<std::pair<Vertex, Vertex>> pins;
        if (pin) {
            if (pin->first < 0 || pin->first >= pattern.order() || pin->second < 0 || pin->second >= g.order())
                throw InvalidArgument("pinned vertex out of range");
            pins.push_back(*pin);
        }
        Embedder e(g, pattern, pins);
        return to_count(e.count());
    }

    auto automorphism_count(const Graph & pattern) -> Count
    {
        return count_injective_homomorphisms(pattern, pattern);
    }

    auto count_pattern_generic(const Graph & g, const Graph & pattern) -> Count
    {
        check_generic_budget(pattern);
        return count_injective_homomorphisms(g, pattern) / automorphism_count(pattern);
    }

    auto find_copy(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>
    {
        if (h.order() > g.order())
            return std::nullopt;
        Embedder e(g, h, {});
        return e.find();
    }

    auto find_copy_through_edge(const Graph & g, const Graph & h, Edge e) -> std::optional<std::vector<Vertex>>
    {
        if (h.order() > g.order() || ! g.has_edge(e.u, e.v))
            return std::nullopt;
        for (auto & he : h.edges()) {
            for (int flip = 0; flip < 2; ++flip) {
                std::pair<Vertex, Vertex> pins[2] = {{he.u, flip ? e.v : e.u}, {he.v, flip ? e.u : e.v}};
                Embedder search(g, h, pins);
                if (auto found = search.find())
                    return found;
            }
        }
        return std::nullopt;
    }

    auto contains(const Graph & g, const Graph & h) -> bool
    {
        return find_copy(g, h).has_value();
    }

    auto copies_through_vertex(const Graph & g, const Pattern & t, Vertex v) -> Count
    {
        require_word_graph(g, "copies_through_vertex");
        if (v < 0 || v >= g.order())
            throw InvalidArgument("copies_through_vertex: vertex " + std::to_string(v) + " out of range");

        switch (t.kind()) {
            case Pattern::Kind::clique:
                return count_cliques_within(g, g.row(v), t.m() - 1);
            case Pattern::Kind::blowup:
            case Pattern::Kind::coned_blowup:
                return pattern_count_within(g, g.vertices(), t) - pattern_count_within(g, g.vertices() & ~bit(v), t);
            case Pattern::Kind::arbitrary: {
                check_generic_budget(t.graph());
                Count homs = 0;
                for (Vertex p = 0; p < t.vertex_count(); ++p)
                    homs += count_injective_homomorphisms(g, t.graph(), std::pair{p, v});
                return homs / t.automorphisms();
            }
        }
        return 0;
    }

    auto copies_through_edge(const Graph & g, const Pattern & t, Edge e) -> Count
    {
        require_word_graph(g, "copies_through_edge");
        if (! g.has_edge(e.u, e.v))
            return 0;
        if (t.kind() == Pattern::Kind::clique)
            return t.m() < 2 ? Count(0) : count_cliques_within(g, g.row(e.u) & g.row(e.v), t.m() - 2);
        Graph without = g;
        without.remove_edge(e.u, e.v);
        return count_pattern(g, t) - count_pattern(without, t);
    }
}
