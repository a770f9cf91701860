#include <hfree/error.hpp>
#include <hfree/generators.hpp>
#include <hfree/rng.hpp>

#include <charconv>

namespace hfree
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        void require(bool ok, const std::string & message)
        {
            if (! ok)
                throw InvalidArgument(message);
        }

        /// Edge iff a uniform 53-bit draw falls below floor(p * 2^53).
        auto bernoulli_threshold(const Rational & p) -> std::uint64_t
        {
            Count scaled = boost::multiprecision::numerator(p) * (Count(1) << 53) / boost::multiprecision::denominator(p);
            return static_cast<std::uint64_t>(scaled);
        }

        auto sample_gnp(int n, const Rational & p, Rng & rng) -> Graph
        {
            Graph g(n);
            auto threshold = bernoulli_threshold(p);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.bits53() < threshold)
                        g.add_edge(u, v);
            return g;
        }

        auto complete_multipartite(const std::vector<int> & sizes) -> Graph
        {
            int n = 0;
            std::vector<int> part_of;
            for (std::size_t p = 0; p < sizes.size(); ++p)
                for (int i = 0; i < sizes[p]; ++i, ++n)
                    part_of.push_back(static_cast<int>(p));
            Graph g(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                        g.add_edge(u, v);
            return g;
        }

        auto parse_int(std::string_view s, std::string_view whole) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw InvalidArgument("generator spec '" + std::string(whole) + "': '" + std::string(s) + "' is not an integer");
            return value;
        }

        auto parse_seed(std::string_view s, std::string_view whole) -> std::uint64_t
        {
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw InvalidArgument("generator spec '" + std::string(whole) + "': bad seed '" + std::string(s) + "'");
            return value;
        }
    }

    auto turan_part_sizes(int n, int r) -> std::vector<int>
    {
        require(r >= 1, "turan: r must be at least 1");
        require(n >= 0, "turan: n must be nonnegative");
        std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
        for (int i = 0; i < n % r; ++i)
            ++sizes[static_cast<std::size_t>(i)];
        return sizes;
    }

    auto min_degree_floor(int n, const Rational & eps) -> int
    {
        if (n <= 1)
            return 0;
        auto floor = hfree::ceil((1 - eps) * n);
        if (floor < 0)
            return 0;
        return floor > n - 1 ? n - 1 : static_cast<int>(floor);
    }

    void augment_min_degree(Graph & g, int floor, Rng & rng)
    {
        int n = g.order();
        for (Vertex v = 0; v < n; ++v)
            while (g.degree(v) < floor) {
                std::vector<Vertex> missing;
                for (Vertex w = 0; w < n; ++w)
                    if (w != v && ! g.has_edge(v, w))
                        missing.push_back(w);
                g.add_edge(v, missing[rng.below(missing.size())]);
            }
    }

    auto min_degree_random(int n, const Rational & eps, std::uint64_t seed) -> Graph
    {
        require(n >= 0, "mindeg: n must be nonnegative");
        require(eps >= 0 && eps <= 1, "mindeg: eps must lie in [0, 1]");
        Rng rng(seed);
        auto g = sample_gnp(n, 1 - eps / 2, rng);
        augment_min_degree(g, min_degree_floor(n, eps), rng);
        return g;
    }

    auto generate(const GenSpec & spec) -> Graph
    {
        return std::visit(overloaded{
            [](const gen::Complete & s) {
                require(s.n >= 0, "complete: n must be nonnegative");
                return complete_multipartite(std::vector<int>(static_cast<std::size_t>(s.n), 1));
            },
            [](const gen::Turan & s) {
                return complete_multipartite(turan_part_sizes(s.n, s.r));
            },
            [](const gen::Blowup & s) {
                require(s.m >= 1 && s.t >= 1, "blowup: m and t must be at least 1");
                return complete_multipartite(std::vector<int>(static_cast<std::size_t>(s.m), s.t));
            },
            [](const gen::ConedBlowup & s) {
                require(s.m >= 1 && s.t >= 1, "coned_blowup: m and t must be at least 1");
                auto g = complete_multipartite(std::vector<int>(static_cast<std::size_t>(s.m), s.t));
                Graph coned(g.order() + 1);
                for (auto & e : g.edges())
                    coned.add_edge(e.u, e.v);
                for (Vertex v = 0; v < g.order(); ++v)
                    coned.add_edge(v, g.order());
                return coned;
            },
            [](const gen::Cycle & s) {
                require(s.n >= 3, "cycle: n must be at least 3");
                Graph g(s.n);
                for (Vertex v = 0; v < s.n; ++v)
                    g.add_edge(v, (v + 1) % s.n);
                return g;
            },
            [](const gen::Gnp & s) {
                require(s.n >= 0, "gnp: n must be nonnegative");
                require(s.p >= 0 && s.p <= 1, "gnp: p must lie in [0, 1]");
                Rng rng(s.seed);
                return sample_gnp(s.n, s.p, rng);
            },
            [](const gen::MinDegreeRandom & s) {
                require(s.n >= 0, "mindeg: n must be nonnegative");
                require(s.eps >= 0 && s.eps < 1, "mindeg: eps must lie in [0, 1)");
                return min_degree_random(s.n, s.eps, s.seed);
            }},
            spec);
    }

    auto parse_gen_spec(std::string_view text) -> GenSpec
    {
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            auto colon = text.find(':', start);
            fields.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
            if (colon == std::string_view::npos)
                break;
            start = colon + 1;
        }

        auto kind = fields[0];
        auto arity = [&](std::size_t k) {
            if (fields.size() != k + 1)
                throw InvalidArgument("generator spec '" + std::string(text) + "': '" + std::string(kind) + "' takes " +
                    std::to_string(k) + " parameters");
        };
        auto i = [&](std::size_t idx) { return static_cast<int>(parse_int(fields[idx], text)); };

        if (kind == "complete") {
            arity(1);
            return gen::Complete{i(1)};
        }
        if (kind == "turan") {
            arity(2);
            return gen::Turan{i(1), i(2)};
        }
        if (kind == "blowup") {
            arity(2);
            return gen::Blowup{i(1), i(2)};
        }
        if (kind == "coned_blowup") {
            arity(2);
            return gen::ConedBlowup{i(1), i(2)};
        }
        if (kind == "cycle") {
            arity(1);
            return gen::Cycle{i(1)};
        }
        if (kind == "gnp") {
            arity(3);
            return gen::Gnp{i(1), parse_rational(fields[2]), parse_seed(fields[3], text)};
        }
        if (kind == "mindeg") {
            arity(3);
            return gen::MinDegreeRandom{i(1), parse_rational(fields[2]), parse_seed(fields[3], text)};
        }
        throw InvalidArgument("unknown generator '" + std::string(kind) + "'");
    }

    auto to_string(const GenSpec & spec) -> std::string
    {
        return std::visit(overloaded{
            [](const gen::Complete & s) { return "complete:" + std::to_string(s.n); },
            [](const gen::Turan & s) { return "turan:" + std::to_string(s.n) + ":" + std::to_string(s.r); },
            [](const gen::Blowup & s) { return "blowup:" + std::to_string(s.m) + ":" + std::to_string(s.t); },
            [](const gen::ConedBlowup & s) { return "coned_blowup:" + std::to_string(s.m) + ":" + std::to_string(s.t); },
            [](const gen::Cycle & s) { return "cycle:" + std::to_string(s.n); },
            [](const gen::Gnp & s) { return "gnp:" + std::to_string(s.n) + ":" + to_string(s.p) + ":" + std::to_string(s.seed); },
            [](const gen::MinDegreeRandom & s) {
                return "mindeg:" + std::to_string(s.n) + ":" + to_string(s.eps) + ":" + std::to_string(s.seed);
            }},
            spec);
    }
}
