#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/generators.hpp>
#include <hfree/graph6.hpp>
#include <hfree/pattern.hpp>

#include <cctype>

namespace hfree
{
    Pattern::Pattern(Kind kind, int m, int t, Graph graph) :
        _kind(kind),
        _m(m),
        _t(t),
        _graph(std::move(graph))
    {
    }

    auto Pattern::clique(int m) -> Pattern
    {
        if (m < 1)
            throw InvalidArgument("clique pattern needs m >= 1");
        return Pattern(Kind::clique, m, 1, generate(gen::Complete{m}));
    }

    auto Pattern::blowup(int m, int t) -> Pattern
    {
        if (m < 1 || t < 1)
            throw InvalidArgument("blow-up pattern needs m >= 1 and t >= 1");
        return Pattern(Kind::blowup, m, t, generate(gen::Blowup{m, t}));
    }

    auto Pattern::coned_blowup(int m, int t) -> Pattern
    {
        if (m < 1 || t < 1)
            throw InvalidArgument("coned blow-up pattern needs m >= 1 and t >= 1");
        return Pattern(Kind::coned_blowup, m, t, generate(gen::ConedBlowup{m, t}));
    }

    auto Pattern::arbitrary(Graph g) -> Pattern
    {
        return Pattern(Kind::arbitrary, 0, 0, std::move(g));
    }

    auto Pattern::automorphisms() const -> Count
    {
        switch (_kind) {
            case Kind::clique:
                return factorial(static_cast<unsigned>(_m));
            case Kind::blowup:
                return factorial(static_cast<unsigned>(_m)) * boost::multiprecision::pow(factorial(static_cast<unsigned>(_t)), static_cast<unsigned>(_m));
            case Kind::coned_blowup:
                // With t = 1 the apex is indistinguishable: K+_m(1) = K_{m+1}.
                if (_t == 1)
                    return factorial(static_cast<unsigned>(_m + 1));
                return factorial(static_cast<unsigned>(_m)) * boost::multiprecision::pow(factorial(static_cast<unsigned>(_t)), static_cast<unsigned>(_m));
            case Kind::arbitrary:
                return automorphism_count(_graph);
        }
        return 0;
    }

    auto Pattern::literal() const -> std::string
    {
        switch (_kind) {
            case Kind::clique:
                return "K" + std::to_string(_m);
            case Kind::blowup:
                return "K" + std::to_string(_m) + "(" + std::to_string(_t) + ")";
            case Kind::coned_blowup:
                return "K" + std::to_string(_m) + "+(" + std::to_string(_t) + ")";
            case Kind::arbitrary:
                return "g6:" + to_graph6(_graph);
        }
        return {};
    }

    auto parse_pattern(std::string_view text) -> Pattern
    {
        if (text.starts_with("g6:"))
            return Pattern::arbitrary(from_graph6(text.substr(3)));

        auto bad = [&] { return InvalidArgument("unknown pattern literal '" + std::string(text) + "'"); };
        auto read_number = [&](std::size_t & pos) {
            std::size_t start = pos;
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000)
                    throw bad();
                ++pos;
            }
            if (pos == start)
                throw bad();
            return value;
        };

        if (text.empty() || text[0] != 'K')
            throw bad();
        std::size_t pos = 1;
        int m = read_number(pos);
        if (pos == text.size())
            return Pattern::clique(m);

        bool coned = false;
        if (text[pos] == '+') {
            coned = true;
            ++pos;
        }
        if (pos >= text.size() || text[pos] != '(')
            throw bad();
        ++pos;
        int t = read_number(pos);
        if (pos + 1 != text.size() || text[pos] != ')')
            throw bad();
        return coned ? Pattern::coned_blowup(m, t) : Pattern::blowup(m, t);
    }
}
