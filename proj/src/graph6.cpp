#include <hfree/error.hpp>
#include <hfree/graph6.hpp>

namespace hfree
{
    namespace
    {
        constexpr std::string_view header = ">>graph6<<";

        void encode_order(std::string & out, std::uint64_t n)
        {
            if (n <= 62)
                out += static_cast<char>(n + 63);
            else if (n <= 258047) {
                out += '~';
                for (int shift = 12; shift >= 0; shift -= 6)
                    out += static_cast<char>(((n >> shift) & 63u) + 63);
            }
            else {
                out += "~~";
                for (int shift = 30; shift >= 0; shift -= 6)
                    out += static_cast<char>(((n >> shift) & 63u) + 63);
            }
        }

        auto sextet(char c) -> unsigned
        {
            if (c < 63 || c > 126)
                throw InvalidArgument(std::string("graph6: byte '") + c + "' outside the printable range 63..126");
            return static_cast<unsigned>(c - 63);
        }
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        std::string out;
        auto n = g.order();
        encode_order(out, static_cast<std::uint64_t>(n));

        unsigned acc = 0;
        int filled = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
                if (++filled == 6) {
                    out += static_cast<char>(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled)
            out += static_cast<char>((acc << (6 - filled)) + 63);
        return out;
    }

    auto from_graph6(std::string_view text) -> Graph
    {
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
            text.remove_suffix(1);
        if (text.empty())
            throw InvalidArgument("graph6: empty string");

        std::size_t pos = 0;
        std::uint64_t n = 0;
        if (text[0] != '~')
            n = sextet(text[pos++]);
        else if (text.size() >= 2 && text[1] == '~') {
            if (text.size() < 8)
                throw InvalidArgument("graph6: truncated vertex count");
            pos = 2;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | sextet(text[pos++]);
        }
        else {
            if (text.size() < 4)
                throw InvalidArgument("graph6: truncated vertex count");
            pos = 1;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | sextet(text[pos++]);
        }
        if (n > 1'000'000)
            throw InvalidArgument("graph6: vertex count " + std::to_string(n) + " is unreasonably large");

        std::uint64_t bits = n * (n ? n - 1 : 0) / 2;
        std::uint64_t bytes = (bits + 5) / 6;
        if (text.size() - pos != bytes)
            throw InvalidArgument("graph6: expected " + std::to_string(bytes) + " data bytes for " + std::to_string(n) +
                " vertices, found " + std::to_string(text.size() - pos));

        Graph g(static_cast<int>(n));
        std::uint64_t index = 0;
        for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
            for (Vertex i = 0; i < j; ++i, ++index) {
                unsigned value = sextet(text[pos + index / 6]);
                if ((value >> (5 - index % 6)) & 1u)
                    g.add_edge(i, j);
            }
        if (bits % 6) {
            unsigned last = sextet(text.back());
            if (last & ((1u << (6 - bits % 6)) - 1))
                throw InvalidArgument("graph6: nonzero padding bits");
        }
        return g;
    }
}
