#pragma once

#include <hfree/graph.hpp>

#include <string>
#include <string_view>

namespace hfree
{
    /// Standard graph6 encoding, no header, no trailing newline.
    auto to_graph6(const Graph & g) -> std::string;

    /// Accepts an optional ">>graph6<<" header and trailing whitespace.
    /// Throws InvalidArgument on anything malformed.
    auto from_graph6(std::string_view text) -> Graph;
}
