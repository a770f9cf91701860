#pragma once

#include <hfree/graph.hpp>
#include <hfree/pattern.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hfree::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_input = 1;
    inline constexpr int exit_unknown = 2;
    inline constexpr int exit_replay_mismatch = 3;

    /// Version tag of the machine-readable lines written by --out for plain commands.
    inline constexpr std::string_view output_format = "hfree-output/1";

    /// "g6:<graph6>", "gen:<generator spec>", or a pattern literal such as "K3".
    auto parse_graph_argument(std::string_view text) -> Graph;

    /// args[0] is the program name. Human output goes to out, diagnostics to err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
