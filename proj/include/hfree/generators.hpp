#pragma once

#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>
#include <hfree/rng.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hfree
{
    namespace gen
    {
        struct Complete { int n; };
        /// Complete r-partite graph, parts as equal as possible.
        struct Turan { int n, r; };
        /// K_m(t): K_m with every vertex replaced by an independent t-set.
        struct Blowup { int m, t; };
        /// K_m(t) plus one vertex joined to everything.
        struct ConedBlowup { int m, t; };
        struct Cycle { int n; };
        struct Gnp { int n; Rational p; std::uint64_t seed; };
        /// G(n, 1 - eps/2), then seeded augmentation up to minimum degree ceil((1 - eps) n).
        struct MinDegreeRandom { int n; Rational eps; std::uint64_t seed; };
    }

    using GenSpec = std::variant<gen::Complete, gen::Turan, gen::Blowup, gen::ConedBlowup, gen::Cycle, gen::Gnp,
          gen::MinDegreeRandom>;

    auto generate(const GenSpec & spec) -> Graph;

    /// Turán part sizes: the first n mod r parts get ceil(n / r) vertices.
    auto turan_part_sizes(int n, int r) -> std::vector<int>;

    /// The minimum degree min_degree_random guarantees: min(n - 1, ceil((1 - eps) n)).
    auto min_degree_floor(int n, const Rational & eps) -> int;

    /// The min_degree_random construction, also accepting eps = 1 (plain G(n, 1/2)).
    auto min_degree_random(int n, const Rational & eps, std::uint64_t seed) -> Graph;

    /// Adds seeded random edges at deficient vertices until every degree is at least floor.
    /// Vertices are repaired lowest id first; the partner is uniform among non-neighbours.
    void augment_min_degree(Graph & g, int floor, Rng & rng);

    /// "complete:6", "turan:9:3", "blowup:3:2", "coned_blowup:2:2", "cycle:5",
    /// "gnp:10:0.5:7", "mindeg:10:0.2:1".
    auto parse_gen_spec(std::string_view text) -> GenSpec;
    auto to_string(const GenSpec & spec) -> std::string;
}
