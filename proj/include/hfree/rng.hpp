#pragma once

#include <cstdint>
#include <random>

namespace hfree
{
    /// One step of splitmix64; the finaliser is a bijection on 64-bit words.
    inline constexpr auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Seed of the independent stream for one trial: splitmix64(seed ^ splitmix64(index)).
    inline constexpr auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
    {
        return splitmix64(seed ^ splitmix64(index));
    }

    /// mt19937_64 output is fixed by the standard; the helpers below avoid the
    /// implementation-defined distributions so streams agree across toolchains.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(splitmix64(seed)) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform in [0, bound) by rejection; bound > 0.
        auto below(std::uint64_t bound) -> std::uint64_t
        {
            std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
            std::uint64_t x;
            do
                x = next();
            while (x >= limit);
            return x % bound;
        }

        /// Uniform 53-bit integer.
        auto bits53() -> std::uint64_t { return next() >> 11; }

    private:
        std::mt19937_64 _engine;
    };
}
