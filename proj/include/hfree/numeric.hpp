#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hfree
{
    /// Exact copy counts. Small values stay inline, large ones spill to the heap.
    using Count = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

    using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

    /// Parses "3", "-2/7", "0.125" or "1e-3"-free decimals into an exact rational.
    auto parse_rational(std::string_view text) -> Rational;

    /// "p/q", or "p" when the denominator is one.
    auto to_string(const Rational & value) -> std::string;

    auto to_string(const Count & value) -> std::string;

    /// Decimal approximation with twelve significant digits.
    auto to_decimal(const Rational & value) -> std::string;

    auto pow(const Rational & base, unsigned exponent) -> Rational;

    auto factorial(unsigned n) -> Count;

    /// C(n, r) over the integers; zero when r > n.
    auto binomial(std::uint64_t n, std::uint64_t r) -> Count;

    /// Falling-factorial binomial x (x-1) ... (x-r+1) / r! at a rational argument.
    auto binomial(const Rational & x, unsigned r) -> Rational;

    auto ceil(const Rational & value) -> Count;
}
