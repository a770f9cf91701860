#include <hfree/error.hpp>
#include <hfree/numeric.hpp>

#include <cctype>
#include <cstdio>

namespace hfree
{
    namespace
    {
        auto parse_integer(std::string_view digits, std::string_view whole) -> Count
        {
            if (digits.empty())
                throw InvalidArgument("malformed number '" + std::string(whole) + "'");
            Count value = 0;
            for (char c : digits) {
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw InvalidArgument("malformed number '" + std::string(whole) + "'");
                value = value * 10 + (c - '0');
            }
            return value;
        }
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        std::string_view body = text;
        bool negative = false;
        if (! body.empty() && (body.front() == '-' || body.front() == '+')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }

        Rational result;
        if (auto slash = body.find('/'); slash != std::string_view::npos) {
            Count num = parse_integer(body.substr(0, slash), text);
            Count den = parse_integer(body.substr(slash + 1), text);
            if (den == 0)
                throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
            result = Rational(num, den);
        }
        else if (auto dot = body.find('.'); dot != std::string_view::npos) {
            auto int_part = body.substr(0, dot);
            auto frac_part = body.substr(dot + 1);
            if (int_part.empty() && frac_part.empty())
                throw InvalidArgument("malformed number '" + std::string(text) + "'");
            Count num = int_part.empty() ? Count(0) : parse_integer(int_part, text);
            Count scale = 1;
            for (char c : frac_part) {
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw InvalidArgument("malformed number '" + std::string(text) + "'");
                num = num * 10 + (c - '0');
                scale *= 10;
            }
            result = Rational(num, scale);
        }
        else
            result = Rational(parse_integer(body, text));

        return negative ? Rational(-result) : result;
    }

    auto to_string(const Rational & value) -> std::string
    {
        auto num = boost::multiprecision::numerator(value);
        auto den = boost::multiprecision::denominator(value);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }

    auto to_string(const Count & value) -> std::string
    {
        return value.str();
    }

    auto to_decimal(const Rational & value) -> std::string
    {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", value.convert_to<double>());
        return buf;
    }

    auto pow(const Rational & base, unsigned exponent) -> Rational
    {
        Rational result = 1, b = base;
        while (exponent) {
            if (exponent & 1u)
                result *= b;
            b *= b;
            exponent >>= 1;
        }
        return result;
    }

    auto factorial(unsigned n) -> Count
    {
        Count result = 1;
        for (unsigned i = 2; i <= n; ++i)
            result *= i;
        return result;
    }

    auto binomial(std::uint64_t n, std::uint64_t r) -> Count
    {
        if (r > n)
            return 0;
        r = std::min(r, n - r);
        Count result = 1;
        for (std::uint64_t i = 1; i <= r; ++i) {
            result *= n - r + i;
            result /= i;
        }
        return result;
    }

    auto binomial(const Rational & x, unsigned r) -> Rational
    {
        Rational result = 1;
        for (unsigned i = 0; i < r; ++i)
            result *= x - i;
        return result / Rational(factorial(r));
    }

    auto ceil(const Rational & value) -> Count
    {
        auto num = boost::multiprecision::numerator(value);
        auto den = boost::multiprecision::denominator(value);
        Count q = num / den;
        if (q * den != num && num > 0)
            ++q;
        return q;
    }
}
