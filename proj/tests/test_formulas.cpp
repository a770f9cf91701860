#include <hfree/counting.hpp>
#include <hfree/error.hpp>
#include <hfree/formulas.hpp>
#include <hfree/generators.hpp>

#include <doctest.h>

#include <cmath>

using namespace hfree;

namespace
{
    auto q(long p, long r = 1) -> Rational { return Rational(p, r); }

    auto approx(const Rational & value) -> long double
    {
        return static_cast<long double>(numerator(value).convert_to<long double>() / denominator(value).convert_to<long double>());
    }

    auto close(long double a, long double b) -> bool
    {
        return std::fabs(a - b) <= 1e-12L * std::max(1.0L, std::fabs(b));
    }

    auto fact(int n) -> long double
    {
        long double r = 1;
        for (int i = 2; i <= n; ++i)
            r *= i;
        return r;
    }
}

TEST_CASE("thresholds")
{
    CHECK(aes_threshold(3) == q(2, 5));
    CHECK(es_threshold(3) == q(1, 3));
    CHECK(aes_threshold(4) == q(5, 8));
    CHECK(es_threshold(4) == q(3, 5));
    CHECK(aes_threshold(4) > es_threshold(4));
    for (int k = 3; k <= 30; ++k) {
        CHECK(aes_threshold(k) == q(3 * k - 7, 3 * k - 4));
        CHECK(es_threshold(k) == q(2 * k - 5, 2 * k - 3));
    }
    CHECK_THROWS_AS(aes_threshold(2), InvalidArgument);
    CHECK_THROWS_AS(es_threshold(1), InvalidArgument);
}

TEST_CASE("predict_ex_clique")
{
    CHECK(predict_ex_clique(8, 3, 2).value == 16);
    CHECK(predict_ex_clique(6, 4, 3).value == 8);
    CHECK(predict_ex_clique(0, 5, 2).value == 0);
    CHECK(predict_ex_clique(7, 3, 2).value == q(49, 4));
    CHECK_THROWS_AS(predict_ex_clique(5, 3, 3), InvalidArgument);
    // Agrees with the Turán graph count whenever k-1 divides n.
    for (int k = 3; k <= 5; ++k)
        for (int m = 2; m < k; ++m)
            for (int n = 0; n <= 12; n += k - 1)
                CHECK(predict_ex_clique(n, k, m).value == Rational(count_cliques(generate(gen::Turan{n, k - 1}), m)));
}

TEST_CASE("predict_ex_blowup")
{
    CHECK(predict_ex_blowup(6, 2, 2).value == 9);
    CHECK(predict_ex_blowup(6, 3, 1).value == 8);
    for (int m = 2; m <= 6; ++m)
        CHECK(predict_ex_blowup(2 * m, m, 1).value == Rational(Count(1) << m));
    // Generalised binomial at a non-integer argument: C(5/2, 2) = 15/8.
    CHECK(predict_ex_blowup(5, 2, 2).value == q(225, 64));
    for (int n = 0; n <= 8; ++n)
        for (int m = 2; m <= 8; ++m)
            CHECK(predict_ex_blowup(n, m, 1).value == predict_ex_clique(n, m + 1, m).value);
    // Exact count on the balanced m-partite graph when m divides n.
    for (int m = 2; m <= 3; ++m)
        for (int t = 1; t <= 3; ++t)
            for (int s = 1; s <= 4; ++s)
                CHECK(predict_ex_blowup(m * s, m, t).value ==
                    Rational(count_pattern(generate(gen::Turan{m * s, m}), Pattern::blowup(m, t))));
}

TEST_CASE("partition lower bounds")
{
    CHECK(partition_lower_clique(10, 3, 2, 0).value == 25);
    CHECK(partition_lower_clique(10, 3, 2, q(1, 10)).value == q(45, 2));
    for (int n = 1; n <= 12; ++n)
        for (int k = 3; k <= 6; ++k)
            for (int m = 1; m < k; ++m)
                CHECK(partition_lower_clique(n, k, m, 0).value == predict_ex_clique(n, k, m).value);
    CHECK(partition_lower_blowup(6, 2, 2, 0, 5).value == q(81, 4));
    CHECK(partition_lower_blowup(6, 2, 2, 0, 5).value == partition_lower_blowup(6, 2, 2, 0, 0).value);
    CHECK(partition_lower_blowup(6, 2, 2, q(1, 10), 2).value == q(81, 4) * q(4, 5));
    for (int n = 0; n <= 10; ++n)
        for (int m = 1; m <= 5; ++m)
            CHECK(partition_lower_blowup(n, m, 1, 0, 1).value == pow(q(n, m), static_cast<unsigned>(m)));
    CHECK_THROWS_AS(partition_lower_clique(10, 3, 2, 1), InvalidArgument);
    CHECK_THROWS_AS(partition_lower_blowup(10, 3, 2, q(1, 2), -1), InvalidArgument);
}

TEST_CASE("removal_bound_clique")
{
    CHECK(removal_bound_clique(10, 4, 3).delta == q(31, 256));
    CHECK(removal_bound_clique(10, 3, 2).delta == q(1, 5));
    // (k,m) = (4,3): n^2 * 1 * 3/27 * (15/16)^2.
    CHECK(removal_bound_clique(16, 4, 3).bound.value == q(16 * 16 * 3 * 225, 27 * 256));
    for (int k = 3; k <= 10; ++k)
        for (int m = 2; m < k; ++m) {
            auto r = removal_bound_clique(1, k, m);
            CHECK(r.delta > 0);
            CHECK(r.delta < 1);
            long double kept = std::pow((k - 1) * (1.0L - 3.0L / (3 * k - 4)) / (k - 2), m - 1);
            CHECK(close(approx(1 - r.delta), kept));
        }
    CHECK_THROWS_AS(removal_bound_clique(10, 3, 3), InvalidArgument);
    CHECK_THROWS_AS(removal_bound_clique(10, 4, 1), InvalidArgument);
}

TEST_CASE("f and its maximiser")
{
    CHECK(f_maximizer(10, 2, 2) == q(20, 3));
    CHECK(f_maximizer(10, 4, 1) == 10);
    for (int m = 2; m <= 6; ++m)
        for (int t = 1; t <= 4; ++t) {
            Rational n = 24;
            auto beta = f_maximizer(n, m, t);
            auto peak = f_value(n, beta, m, t);
            for (int i = 0; i <= 200; ++i) {
                Rational d = n * i / 200;
                CHECK(f_value(n, d, m, t) <= peak);
            }
        }
}

TEST_CASE("sparse_copy_bound")
{
    CHECK(sparse_copy_bound(10, 6, 3, 2).value == 81);
    for (int m = 2; m <= 5; ++m)
        for (int t = 2; t <= 4; ++t)
            CHECK(sparse_copy_bound(10, 0, m, t).value == 0);
    for (int m = 2; m <= 5; ++m)
        for (int t = 1; t <= 4; ++t)
            for (int d = 0; d <= 12; d += 3) {
                long double expected = std::pow(12.0L - d, t - 1) / fact(t - 1) *
                    std::pow(std::pow(static_cast<long double>(d), t) / (std::pow(m - 1.0L, t) * fact(t)), m - 1);
                CHECK(close(approx(sparse_copy_bound(12, d, m, t).value), expected));
            }
    CHECK_THROWS_AS(sparse_copy_bound(10, 11, 3, 2), InvalidArgument);
}

TEST_CASE("removal_bound_blowup")
{
    CHECK(removal_bound_blowup(1, 3, 1).ratio == q(225, 256));
    for (int m = 3; m <= 5; ++m)
        for (int t = 1; t <= 3; ++t) {
            auto r = removal_bound_blowup(10, m, t);
            CHECK(r.ratio < 1);
            CHECK(r.ratio > 0);
            CHECK(removal_bound_blowup(20, m, t).bound.value / r.bound.value == pow(Rational(2), static_cast<unsigned>(m * t - 1)));
            CHECK(r.normalisation == reinsertion_scale(1, m + 1, m, t).value);
            long double low = 3.0L / (3 * m - 1);
            long double shape = std::pow(low, t - 1) * std::pow(1 - low, t * (m - 1)) /
                (fact(t - 1) * std::pow(m - 1.0L, t * (m - 1)) * std::pow(fact(t), m - 1));
            CHECK(close(approx(r.ratio), shape * std::pow(static_cast<long double>(m), t * m) * std::pow(fact(t), m) / (m * t)));
        }
    for (int n = 1; n <= 40; n += 13)
        for (int m = 3; m <= 6; ++m)
            CHECK(removal_bound_blowup(n, m, 1).bound.value == removal_bound_clique(n, m + 1, m).bound.value);
    CHECK(removal_bound_blowup(16, 3, 1).bound.value == q(25 * 256, 256));
    CHECK_THROWS_AS(removal_bound_blowup(10, 2, 2), InvalidArgument);
}

TEST_CASE("reinsertion_scale")
{
    CHECK(reinsertion_scale(10, 4, 3, 1).verified);
    CHECK(reinsertion_scale(10, 3, 2, 2).verified);
    CHECK_FALSE(reinsertion_scale(10, 5, 2, 2).verified);
    // t = 1 gives C(k-1, m) m / (k-1)^m n^(m-1).
    for (int k = 3; k <= 6; ++k)
        for (int m = 1; m < k; ++m)
            CHECK(reinsertion_scale(9, k, m, 1).value ==
                Rational(binomial(static_cast<std::uint64_t>(k - 1), static_cast<std::uint64_t>(m))) * m *
                    pow(Rational(9), static_cast<unsigned>(m - 1)) / pow(Rational(k - 1), static_cast<unsigned>(m)));
}
