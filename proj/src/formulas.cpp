#include <hfree/error.hpp>
#include <hfree/formulas.hpp>

namespace hfree
{
    namespace
    {
        auto u(int value) -> unsigned { return static_cast<unsigned>(value); }

        auto fact(int n) -> Rational { return Rational(factorial(u(n))); }

        auto choose(int n, int r) -> Rational
        {
            return Rational(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)));
        }

        void require(bool ok, const std::string & message)
        {
            if (! ok)
                throw InvalidArgument(message);
        }

        void require_n(long n, const char * name)
        {
            require(n >= 0, std::string(name) + ": n must be non-negative");
        }
    }

    auto predict_ex_clique(long n, int k, int m) -> Prediction
    {
        require(m >= 1 && k > m, "predict_ex_clique: needs k > m >= 1");
        require_n(n, "predict_ex_clique");
        Rational value = choose(k - 1, m) * pow(Rational(n, k - 1), u(m));
        return {value, "predict_ex_clique", {{"n", n}, {"k", k}, {"m", m}}};
    }

    auto predict_ex_blowup(long n, int m, int t) -> Prediction
    {
        require(m >= 2 && t >= 1, "predict_ex_blowup: needs m >= 2 and t >= 1");
        require_n(n, "predict_ex_blowup");
        Rational value = pow(binomial(Rational(n, m), u(t)), u(m));
        return {value, "predict_ex_blowup", {{"n", n}, {"m", m}, {"t", t}}};
    }

    auto aes_threshold(int k) -> Rational
    {
        require(k >= 3, "aes_threshold: needs k >= 3");
        return 1 - Rational(3, 3 * k - 4);
    }

    auto es_threshold(int k) -> Rational
    {
        require(k >= 3, "es_threshold: needs k >= 3");
        return 1 - Rational(2, 2 * k - 3);
    }

    auto partition_lower_clique(long n, int k, int m, const Rational & eps) -> Prediction
    {
        require(eps >= 0 && eps < 1, "partition_lower_clique: needs 0 <= eps < 1");
        auto lead = predict_ex_clique(n, k, m).value;
        Rational value = (1 - Rational(m * (m - 1), 2) * eps) * lead;
        return {value, "partition_lower_clique", {{"n", n}, {"k", k}, {"m", m}, {"eps", eps}}};
    }

    auto partition_lower_blowup(long n, int m, int t, const Rational & eps, const Rational & c) -> Prediction
    {
        require(m >= 1 && t >= 1, "partition_lower_blowup: needs m, t >= 1");
        require(eps >= 0 && eps < 1, "partition_lower_blowup: needs 0 <= eps < 1");
        require(c >= 0, "partition_lower_blowup: needs c >= 0");
        require_n(n, "partition_lower_blowup");
        Rational value = (1 - c * eps) * pow(Rational(n), u(m * t)) / pow(fact(t) * pow(Rational(m), u(t)), u(m));
        return {value, "partition_lower_blowup", {{"n", n}, {"m", m}, {"t", t}, {"eps", eps}, {"c", c}}};
    }

    auto removal_bound_clique(long n, int k, int m) -> CliqueRemovalBound
    {
        require(m >= 2 && k > m, "removal_bound_clique: needs k > m >= 2");
        require_n(n, "removal_bound_clique");
        Rational kept = pow(Rational(k - 1) * aes_threshold(k) / (k - 2), u(m - 1));
        Rational value = pow(Rational(n), u(m - 1)) * choose(k - 1, m) * m /
            pow(Rational(k - 1), u(m)) * kept;
        return {{value, "removal_bound_clique", {{"n", n}, {"k", k}, {"m", m}}}, 1 - kept};
    }

    auto f_value(const Rational & n, const Rational & d, int m, int t) -> Rational
    {
        require(m >= 1 && t >= 1, "f_value: needs m, t >= 1");
        return pow(d, u(t * (m - 1))) * pow(n - d, u(t - 1));
    }

    auto f_maximizer(const Rational & n, int m, int t) -> Rational
    {
        require(m >= 2 && t >= 1, "f_maximizer: needs m >= 2 and t >= 1");
        require(n >= 0, "f_maximizer: n must be non-negative");
        Rational beta = (1 - Rational(t - 1, t * m - 1)) * n;
        constexpr int samples = 32;
        Rational previous = f_value(n, 0, m, t);
        for (int i = 1; i <= samples; ++i) {
            Rational current = f_value(n, beta * i / samples, m, t);
            if (current < previous)
                throw Error("f_maximizer: f decreases on [0, beta]");
            previous = current;
        }
        return beta;
    }

    auto sparse_copy_bound(const Rational & n, const Rational & d, int m, int t) -> Prediction
    {
        require(m >= 2 && t >= 1, "sparse_copy_bound: needs m >= 2 and t >= 1");
        require(d >= 0 && d <= n, "sparse_copy_bound: needs 0 <= d <= n");
        Rational value = pow(n - d, u(t - 1)) / fact(t - 1) *
            pow(pow(d, u(t)) / (pow(Rational(m - 1), u(t)) * fact(t)), u(m - 1));
        return {value, "sparse_copy_bound", {{"n", n}, {"d", d}, {"m", m}, {"t", t}}};
    }

    auto removal_bound_blowup(long n, int m, int t) -> BlowupRemovalBound
    {
        require(m >= 3 && t >= 1, "removal_bound_blowup: needs m >= 3 and t >= 1");
        require_n(n, "removal_bound_blowup");
        Rational low = Rational(3, 3 * m - 1);
        Rational shape = pow(low, u(t - 1)) * pow(1 - low, u(t * (m - 1))) /
            (fact(t - 1) * pow(Rational(m - 1), u(t * (m - 1))) * pow(fact(t), u(m - 1)));
        Rational normalisation = Rational(m * t) / (pow(Rational(m), u(t * m)) * pow(fact(t), u(m)));
        BlowupRemovalBound result;
        result.bound = {pow(Rational(n), u(m * t - 1)) * shape, "removal_bound_blowup", {{"n", n}, {"m", m}, {"t", t}}};
        result.normalisation = normalisation;
        result.ratio = shape / normalisation;
        return result;
    }

    auto reinsertion_scale(long n, int k, int m, int t) -> Prediction
    {
        require(m >= 1 && t >= 1 && k > m, "reinsertion_scale: needs k > m >= 1 and t >= 1");
        require_n(n, "reinsertion_scale");
        Rational value = pow(Rational(n), u(m * t - 1)) * choose(k - 1, m) * (m * t) /
            (pow(Rational(k - 1), u(m)) * pow(fact(t) * pow(Rational(m), u(t - 1)), u(m)));
        return {value, "reinsertion_scale", {{"n", n}, {"k", k}, {"m", m}, {"t", t}}, k == m + 1 || t == 1};
    }
}
