#pragma once

#include <hfree/numeric.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hfree
{
    /// Leading-order value of a closed-form bound, with the inputs it was evaluated at.
    struct Prediction
    {
        Rational value;
        std::string formula;
        std::vector<std::pair<std::string, Rational>> params;
        /// False where the formula is exposed outside the regime it is known to hold in.
        bool verified = true;
    };

    /// C(k-1, m) (n/(k-1))^m: copies of K_m in the balanced (k-1)-partite graph, to leading order.
    auto predict_ex_clique(long n, int k, int m) -> Prediction;

    /// C(n/m, t)^m with the falling-factorial binomial at n/m.
    auto predict_ex_blowup(long n, int m, int t) -> Prediction;

    /// 1 - 3/(3k-4). K_k-free graphs above this minimum-degree fraction are (k-1)-colourable.
    auto aes_threshold(int k) -> Rational;

    /// 1 - 2/(2k-3).
    auto es_threshold(int k) -> Rational;

    /// (1 - m(m-1)/2 eps) C(k-1, m) (n/(k-1))^m.
    auto partition_lower_clique(long n, int k, int m, const Rational & eps) -> Prediction;

    /// (1 - c eps) n^(mt) / (t! m^t)^m, with c supplied by the caller.
    auto partition_lower_blowup(long n, int m, int t, const Rational & eps, const Rational & c) -> Prediction;

    struct CliqueRemovalBound
    {
        /// n^(m-1) C(k-1, m) m/(k-1)^m (1 - delta).
        Prediction bound;
        /// 1 - ((k-1)(1 - 3/(3k-4))/(k-2))^(m-1).
        Rational delta;
    };

    /// Most copies of K_m lost with a vertex of degree below the peel threshold, to leading order.
    auto removal_bound_clique(long n, int k, int m) -> CliqueRemovalBound;

    /// f(d) = d^(t(m-1)) (n-d)^(t-1).
    auto f_value(const Rational & n, const Rational & d, int m, int t) -> Rational;

    /// beta = (1 - (t-1)/(tm-1)) n, where f peaks on [0, n]. Checks f is nondecreasing
    /// at sampled points of [0, beta] and throws Error otherwise.
    auto f_maximizer(const Rational & n, int m, int t) -> Rational;

    /// (n-d)^(t-1)/(t-1)! (d^t/((m-1)^t t!))^(m-1): copies of K_m(t) through a vertex
    /// of degree d using t-1 non-neighbours.
    auto sparse_copy_bound(const Rational & n, const Rational & d, int m, int t) -> Prediction;

    struct BlowupRemovalBound
    {
        /// n^(mt-1) (3/(3m-1))^(t-1) (1 - 3/(3m-1))^(t(m-1)) / ((t-1)! (m-1)^(t(m-1)) (t!)^(m-1)).
        /// Copies through dense neighbourhoods are of lower order and not included.
        Prediction bound;
        /// mt / (m^(tm) (t!)^m).
        Rational normalisation;
        /// bound / (n^(mt-1) normalisation); below one means a positive gap exists.
        Rational ratio;
    };

    /// Requires m >= 3.
    auto removal_bound_blowup(long n, int m, int t) -> BlowupRemovalBound;

    /// n^(mt-1) C(k-1, m) mt / ((k-1)^m (t! m^(t-1))^m): per-vertex copy count in the
    /// peel-and-reinsert argument with a general part budget. Marked unverified unless
    /// k = m+1 or t = 1.
    auto reinsertion_scale(long n, int k, int m, int t) -> Prediction;
}
