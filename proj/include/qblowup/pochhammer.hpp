#pragma once

#include <vector>

#include "qblowup/backends.hpp"

namespace qb {

// (z; q_{a_1}, ..., q_{a_N})_inf as a z-series: the exponential of
// -sum_{k>=1} z^k / (k prod_i (1 - q_{a_i}^k)), truncated at trunc ticks.
template <class Ctx>
ZSeries<typename Ctx::F> pochhammer_z_series(const Ctx& ctx, const std::vector<Monomial>& qmonos,
                                             std::int64_t trunc) {
    using F = typename Ctx::F;
    const int D = ctx.grid().D;
    for (const Monomial& m : qmonos)
        if (m.is_one())
            throw std::invalid_argument(
                "q-Pochhammer parameter equal to 1: factor (1 - q^k) vanishes");
    ZSeries<F> logpart(D, trunc);
    for (std::int64_t k = 1; k * D <= trunc; ++k) {
        F c = FieldOps<F>::from_rational(make_rational(-1, k));
        for (const Monomial& m : qmonos) c = c * ctx.inv_one_minus(m.pow(k));
        logpart.add(k * D, c);
    }
    return logpart.exp();
}

// (z; q_1..q_N)_inf / (z q_i^steps; q_1..q_N)_inf by telescoping the q-shift
// relation: a finite product of (N-1)-parameter Pochhammer series.
template <class Ctx>
ZSeries<typename Ctx::F> pochhammer_shift_ratio(const Ctx& ctx,
                                                const std::vector<Monomial>& qmonos,
                                                std::size_t index, int steps,
                                                std::int64_t trunc) {
    using F = typename Ctx::F;
    const int D = ctx.grid().D;
    if (index >= qmonos.size()) throw std::out_of_range("pochhammer_shift_ratio: bad index");
    std::vector<Monomial> rest;
    for (std::size_t i = 0; i < qmonos.size(); ++i)
        if (i != index) rest.push_back(qmonos[i]);
    const Monomial& qi = qmonos[index];

    auto lower = [&](int t) {
        // (z qi^t; rest)_inf; for N = 1 the empty product gives 1 - z qi^t
        if (rest.empty()) {
            ZSeries<F> s = ZSeries<F>::one(D, trunc);
            s.add(D, FieldOps<F>::mul_rational(ctx.eval(qi.pow(t)), Rational(-1)));
            return s;
        }
        ZSeries<F> base = pochhammer_z_series(ctx, rest, trunc);
        return scale_z_argument(ctx, base, qi, Rational(t));
    };

    ZSeries<F> out = ZSeries<F>::one(D, trunc);
    if (steps >= 0) {
        for (int t = 0; t < steps; ++t) out = out * lower(t);
    } else {
        ZSeries<F> den = ZSeries<F>::one(D, trunc);
        for (int t = 1; t <= -steps; ++t) den = den * lower(-t);
        out = out.divide(den);
    }
    return out;
}

}  // namespace qb
