#pragma once

#include "qblowup/blowup.hpp"

namespace qb {

// ---------------------------------------------------------------------------
// -2 bilinear sums: the epsilon-splitting (q1^2, q2/q1) x (q1/q2, q2^2)
//
//   sum_{n in Z + j/2} s^{n - j/2} Z^{[l]}(u q1^{2n}; q1^2, q2 q1^{-1} | q1^d z)
//                                  Z^{[l]}(u q2^{2n}; q1 q2^{-1}, q2^2 | q2^d z)
//
// at instanton level.  The common normalization divides out half of
// Z_cl(u; q1, q2 | z) and, for the 1-loop part, the lattice term at
// n = j/2 (the j = 1 sector has no finite 1-loop ratio against the n = 0
// pair, but ratios within the sector telescope).  Signs at half-integer n
// are taken relative to the n = j/2 term, which drops a global s^{1/2}
// common to every term of a fixed-parity relation.

inline FactorSpec m2_factor(Grid grid, int which, int twice_n, int d) {
    Vars V{grid};
    if (which == 1)
        return FactorSpec{V.u() * V.q1_pow(Rational(twice_n)), V.q1(2), V.q2() * V.q1(-1),
                          V.q1_pow(Rational(d))};
    return FactorSpec{V.u() * V.q2_pow(Rational(twice_n)), V.q1() * V.q2(-1), V.q2(2),
                      V.q2_pow(Rational(d))};
}

inline ReducedSpec m2_term_spec(Grid grid, int l, int d, int j, int twice_n) {
    Vars V{grid};
    ReducedSpec spec;
    spec.l = l;
    spec.factors = {m2_factor(grid, 1, twice_n, d), m2_factor(grid, 2, twice_n, d)};
    FactorSpec base{V.u(), V.q1(), V.q2(), Monomial::one()};
    spec.classical_ref = {WeightedFactor{base, make_rational(1, 2)}};
    spec.oneloop_ref = {m2_factor(grid, 1, j, 0), m2_factor(grid, 2, j, 0)};
    return spec;
}

inline int m2_window(Grid grid, std::int64_t trunc) {
    // leading z-exponent of the n-th term is n^2/2
    int b = 0;
    while (static_cast<std::int64_t>(b + 1) * (b + 1) * grid.D <= 8 * trunc) ++b;
    return b + 2;
}

// Fourier-style lattice sum with scalar weight s^n (relative branch s^{n-j/2});
// window_twice_n restricts the lattice sum when given, e.g. {0, 0} keeps the
// single n = 0 term.
template <class Ctx>
ZSeries<typename Ctx::F> fourier_sum(const Ctx& ctx, SeriesCache* cache, int l, int d, int j,
                                     const Rational& s, std::int64_t trunc,
                                     std::optional<std::pair<int, int>> window_twice_n = {}) {
    using F = typename Ctx::F;
    const Grid grid = ctx.grid();
    ZSeries<F> sum(grid.D, trunc);
    const int bound = m2_window(grid, trunc);
    for (int tn = -bound; tn <= bound; ++tn) {
        if (((tn - j) & 1) != 0) continue;
        if (window_twice_n && (tn < window_twice_n->first || tn > window_twice_n->second))
            continue;
        ReducedSpec spec = m2_term_spec(grid, l, d, j, tn);
        if (reduced_leading_tick(grid, spec) > trunc) continue;
        if (!window_twice_n && std::abs(tn) >= bound - 1)
            throw std::logic_error("lattice window too small in fourier_sum");
        Rational w = pow_int(s, (tn - j) / 2);
        sum += reduced_product(ctx, cache, spec, trunc).mul_rational(w);
    }
    return sum;
}

template <class Ctx>
ZSeries<typename Ctx::F> minus2_sum(const Ctx& ctx, SeriesCache* cache, int d, int j, int eps,
                                    int l, std::int64_t trunc) {
    return fourier_sum(ctx, cache, l, d, j, Rational(eps), trunc);
}

// ---------------------------------------------------------------------------
// the verified -2 bilinear relations

enum class M2Id { R424, RB5, RB5m, R423, R422, RCS1 };

inline const char* m2_name(M2Id id) {
    switch (id) {
        case M2Id::R424: return "R424";
        case M2Id::RB5: return "RB5";
        case M2Id::RB5m: return "RB5m";
        case M2Id::R423: return "R423";
        case M2Id::R422: return "R422";
        case M2Id::RCS1: return "RCS1";
    }
    return "?";
}

// 1 - (q1 q2)^{w/2} z^{1/2} as an exact series
template <class Ctx>
ZSeries<typename Ctx::F> sqrtz_binomial(const Ctx& ctx, int w) {
    using F = typename Ctx::F;
    const int D = ctx.grid().D;
    Vars V{ctx.grid()};
    ZSeries<F> s = ZSeries<F>::one(D);
    s.add(D / 2, FieldOps<F>::mul_rational(ctx.eval(V.q1q2_pow(make_rational(w, 2))),
                                           Rational(-1)));
    return s;
}

template <class Ctx>
ZSeries<typename Ctx::F> relation_residual(const Ctx& ctx, SeriesCache* cache, M2Id id, int eps,
                                           std::int64_t trunc) {
    using F = typename Ctx::F;
    Vars V{ctx.grid()};
    auto msum = [&](int d, int j, int l) { return minus2_sum(ctx, cache, d, j, eps, l, trunc); };
    switch (id) {
        case M2Id::R424:
            return msum(1, 0, 0) - msum(-1, 0, 0);
        case M2Id::RB5:
            return msum(2, 0, 0) - (sqrtz_binomial(ctx, 1) * msum(0, 0, 0)).truncated(trunc);
        case M2Id::RB5m:
            return msum(-2, 0, 0) - (sqrtz_binomial(ctx, -1) * msum(0, 0, 0)).truncated(trunc);
        case M2Id::R423: {
            auto lhs = msum(1, 1, 0);
            auto rhs = msum(-1, 1, 0).mul_coeff(ctx.eval(V.q1q2_pow(make_rational(1, 4))))
                           .mul_rational(Rational(eps));
            return lhs - rhs;
        }
        case M2Id::R422:
            return minus2_sum(ctx, cache, 0, 1, -1, 0, trunc);
        case M2Id::RCS1:
            return msum(2, 0, 1) - (sqrtz_binomial(ctx, 1) * msum(1, 0, 1)).truncated(trunc);
    }
    throw std::logic_error("unknown relation id");
}

// ---------------------------------------------------------------------------
// convolution replay (the proof mechanism): the triple lattice sum
//
//   sum_{m,n} eps^{m+n} Z(u(q1q2)^{2m}; q1q2, q1^{-2} | (q1q2)^{d12} z)
//             Z(u q1^{2n} q2^{2m}; q1^2, q2 q1^{-1} | q1^{d2-d1} q2^{d12} z)
//             Z(u q2^{2(m+n)}; q1 q2^{-1}, q2^2 | q2^{2 d2} z)
//
// against its collapsed form
//   [sum_i eps^i beta^{d1}_{i+j mod 2}(q1q2, q2/q1 | (q1q2)^{d2} z)
//              beta^{d2}_i(q1q2, q2^2 | z)] * Z(u; q1q2, q2^2 | z),
// both relative to Z_cl(u; q1q2, q2^2 | z) Z_1loop(u; q1q2, q2^2).

struct ConvolutionFactors {
    FactorSpec f1, f2, f3;
};

// u-arguments and Omega pairs of the convolving Z and the two bilinear
// factors at lattice position (m, n); the z-scales vary per use
inline ConvolutionFactors convolution_factors(Grid grid, int twice_m, int twice_n,
                                              const Monomial& zs1, const Monomial& zs2,
                                              const Monomial& zs3) {
    Vars V{grid};
    FactorSpec f1{V.u() * V.q1_pow(Rational(twice_m)) * V.q2_pow(Rational(twice_m)), V.q1q2(),
                  V.q1(-2), zs1};
    FactorSpec f2{V.u() * V.q1_pow(Rational(twice_n)) * V.q2_pow(Rational(twice_m)), V.q1(2),
                  V.q2() * V.q1(-1), zs2};
    FactorSpec f3{V.u() * V.q2_pow(Rational(twice_m + twice_n)), V.q1() * V.q2(-1), V.q2(2),
                  zs3};
    return {f1, f2, f3};
}

inline ConvolutionFactors convolution_factors_d(Grid grid, int d1, int d2, int twice_m,
                                                int twice_n) {
    Vars V{grid};
    int d12 = d1 + d2;
    return convolution_factors(grid, twice_m, twice_n, V.q1q2_pow(Rational(d12)),
                               V.q1_pow(Rational(d2 - d1)) * V.q2_pow(Rational(d12)),
                               V.q2_pow(Rational(2 * d2)));
}

inline FactorSpec convolution_reference(Grid grid) {
    Vars V{grid};
    return FactorSpec{V.u(), V.q1q2(), V.q2(2), Monomial::one()};
}

template <class Ctx>
ZSeries<typename Ctx::F> convolution_direct_sum(const Ctx& ctx, SeriesCache* cache, int l,
                                                int d1, int d2, int j, int eps,
                                                std::int64_t trunc) {
    using F = typename Ctx::F;
    const Grid grid = ctx.grid();
    FactorSpec ref = convolution_reference(grid);
    ZSeries<F> sum(grid.D, trunc);
    const int bound = m2_window(grid, trunc) + 2;
    for (int tm = -bound; tm <= bound; ++tm) {
        if (((tm - j) & 1) != 0) continue;
        for (int tn = -bound; tn <= bound; ++tn) {
            if (((tn - j) & 1) != 0) continue;
            auto [f1, f2, f3] = convolution_factors_d(grid, d1, d2, tm, tn);
            ReducedSpec spec;
            spec.l = l;
            spec.factors = {f1, f2, f3};
            spec.classical_ref = {WeightedFactor{ref, Rational(1)}};
            spec.oneloop_ref = {ref};
            if (reduced_leading_tick(grid, spec) > trunc) continue;
            if (std::abs(tm) >= bound - 1 || std::abs(tn) >= bound - 1)
                throw std::logic_error("lattice window too small in convolution_direct_sum");
            int mpn = (tm + tn) / 2;  // m + n is an integer in both sectors
            sum += reduced_product(ctx, cache, spec, trunc)
                       .mul_rational(pow_int(Rational(eps), mpn));
        }
    }
    return sum;
}

// sum_i eps^i beta^{d1}_{(i+j) mod 2}(q1q2, q2/q1 | (q1q2)^{d2} z) beta^{d2}_i(q1q2, q2^2 | z)
template <class Ctx>
ZSeries<typename Ctx::F> collapsed_coefficient(const Ctx& ctx, int l, int d1, int d2, int j,
                                               int eps) {
    using F = typename Ctx::F;
    Vars V{ctx.grid()};
    EpsPair baseA{V.q1q2(), V.q2() * V.q1(-1)};
    EpsPair baseB{V.q1q2(), V.q2(2)};
    Monomial zshift = V.q1q2_pow(Rational(d2));
    ZSeries<F> total(ctx.grid().D, ZSeries<F>::kInfTrunc);
    for (int i = 0; i < 2; ++i) {
        auto a = beta_series(ctx, d1, (i + j) & 1, l, baseA, zshift);
        auto b = beta_series(ctx, d2, i, l, baseB, Monomial::one());
        total += (a * b).mul_rational(i == 1 ? Rational(eps) : Rational(1));
    }
    return total;
}

// direct triple sum minus collapsed form, expected identically zero
template <class Ctx>
ZSeries<typename Ctx::F> convolution_replay(const Ctx& ctx, SeriesCache* cache, int d1, int d2,
                                            int j, int eps, std::int64_t trunc) {
    const Grid grid = ctx.grid();
    Vars V{grid};
    auto direct = convolution_direct_sum(ctx, cache, 0, d1, d2, j, eps, trunc);
    auto coeff = collapsed_coefficient(ctx, 0, d1, d2, j, eps);
    auto z = instanton_series(ctx, cache, 0, EpsPair{V.q1q2(), V.q2(2)}, V.u(), trunc);
    return direct - (coeff * z).truncated(trunc);
}

// ---------------------------------------------------------------------------
// level-1 modified convolution: the z-shift exponent depends on the parity
// of m + p (0 when odd, -1 when even), applied to the two z-parity parts of
// the level-1 relation sum(d=2) - (1 - (q1q2)^{1/2} z^{1/2}) sum(d=1).
// Reducing it through two blowup steps leaves the beta combination
//
//   beta^{-1}_0 beta^1_0 + beta^{-1}_1(q1q2, q2/q1 | q1q2 z) beta^1_1(q1q2, q2^2 | z)
//   - beta^0_0 beta^0_0 - beta^0_1 beta^0_1
//   + (q1q2)^{1/2} z^{1/2} (beta^0_0 beta^1_0 + q2^{-1/2} beta^{-1}_1 beta^0_1)
//
// which must vanish as an exact series; the direct triple sum then vanishes
// with it.

template <class Ctx>
ZSeries<typename Ctx::F> cs_beta_identity_residual(const Ctx& ctx) {
    using F = typename Ctx::F;
    const Grid grid = ctx.grid();
    Vars V{grid};
    EpsPair A{V.q1q2(), V.q2() * V.q1(-1)};
    EpsPair B{V.q1q2(), V.q2(2)};
    Monomial shift = V.q1q2();  // (q1 q2)^{d2} with d2 = 1
    auto lhs = beta_series(ctx, -1, 0, 0, A, shift) * beta_series(ctx, 1, 0, 0, B, Monomial::one()) +
               beta_series(ctx, -1, 1, 0, A, shift) * beta_series(ctx, 1, 1, 0, B, Monomial::one());
    auto rhs0 = beta_series(ctx, 0, 0, 0, A, shift) * beta_series(ctx, 0, 0, 0, B, Monomial::one()) +
                beta_series(ctx, 0, 1, 0, A, shift) * beta_series(ctx, 0, 1, 0, B, Monomial::one());
    auto mixed = beta_series(ctx, 0, 0, 0, A, shift) * beta_series(ctx, 1, 0, 0, B, Monomial::one()) +
                 (beta_series(ctx, -1, 1, 0, A, shift) * beta_series(ctx, 0, 1, 0, B, Monomial::one()))
                     .mul_coeff(ctx.eval(V.q2_pow(make_rational(-1, 2))));
    auto rhs = rhs0 - mixed.mul_zpow(grid.D / 2, ctx.eval(V.q1q2_pow(make_rational(1, 2))));
    return lhs - rhs;
}

template <class Ctx>
ZSeries<typename Ctx::F> cs_convolution_replay(const Ctx& ctx, SeriesCache* cache,
                                               std::int64_t trunc) {
    using F = typename Ctx::F;
    const Grid grid = ctx.grid();
    Vars V{grid};
    FactorSpec ref = convolution_reference(grid);
    ZSeries<F> sum(grid.D, trunc);
    const int bound = m2_window(grid, trunc) + 2;
    Monomial w = V.q1q2_pow(make_rational(1, 2));

    auto triple = [&](int tm, int tn, int d, int sigma) {
        Vars Vg{grid};
        Monomial zs1 = Vg.q1q2_pow(Rational(sigma));
        Monomial zs2 = Vg.q1_pow(Rational(d)) * Vg.q2_pow(Rational(sigma));
        Monomial zs3 = Vg.q2_pow(Rational(d)) * Vg.q2_pow(Rational(sigma));
        auto [f1, f2, f3] = convolution_factors(grid, tm, tn, zs1, zs2, zs3);
        ReducedSpec spec;
        spec.l = 1;
        spec.factors = {f1, f2, f3};
        spec.classical_ref = {WeightedFactor{ref, Rational(1)}};
        spec.oneloop_ref = {ref};
        return spec;
    };

    for (int m = -bound / 2; m <= bound / 2; ++m) {
        for (int p = 0; p < 2; ++p) {
            const int sigma = ((m + p) % 2 != 0) ? 0 : -1;
            for (int n = -bound / 2; n <= bound / 2; ++n) {
                // plain parts of the relation keep n-parity p, the
                // sqrt(z)-correction flips it
                bool parity_p = ((n % 2 + 2) % 2) == p;
                for (int piece = 0; piece < 3; ++piece) {
                    int d = piece == 0 ? 2 : 1;
                    bool corrected = piece == 2;
                    if (parity_p == corrected) continue;
                    ReducedSpec spec = triple(2 * m, 2 * n, d, sigma);
                    std::int64_t lead = reduced_leading_tick(grid, spec);
                    std::int64_t room = corrected ? trunc - grid.D / 2 : trunc;
                    if (lead > room) continue;
                    if (std::abs(m) >= bound / 2 || std::abs(n) >= bound / 2)
                        throw std::logic_error("lattice window too small in cs_convolution_replay");
                    auto term = reduced_product(ctx, cache, spec, room);
                    if (piece == 0) {
                        sum += term;
                    } else if (piece == 1) {
                        sum -= term;
                    } else {
                        F c = ctx.eval(w * V.q2_pow(make_rational(sigma, 2)));
                        sum += term.mul_zpow(grid.D / 2, c);
                    }
                }
            }
        }
    }
    return sum;
}

// Nonvanishing of the odd-sector 2x2 system determinant: up to positive
// monomial prefactors it needs u^{(d12-d12')/2} != 1 and b0 != 0 at the two
// shifted arguments, where b0(v) carries Z_1loop(v; q1q2, q1^{-2}).  The
// 1-loop factors are checked exactly on a finite exponent window.
inline bool check_suff_determinant(const PointContext& ctx, int d12, int d12p, int window,
                                   std::string* detail = nullptr) {
    const ParameterPoint& pt = ctx.point;
    Grid grid = ctx.grid();
    if (d12 == d12p) {
        if (detail) *detail = "d12 = d12': the two convolutions coincide";
        return false;
    }
    Rational upow = pow_int(pt.U(), static_cast<long>(grid.D) * (d12 - d12p) / 2);
    if (upow == 1 || upow == -1) {
        if (detail) *detail = "u^{(d12-d12')/2} is a root of unity";
        return false;
    }
    Rational A = pt.q1() * pt.q2();
    Rational B = pow_int(pt.q1(), -2);
    for (int sign : {+1, -1}) {
        Rational v = pt.u() * pow_int(A, sign);
        for (int i = 0; i <= window; ++i) {
            for (int jj = 0; jj <= window; ++jj) {
                Rational m = pow_int(A, i) * pow_int(B, jj);
                if (v * m == 1 || m == v) {
                    if (detail)
                        *detail = "b0(u (q1q2)^{" + std::to_string(sign) +
                                  "}) has a vanishing 1-loop factor";
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace qb
