#pragma once

#include "qblowup/nekrasov.hpp"
#include "qblowup/prefactor.hpp"

namespace qb {

struct UnsupportedBetaError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UDependenceError : std::domain_error {
    using std::domain_error::domain_error;
};

// A product of shifted full-Z factors divided by a common reference,
// expressed at instanton level: classical monomial ratio times the
// telescoped 1-loop ratio times the product of shifted instanton series.
struct ReducedSpec {
    int l = 0;
    std::vector<FactorSpec> factors;
    std::vector<WeightedFactor> classical_ref;
    std::vector<FactorSpec> oneloop_ref;
};

template <class Ctx>
ZSeries<typename Ctx::F> reduced_product(const Ctx& ctx, SeriesCache* cache,
                                         const ReducedSpec& spec, std::int64_t trunc) {
    using F = typename Ctx::F;
    const Grid grid = ctx.grid();
    ClassicalRatio cr = classical_ratio(grid, spec.factors, spec.classical_ref);
    ZSeries<F> out(grid.D, trunc);
    if (cr.z_tick > trunc) return out;

    OneLoopProduct lp = one_loop_ratio(grid, spec.factors, spec.oneloop_ref);
    F pref = ctx.eval(cr.mono) * lp.evaluate(ctx);

    std::int64_t sub = trunc - cr.z_tick;
    ZSeries<F> prod = ZSeries<F>::one(grid.D, sub);
    for (const FactorSpec& f : spec.factors) {
        EpsPair eps{f.eps1, f.eps2};
        ZSeries<F> s = instanton_series(ctx, cache, spec.l, eps, f.u_arg, sub);
        if (!f.z_scale.is_one()) s = scale_z_argument(ctx, s, f.z_scale, Rational(1));
        prod = prod * s;
    }
    return prod.mul_zpow(cr.z_tick, pref);
}

// leading z-tick of a reduced term (lattice window scans)
inline std::int64_t reduced_leading_tick(Grid grid, const ReducedSpec& spec) {
    return classical_ratio(grid, spec.factors, spec.classical_ref).z_tick;
}

// ---------------------------------------------------------------------------
// Nakajima-Yoshioka (-1 blowup) relations
//
//   beta^d_j Z^{[l]}(u; q1,q2 | z) =
//     sum_{n in Z + j/2} Z^{[l]}(u q1^{2n}; q1, q2/q1 | q1^{d + l(j-1)/2} z)
//                      * Z^{[l]}(u q2^{2n}; q1/q2, q2 | q2^{d + l(j-1)/2} z)
//
// assembled at instanton level relative to Z_cl(u;q1,q2|z) Z_1loop(u;q1,q2).

inline ReducedSpec ny_term_spec(Grid grid, int l, int d, int j, int twice_n) {
    Vars V{grid};
    Rational s = Rational(d) + make_rational(l * (j - 1), 2);
    ReducedSpec spec;
    spec.l = l;
    spec.factors = {
        FactorSpec{V.u() * V.q1_pow(Rational(twice_n)), V.q1(), V.q2() * V.q1(-1), V.q1_pow(s)},
        FactorSpec{V.u() * V.q2_pow(Rational(twice_n)), V.q1() * V.q2(-1), V.q2(), V.q2_pow(s)},
    };
    FactorSpec ref{V.u(), V.q1(), V.q2(), Monomial::one()};
    spec.classical_ref = {WeightedFactor{ref, Rational(1)}};
    spec.oneloop_ref = {ref};
    return spec;
}

// largest |2n| with leading z-exponent n^2 <= order, plus a safety margin
// that is verified against the first discarded term
inline int ny_window(Grid grid, std::int64_t trunc) {
    int b = 0;
    while (static_cast<std::int64_t>(b + 1) * (b + 1) * grid.D <= 4 * trunc) ++b;
    return b + 2;
}

template <class Ctx>
ZSeries<typename Ctx::F> ny_rhs_sum(const Ctx& ctx, SeriesCache* cache, int l, int d, int j,
                                    std::int64_t trunc) {
    using F = typename Ctx::F;
    const Grid grid = ctx.grid();
    ZSeries<F> sum(grid.D, trunc);
    const int bound = ny_window(grid, trunc);
    for (int tn = (j & 1); tn <= bound; tn += 2) {
        for (int sign : {+1, -1}) {
            if (tn == 0 && sign < 0) continue;
            ReducedSpec spec = ny_term_spec(grid, l, d, j, sign * tn);
            if (reduced_leading_tick(grid, spec) > trunc) continue;
            // the window carries a safety margin: a contributing term this
            // far out means the cutoff estimate was wrong
            if (tn >= bound - 1) throw std::logic_error("lattice window too small in ny_rhs_sum");
            sum += reduced_product(ctx, cache, spec, trunc);
        }
    }
    return sum;
}

// The blowup coefficient beta^d_j for the pair (eps_base, z-argument
// zscale * z).  Supported: |d| <= 1 (independent of l); d = +-2 at j = 0
// for l = 0; and the level-1 value beta^{2,[1]} = 1 together with its
// q-inversion mirror at l = -1.
inline bool beta_supported(int d, int j, int l) {
    if (d >= -1 && d <= 1) return true;
    if (j != 0) return false;
    if ((d == 2 || d == -2) && l == 0) return true;
    if (d == 2 && l == 1) return true;
    if (d == -2 && l == -1) return true;
    return false;
}

template <class Ctx>
ZSeries<typename Ctx::F> beta_series(const Ctx& ctx, int d, int j, int l, const EpsPair& base,
                                     const Monomial& zscale) {
    using F = typename Ctx::F;
    const int D = ctx.grid().D;
    if (!beta_supported(d, j, l))
        throw UnsupportedBetaError("no stored blowup coefficient for d=" + std::to_string(d) +
                                   ", j=" + std::to_string(j) + ", l=" + std::to_string(l));
    ZSeries<F> s(D, ZSeries<F>::kInfTrunc);
    Monomial ab = base.product();
    if (j == 0) {
        s.add(0, FieldOps<F>::one());
        if (d == 2 && l == 0)
            s.add(D, FieldOps<F>::mul_rational(ctx.eval(ab * zscale), Rational(-1)));
        if (d == -2 && l == 0)
            s.add(D, FieldOps<F>::mul_rational(ctx.eval(ab.inverse() * zscale), Rational(-1)));
        return s;
    }
    // j = 1 table column
    if (d == 0) return s;  // zero
    Monomial m = (d == 1 ? ab : ab.inverse()) * zscale;
    s.add(D / 4, FieldOps<F>::mul_rational(ctx.eval(m.pow(make_rational(1, 4))),
                                           Rational(d == 1 ? -1 : 1)));
    return s;
}

template <class Ctx>
ZSeries<typename Ctx::F> beta_coeff(const Ctx& ctx, int d, int j, int l) {
    Vars V{ctx.grid()};
    return beta_series(ctx, d, j, l, EpsPair{V.q1(), V.q2()}, Monomial::one());
}

// beta^d_j Z_inst^{[l]}(u; q1, q2 | z) - (lattice sum), expected zero
template <class Ctx>
ZSeries<typename Ctx::F> ny_residual(const Ctx& ctx, SeriesCache* cache, int l, int d, int j,
                                     std::int64_t trunc) {
    Vars V{ctx.grid()};
    auto beta = beta_coeff(ctx, d, j, l);
    auto z = instanton_series(ctx, cache, l, EpsPair{V.q1(), V.q2()}, V.u(), trunc);
    return (z * beta).truncated(trunc) - ny_rhs_sum(ctx, cache, l, d, j, trunc);
}

// (lattice sum) / Z_inst: the would-be beta^d_j, whatever it is
template <class Ctx>
ZSeries<typename Ctx::F> derive_beta(const Ctx& ctx, SeriesCache* cache, int l, int j, int d,
                                     std::int64_t trunc) {
    Vars V{ctx.grid()};
    auto rhs = ny_rhs_sum(ctx, cache, l, d, j, trunc);
    auto z = instanton_series(ctx, cache, l, EpsPair{V.q1(), V.q2()}, V.u(), trunc);
    return rhs.divide(z);
}

// u-independence of a derived coefficient, point backend: re-derive at a
// second u-root and compare exactly.
inline bool derived_beta_u_independent(const PointContext& ctx, SeriesCache* cache, int l, int j,
                                       int d, std::int64_t trunc, const Rational& alt_u_root,
                                       int window) {
    PointContext alt{ctx.point.with_u_root(alt_u_root, window)};
    auto b1 = derive_beta(ctx, cache, l, j, d, trunc);
    auto b2 = derive_beta(alt, cache, l, j, d, trunc);
    return (b1 - b2).is_zero();
}

// u-independence on the symbolic backend: no U exponent may survive
inline bool derived_beta_u_independent_sym(SymSeries s) {
    for (const auto& [tick, v] : s.coeffs()) {
        RationalFunction r = v;
        r.reduce();
        for (const auto& [m, c] : r.num().terms())
            if (m.e[2] != 0) return false;
        for (const auto& [f, e] : r.den_factors())
            for (const auto& [m, c] : f.terms())
                if (m.e[2] != 0) return false;
    }
    return true;
}

}  // namespace qb
