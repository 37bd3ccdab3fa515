#pragma once

#include <string>
#include <vector>

#include "qblowup/series.hpp"

namespace qb {

struct DegenerateParameterError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact rational assignments to the root variables Q1, Q2, U.  Nondegeneracy
// is checked on a finite exponent window at construction: none of q1, q2,
// q1/q2 may be a root of unity (for rationals that means = +-1) and u must
// avoid the pole set u = q1^a q2^b for |a|, |b| <= window.
class ParameterPoint {
  public:
    ParameterPoint(const Rational& q1_root, const Rational& q2_root, const Rational& u_root,
                   Grid grid, int window) : Q1_(q1_root), Q2_(q2_root), U_(u_root), grid_(grid) {
        validate(window);
    }

    const Rational& Q1() const { return Q1_; }
    const Rational& Q2() const { return Q2_; }
    const Rational& U() const { return U_; }
    Grid grid() const { return grid_; }

    Rational q1() const { return pow_int(Q1_, grid_.D); }
    Rational q2() const { return pow_int(Q2_, grid_.D); }
    Rational u() const { return pow_int(U_, grid_.D); }

    Rational eval(const Monomial& m) const {
        return pow_int(Q1_, m.e[0]) * pow_int(Q2_, m.e[1]) * pow_int(U_, m.e[2]);
    }

    ParameterPoint with_u_root(const Rational& u_root, int window) const {
        return ParameterPoint(Q1_, Q2_, u_root, grid_, window);
    }

    std::string key() const {
        return "Q1=" + rational_str(Q1_) + ",Q2=" + rational_str(Q2_) + ",U=" +
               rational_str(U_) + ",D=" + std::to_string(grid_.D);
    }

  private:
    void validate(int window) const {
        auto abs_is_one = [](const Rational& r) { return r == 1 || r == -1; };
        if (Q1_ == 0 || Q2_ == 0 || U_ == 0)
            throw DegenerateParameterError("parameter point with a zero root value");
        if (abs_is_one(Q1_) || abs_is_one(Q2_) || abs_is_one(U_))
            throw DegenerateParameterError("root values on the unit circle are degenerate");
        Rational v1 = q1(), v2 = q2(), vu = u();
        if (abs_is_one(v1) || abs_is_one(v2))
            throw DegenerateParameterError("q1 or q2 is a root of unity at this point");
        if (v1 == v2 || v1 == -v2)
            throw DegenerateParameterError("q1/q2 is a root of unity at this point");
        // u must miss q1^a q2^b on the window (covers u^-1 as well)
        for (int a = -window; a <= window; ++a) {
            Rational pa = pow_int(v1, a);
            for (int b = -window; b <= window; ++b) {
                Rational val = pa * pow_int(v2, b);
                if (val == vu)
                    throw DegenerateParameterError(
                        "u = q1^" + std::to_string(a) + " q2^" + std::to_string(b) +
                        " hits the pole set of the instanton sum");
                if ((a != 0 || b != 0) && val == 1)
                    throw DegenerateParameterError(
                        "q1^" + std::to_string(a) + " q2^" + std::to_string(b) +
                        " = 1: degenerate Omega background");
            }
        }
    }

    Rational Q1_, Q2_, U_;
    Grid grid_;
};

// Point backend: every monomial evaluates to an exact rational.
struct PointContext {
    using F = Rational;

    ParameterPoint point;

    Grid grid() const { return point.grid(); }
    F eval(const Monomial& m) const { return point.eval(m); }
    F one_minus(const Monomial& m) const {
        if (m.is_one()) throw std::invalid_argument("factor (1 - m) with m = 1 vanishes");
        return Rational(1) - point.eval(m);
    }
    F inv_one_minus(const Monomial& m) const {
        F v = one_minus(m);
        if (v == 0)
            throw DegenerateParameterError("factor 1 - " + m.str(grid().D) +
                                           " vanishes at point " + point.key());
        return Rational(1) / v;
    }
    std::string key() const { return "point:" + point.key(); }
};

// Symbolic backend: coefficients are rational functions of the root
// variables with lazily reduced factored denominators.
struct SymbolicContext {
    using F = RationalFunction;

    Grid grid_;

    Grid grid() const { return grid_; }
    F eval(const Monomial& m) const {
        return RationalFunction(LaurentPolynomial::term(m, Rational(1)));
    }
    F one_minus(const Monomial& m) const {
        return RationalFunction(LaurentPolynomial::one_minus(m));
    }
    F inv_one_minus(const Monomial& m) const {
        return RationalFunction(LaurentPolynomial::one(), LaurentPolynomial::one_minus(m));
    }
    std::string key() const { return "sym:D=" + std::to_string(grid_.D); }
};

// coefficientwise substitution of the z-argument z -> base^power * z
template <class Ctx>
ZSeries<typename Ctx::F> scale_z_argument(const Ctx& ctx, const ZSeries<typename Ctx::F>& s,
                                          const Monomial& base, const Rational& power) {
    ZSeries<typename Ctx::F> out(s.D(), s.trunc());
    for (const auto& [tick, v] : s.coeffs()) {
        Monomial f = base.pow(power * make_rational(tick, s.D()));
        out.add(tick, v * ctx.eval(f));
    }
    return out;
}

// default verification points; q1 < 1 < q2 in all of them
std::vector<ParameterPoint> default_points(Grid grid, int window);
// alternate u-root for u-independence checks, paired with default_points
Rational alternate_u_root(std::size_t point_index);

}  // namespace qb
