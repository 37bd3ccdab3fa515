#include "qblowup/prefactor.hpp"

#include <array>
#include <map>

namespace qb {

namespace {

// ---------------------------------------------------------------------------
// polynomials in the formal symbols (Lu, L1, L2, Lz) over Q

using Exp4 = std::array<int, 4>;

struct P4 {
    std::map<Exp4, Rational> t;

    static P4 scalar(const Rational& c) {
        P4 p;
        if (c != 0) p.t[{0, 0, 0, 0}] = c;
        return p;
    }
    bool is_zero() const { return t.empty(); }

    void add_term(const Exp4& e, const Rational& c) {
        if (c == 0) return;
        auto [it, ins] = t.emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    P4 operator+(const P4& o) const {
        P4 p = *this;
        for (const auto& [e, c] : o.t) p.add_term(e, c);
        return p;
    }
    P4 operator-(const P4& o) const {
        P4 p = *this;
        for (const auto& [e, c] : o.t) p.add_term(e, -c);
        return p;
    }
    P4 operator*(const P4& o) const {
        P4 p;
        for (const auto& [ea, ca] : t)
            for (const auto& [eb, cb] : o.t) {
                Exp4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                p.add_term(e, ca * cb);
            }
        return p;
    }
    P4 mul_scalar(const Rational& c) const {
        P4 p;
        if (c == 0) return p;
        for (const auto& [e, cc] : t) p.t.emplace(e, cc * c);
        return p;
    }

    // exact division; exponents are nonnegative here so the plain
    // leading-term reduction terminates
    std::optional<P4> exact_divide(const P4& d) const {
        if (d.is_zero()) throw std::domain_error("P4 division by zero");
        P4 r = *this, q;
        auto [dm, dc] = *d.t.rbegin();
        while (!r.is_zero()) {
            auto [rm, rc] = *r.t.rbegin();
            Exp4 qm;
            for (int i = 0; i < 4; ++i) {
                qm[i] = rm[i] - dm[i];
                if (qm[i] < 0) return std::nullopt;
            }
            Rational qc = rc / dc;
            q.add_term(qm, qc);
            P4 sub;
            for (const auto& [e, c] : d.t) {
                Exp4 ee{e[0] + qm[0], e[1] + qm[1], e[2] + qm[2], e[3] + qm[3]};
                sub.add_term(ee, c * qc);
            }
            r = r - sub;
        }
        return q;
    }
};

P4 sym(int i) {
    P4 p;
    Exp4 e{0, 0, 0, 0};
    e[i] = 1;
    p.t[e] = 1;
    return p;
}

constexpr int kLu = 0, kL1 = 1, kL2 = 2, kLz = 3;

// log of a monomial as a linear form in (Lu, L1, L2)
P4 log_mono(Grid grid, const Monomial& m) {
    P4 p;
    if (m.e[2] != 0) p.add_term({1, 0, 0, 0}, make_rational(m.e[2], grid.D));
    if (m.e[0] != 0) p.add_term({0, 1, 0, 0}, make_rational(m.e[0], grid.D));
    if (m.e[1] != 0) p.add_term({0, 0, 1, 0}, make_rational(m.e[1], grid.D));
    return p;
}

// classical exponent of one factor as a fraction (num, den):
//   -(log u_arg)^2 (Lz + log z_scale - log eps1 - log eps2) / (4 log eps1 log eps2)
std::pair<P4, P4> classical_exponent(Grid grid, const FactorSpec& f) {
    P4 lu = log_mono(grid, f.u_arg);
    P4 a = log_mono(grid, f.eps1), b = log_mono(grid, f.eps2);
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("Omega-background monomial equal to 1");
    P4 zlog = sym(kLz) + log_mono(grid, f.z_scale) - a - b;
    P4 num = (lu * lu * zlog).mul_scalar(Rational(-1));
    P4 den = (a * b).mul_scalar(Rational(4));
    return {num, den};
}

}  // namespace

ClassicalRatio classical_ratio(Grid grid, const std::vector<FactorSpec>& factors,
                               const std::vector<WeightedFactor>& reference) {
    // accumulate sum of fractions num/den exactly
    P4 num = P4::scalar(Rational(0)), den = P4::scalar(Rational(1));
    auto accumulate = [&](const P4& n, const P4& d, const Rational& w) {
        // num/den + w * n/d
        num = num * d + n.mul_scalar(w) * den;
        den = den * d;
    };
    for (const auto& f : factors) {
        auto [n, d] = classical_exponent(grid, f);
        accumulate(n, d, Rational(1));
    }
    for (const auto& r : reference) {
        auto [n, d] = classical_exponent(grid, r.spec);
        accumulate(n, d, -r.weight);
    }

    auto q = num.exact_divide(den);
    if (!q)
        throw NonMonomialPrefactorError(
            "classical prefactor is not a monomial: inconsistent shift pattern");
    // must be linear in the log symbols with no constant term
    Rational cu(0), c1(0), c2(0), cz(0);
    for (const auto& [e, c] : q->t) {
        int total = e[0] + e[1] + e[2] + e[3];
        if (total != 1) {
            bool quadratic_u = e[kLu] >= 2;
            throw NonMonomialPrefactorError(
                quadratic_u ? "quadratic log u terms do not cancel in the classical prefactor"
                            : "classical prefactor exponent is not linear in the logs");
        }
        if (e[kLu]) cu = c;
        if (e[kL1]) c1 = c;
        if (e[kL2]) c2 = c;
        if (e[kLz]) cz = c;
    }
    ClassicalRatio out;
    out.mono = Monomial{{grid.root_exponent(c1), grid.root_exponent(c2), grid.root_exponent(cu)}};
    out.z_tick = grid.root_exponent(cz);
    return out;
}

// ---------------------------------------------------------------------------
// 1-loop ratios via the plethystic expansion

namespace {

// 2-variable Laurent fractions in x = q1^k, y = q2^k; reuse the Laurent
// polynomial type with the U slot pinned to zero.
struct Fraction {
    LaurentPolynomial num, den;

    Fraction() : num(), den(LaurentPolynomial::one()) {}

    void accumulate(const LaurentPolynomial& n, const LaurentPolynomial& d, int sign) {
        num = num * d + (sign > 0 ? n : -n) * den;
        den = den * d;
    }
};

Monomial xy_mono(std::int64_t a, std::int64_t b) { return Monomial{{a, b, 0}}; }

// q-exponents (and the u power) of a monomial; throws when not on integer
// q-powers, which never happens for lattice-shift arguments
std::array<std::int64_t, 3> q_exponents(Grid grid, const Monomial& m, const char* what) {
    if (m.e[0] % grid.D || m.e[1] % grid.D || m.e[2] % grid.D)
        throw TelescopingError(std::string("fractional exponent in 1-loop ") + what);
    return {m.e[0] / grid.D, m.e[1] / grid.D, m.e[2] / grid.D};
}

}  // namespace

OneLoopProduct one_loop_ratio(Grid grid, const std::vector<FactorSpec>& factors,
                              const std::vector<FactorSpec>& reference) {
    // R_sigma(x, y) for the u and the u^-1 direction
    Fraction R[2];

    auto add_factor = [&](const FactorSpec& f, int sign) {
        auto ue = q_exponents(grid, f.u_arg, "u-argument");
        if (ue[2] != 1) throw TelescopingError("1-loop u-argument must carry exactly one u");
        auto ae = q_exponents(grid, f.eps1, "Omega parameter");
        auto be = q_exponents(grid, f.eps2, "Omega parameter");
        LaurentPolynomial d = LaurentPolynomial::one_minus(xy_mono(ae[0], ae[1])) *
                              LaurentPolynomial::one_minus(xy_mono(be[0], be[1]));
        // sigma = +1: w = u_arg;  sigma = -1: w = u_arg^{-1}
        R[0].accumulate(LaurentPolynomial::term(xy_mono(ue[0], ue[1]), Rational(1)), d, sign);
        R[1].accumulate(LaurentPolynomial::term(xy_mono(-ue[0], -ue[1]), Rational(1)), d, sign);
    };
    for (const auto& f : factors) add_factor(f, +1);
    for (const auto& r : reference) add_factor(r, -1);

    OneLoopProduct out;
    for (int s = 0; s < 2; ++s) {
        if (R[s].num.is_zero()) continue;
        auto poly = R[s].num.exact_divide(R[s].den);
        if (!poly)
            throw TelescopingError(
                "1-loop ratio does not telescope to a finite product for this shift pattern");
        for (const auto& [m, c] : poly->terms()) {
            if (!is_integer(c))
                throw TelescopingError("non-integer multiplicity in telescoped 1-loop ratio");
            long e = to_long(c);
            if (e == 0) continue;
            Monomial mono{{m.e[0] * grid.D, m.e[1] * grid.D, (s == 0 ? 1 : -1) * grid.D}};
            out.factors.push_back(OneLoopFactor{mono, static_cast<int>(e)});
        }
    }
    return out;
}

}  // namespace qb
