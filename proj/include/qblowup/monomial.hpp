#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qblowup/rational.hpp"

namespace qb {

// All fractional powers of q1, q2, u live on a 1/D grid; the internal
// variables are the D-th roots Q1, Q2, U, so every exponent in the system
// is an integer.  D is configurable (8, 16 or 32); construction fails on
// off-grid exponents instead of silently enlarging D.
struct Grid {
    int D = 16;

    // exponent of a root variable representing var^r, e.g. q1^(1/2) -> D/2
    std::int64_t root_exponent(const Rational& r) const {
        Rational t = r * D;
        if (!is_integer(t))
            throw std::domain_error("exponent " + rational_str(r) + " is off the 1/" +
                                    std::to_string(D) + " grid; use a larger grid denominator D");
        return to_long(t);
    }

    Rational exponent_value(std::int64_t ticks) const { Rational r(static_cast<long>(ticks), static_cast<long>(D));
        r.canonicalize();
        return r; }
};

struct OffGridError : std::domain_error {
    using std::domain_error::domain_error;
};

// Monomial Q1^a Q2^b U^c in the root variables (exponents may be negative).
struct Monomial {
    std::array<std::int64_t, 3> e{0, 0, 0};

    static Monomial one() { return Monomial{}; }

    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    Monomial operator*(const Monomial& o) const {
        return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    Monomial inverse() const { return Monomial{{-e[0], -e[1], -e[2]}}; }
    Monomial pow(std::int64_t k) const { return Monomial{{e[0] * k, e[1] * k, e[2] * k}}; }

    // m^r for rational r; every scaled exponent must stay integral.
    Monomial pow(const Rational& r) const {
        Monomial out;
        for (int i = 0; i < 3; ++i) {
            Rational t = Rational(static_cast<long>(e[i])) * r;
            if (!is_integer(t))
                throw OffGridError("monomial power " + rational_str(r) +
                                   " leaves the exponent grid; use a larger grid denominator D");
            out.e[i] = to_long(t);
        }
        return out;
    }

    Monomial sqrt() const {
        if (e[0] % 2 || e[1] % 2 || e[2] % 2)
            throw OffGridError("monomial square root leaves the exponent grid");
        return Monomial{{e[0] / 2, e[1] / 2, e[2] / 2}};
    }

    auto operator<=>(const Monomial&) const = default;

    std::string str(int D = 16) const {
        std::ostringstream os;
        const char* names[3] = {"q1", "q2", "u"};
        bool any = false;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (any) os << " ";
            any = true;
            os << names[i];
            if (e[i] != D) {
                os << "^";
                if (e[i] % D == 0)
                    os << e[i] / D;
                else
                    os << "(" << e[i] << "/" << D << ")";
            }
        }
        if (!any) return "1";
        return os.str();
    }
};

// Constructors tied to a grid: q1^k etc. with k integer or rational.
struct Vars {
    Grid grid;

    Monomial q1(std::int64_t k = 1) const { return Monomial{{k * grid.D, 0, 0}}; }
    Monomial q2(std::int64_t k = 1) const { return Monomial{{0, k * grid.D, 0}}; }
    Monomial u(std::int64_t k = 1) const { return Monomial{{0, 0, k * grid.D}}; }
    Monomial q1q2(std::int64_t k = 1) const { return q1(k) * q2(k); }

    Monomial q1_pow(const Rational& r) const { return Monomial{{grid.root_exponent(r), 0, 0}}; }
    Monomial q2_pow(const Rational& r) const { return Monomial{{0, grid.root_exponent(r), 0}}; }
    Monomial u_pow(const Rational& r) const { return Monomial{{0, 0, grid.root_exponent(r)}}; }
    Monomial q1q2_pow(const Rational& r) const { return q1_pow(r) * q2_pow(r); }
};

}  // namespace qb
