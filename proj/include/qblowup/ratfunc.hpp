#pragma once

#include <functional>
#include <map>
#include <string>

#include "qblowup/laurent.hpp"

namespace qb {

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

bool lp_less(const LaurentPolynomial& a, const LaurentPolynomial& b);

struct LPLess {
    bool operator()(const LaurentPolynomial& a, const LaurentPolynomial& b) const {
        return lp_less(a, b);
    }
};

// Rational function num / prod_i f_i^{e_i} over the Laurent ring.  The
// denominator is kept factored: every factor is unit-normalized (its
// lexicographically least term is 1 at exponent 0, any monomial content
// cleared into the numerator), so the denominators that arise from pole
// factors (1 - monomial) stay factored through arithmetic and fraction
// reduction is a cheap per-factor exact-division test instead of a full
// gcd.  laurent_gcd runs only in reduce().
class RationalFunction {
  public:
    using FactorMap = std::map<LaurentPolynomial, int, LPLess>;

    RationalFunction() = default;  // zero
    explicit RationalFunction(const Rational& c) : num_(c) {}
    explicit RationalFunction(const LaurentPolynomial& p) : num_(p) {}
    RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den);

    static RationalFunction one() { return RationalFunction(Rational(1)); }

    const LaurentPolynomial& num() const { return num_; }
    const FactorMap& den_factors() const { return den_; }
    LaurentPolynomial den_expanded() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction mul_scalar(const Rational& c) const;
    // multiply by f^mult (mult may be negative: divides)
    void mul_factor(const LaurentPolynomial& f, int mult);

    bool operator==(const RationalFunction& o) const { return (*this - o).is_zero(); }

    // cancel denominator factors that divide the numerator exactly
    void cancel();
    // cancel(), then a full gcd reduction against the expanded denominator
    void reduce();

    // substitute a point; eval_mono maps a monomial to its exact value.
    // Throws DivisionByZeroError naming the factor that vanishes.
    Rational evaluate(const std::function<Rational(const Monomial&)>& eval_mono) const;

    std::string str(int D = 16) const;

  private:
    void push_den_factor(const LaurentPolynomial& f, int mult);

    LaurentPolynomial num_;
    FactorMap den_;
};

}  // namespace qb
