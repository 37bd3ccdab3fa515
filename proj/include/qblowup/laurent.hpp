#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qblowup/monomial.hpp"
#include "qblowup/rational.hpp"

namespace qb {

// Laurent polynomial in the root variables Q1, Q2, U with exact rational
// coefficients.  Terms are kept in lexicographic exponent order and zero
// coefficients are never stored.
class LaurentPolynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Rational& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }

    static LaurentPolynomial term(const Monomial& m, const Rational& c) {
        LaurentPolynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    static LaurentPolynomial one() { return LaurentPolynomial(Rational(1)); }
    // 1 - m, the shape every pole factor in the instanton sums takes
    static LaurentPolynomial one_minus(const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);

    LaurentPolynomial mul_term(const Monomial& m, const Rational& c) const;
    LaurentPolynomial mul_scalar(const Rational& c) const;

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    // lexicographically least / greatest term
    std::pair<Monomial, Rational> lex_least() const;
    std::pair<Monomial, Rational> lex_greatest() const;

    // componentwise minimum of exponents over all terms (monomial content)
    Monomial min_exponents() const;

    // p = unit * q where unit is the lex-least term and q has lex-least
    // term 1 at exponent 0; the canonical form used for pole factors.
    std::pair<std::pair<Monomial, Rational>, LaurentPolynomial> normalize_unit() const;

    // exact division in the Laurent ring; nullopt when not divisible
    std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& d) const;

    std::string str(int D = 16) const;

  private:
    TermMap terms_;
};

// gcd up to a unit; result is unit-normalized (lex-least term = 1 at 0).
// Full multivariate PRS; used only on demand, never in the hot path.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace qb
