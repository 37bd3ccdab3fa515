#include "qblowup/ratfunc.hpp"

#include <sstream>

namespace qb {

bool lp_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == ea && ib != eb;
}

RationalFunction::RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den)
    : num_(num) {
    if (den.is_zero()) throw DivisionByZeroError("division by zero polynomial");
    auto [unit, f] = den.normalize_unit();
    num_ = num_.mul_term(unit.first.inverse(), Rational(1) / unit.second);
    push_den_factor(f, 1);
    cancel();
}

void RationalFunction::push_den_factor(const LaurentPolynomial& f, int mult) {
    if (mult == 0 || f.is_one()) return;
    auto it = den_.find(f);
    if (it == den_.end()) {
        if (mult < 0) throw std::logic_error("negative denominator multiplicity");
        den_.emplace(f, mult);
    } else {
        it->second += mult;
        if (it->second < 0) throw std::logic_error("negative denominator multiplicity");
        if (it->second == 0) den_.erase(it);
    }
}

void RationalFunction::mul_factor(const LaurentPolynomial& f, int mult) {
    if (mult == 0) return;
    if (f.is_zero()) {
        if (mult > 0) {
            num_ = LaurentPolynomial();
            den_.clear();
            return;
        }
        throw DivisionByZeroError("division by zero polynomial");
    }
    auto [unit, g] = f.normalize_unit();
    // unit part acts on the numerator, the normalized part on the factor map
    num_ = num_.mul_term(unit.first.pow(static_cast<std::int64_t>(mult)),
                         pow_int(unit.second, static_cast<long>(mult)));
    if (g.is_one()) return;
    if (mult > 0) {
        // numerator multiplication
        for (int i = 0; i < mult; ++i) num_ = num_ * g;
    } else {
        auto it = den_.find(g);
        int have = it == den_.end() ? 0 : it->second;
        int want = -mult;
        // cancel against existing numerator divisibility first
        while (want > 0) {
            auto q = num_.exact_divide(g);
            if (!q) break;
            num_ = std::move(*q);
            --want;
        }
        (void)have;
        if (want > 0) push_den_factor(g, want);
    }
}

LaurentPolynomial RationalFunction::den_expanded() const {
    LaurentPolynomial d = LaurentPolynomial::one();
    for (const auto& [f, e] : den_)
        for (int i = 0; i < e; ++i) d = d * f;
    return d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RationalFunction r;
    // lcm of the factored denominators
    r.den_ = den_;
    for (const auto& [f, e] : o.den_) {
        auto it = r.den_.find(f);
        if (it == r.den_.end())
            r.den_.emplace(f, e);
        else
            it->second = std::max(it->second, e);
    }
    auto cofactor = [&](const FactorMap& own) {
        LaurentPolynomial c = LaurentPolynomial::one();
        for (const auto& [f, e] : r.den_) {
            auto it = own.find(f);
            int missing = e - (it == own.end() ? 0 : it->second);
            for (int i = 0; i < missing; ++i) c = c * f;
        }
        return c;
    };
    r.num_ = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction r;
    if (is_zero() || o.is_zero()) return r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& [f, e] : o.den_) r.push_den_factor(f, e);
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by zero rational function");
    if (is_zero()) return RationalFunction();
    RationalFunction r = *this;
    // numerator of o joins the denominator (normalized), its factors join num
    for (const auto& [f, e] : o.den_) r.mul_factor(f, e);
    r.mul_factor(o.num_, -1);
    return r;
}

RationalFunction RationalFunction::mul_scalar(const Rational& c) const {
    RationalFunction r;
    if (c == 0) return r;
    r.num_ = num_.mul_scalar(c);
    r.den_ = den_;
    return r;
}

void RationalFunction::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        bool erased = false;
        while (it->second > 0) {
            auto q = num_.exact_divide(it->first);
            if (!q) break;
            num_ = std::move(*q);
            if (--it->second == 0) {
                it = den_.erase(it);
                erased = true;
                break;
            }
        }
        if (!erased) ++it;
    }
}

void RationalFunction::reduce() {
    cancel();
    if (den_.empty() || num_.is_zero()) return;
    LaurentPolynomial den = den_expanded();
    LaurentPolynomial g = laurent_gcd(num_, den);
    if (g.is_constant()) return;
    num_ = *num_.exact_divide(g);
    den = *den.exact_divide(g);
    den_.clear();
    auto [unit, f] = den.normalize_unit();
    num_ = num_.mul_term(unit.first.inverse(), Rational(1) / unit.second);
    if (!f.is_one()) den_.emplace(f, 1);
}

Rational RationalFunction::evaluate(
    const std::function<Rational(const Monomial&)>& eval_mono) const {
    auto eval_poly = [&](const LaurentPolynomial& p) {
        Rational v(0);
        for (const auto& [m, c] : p.terms()) v += c * eval_mono(m);
        return v;
    };
    Rational v = eval_poly(num_);
    for (const auto& [f, e] : den_) {
        Rational fv = eval_poly(f);
        if (fv == 0)
            throw DivisionByZeroError("denominator factor vanishes at the point: " + f.str());
        for (int i = 0; i < e; ++i) v /= fv;
    }
    return v;
}

std::string RationalFunction::str(int D) const {
    if (den_.empty()) return num_.str(D);
    std::ostringstream os;
    os << "(" << num_.str(D) << ") / [";
    bool first = true;
    for (const auto& [f, e] : den_) {
        if (!first) os << " ";
        first = false;
        os << "(" << f.str(D) << ")";
        if (e != 1) os << "^" << e;
    }
    os << "]";
    return os.str();
}

}  // namespace qb
