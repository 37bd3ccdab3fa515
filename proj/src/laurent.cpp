#include "qblowup/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qb {

LaurentPolynomial LaurentPolynomial::one_minus(const Monomial& m) {
    if (m.is_one()) throw std::invalid_argument("factor (1 - m) with m = 1 vanishes");
    LaurentPolynomial p = one();
    p.add_term(m, Rational(-1));
    return p;
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool LaurentPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void LaurentPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial p = *this;
    p += o;
    return p;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial p = *this;
    p -= o;
    return p;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial p;
    if (terms_.empty() || o.terms_.empty()) return p;
    // multiply the smaller one in
    const LaurentPolynomial& a = size() <= o.size() ? *this : o;
    const LaurentPolynomial& b = size() <= o.size() ? o : *this;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

LaurentPolynomial LaurentPolynomial::mul_term(const Monomial& m, const Rational& c) const {
    LaurentPolynomial p;
    if (c == 0) return p;
    for (const auto& [mm, cc] : terms_) p.terms_.emplace(mm * m, cc * c);
    return p;
}

LaurentPolynomial LaurentPolynomial::mul_scalar(const Rational& c) const {
    LaurentPolynomial p;
    if (c == 0) return p;
    for (const auto& [mm, cc] : terms_) p.terms_.emplace(mm, cc * c);
    return p;
}

std::pair<Monomial, Rational> LaurentPolynomial::lex_least() const {
    if (terms_.empty()) throw std::logic_error("lex_least of zero polynomial");
    return *terms_.begin();
}

std::pair<Monomial, Rational> LaurentPolynomial::lex_greatest() const {
    if (terms_.empty()) throw std::logic_error("lex_greatest of zero polynomial");
    return *terms_.rbegin();
}

Monomial LaurentPolynomial::min_exponents() const {
    if (terms_.empty()) return Monomial::one();
    Monomial m = terms_.begin()->first;
    for (const auto& [mm, c] : terms_)
        for (int i = 0; i < 3; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
    return m;
}

std::pair<std::pair<Monomial, Rational>, LaurentPolynomial>
LaurentPolynomial::normalize_unit() const {
    if (terms_.empty()) throw std::logic_error("normalize_unit of zero polynomial");
    auto unit = lex_least();
    LaurentPolynomial q;
    Monomial inv = unit.first.inverse();
    for (const auto& [m, c] : terms_) q.terms_.emplace(m * inv, c / unit.second);
    return {unit, q};
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_divide(
    const LaurentPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return LaurentPolynomial();
    if (d.is_single_term()) {
        auto [m, c] = *d.terms_.begin();
        return mul_term(m.inverse(), Rational(1) / c);
    }
    // Reduce the leading (lex-greatest) term at each step.  For an exact
    // division every quotient exponent lies, variable by variable, in
    // [min(a)-min(b), max(a)-max(b)]: the top and bottom graded parts of
    // q*b multiply without cancellation.  A generated term outside that
    // box proves non-divisibility; inside it the strictly decreasing
    // leading term guarantees termination.
    Monomial qlo, qhi;
    {
        Monomial alo = min_exponents(), blo = d.min_exponents();
        Monomial ahi = alo, bhi = blo;
        for (const auto& [m, c] : terms_)
            for (int i = 0; i < 3; ++i) ahi.e[i] = std::max(ahi.e[i], m.e[i]);
        for (const auto& [m, c] : d.terms())
            for (int i = 0; i < 3; ++i) bhi.e[i] = std::max(bhi.e[i], m.e[i]);
        for (int i = 0; i < 3; ++i) {
            qlo.e[i] = alo.e[i] - blo.e[i];
            qhi.e[i] = ahi.e[i] - bhi.e[i];
        }
    }
    LaurentPolynomial r = *this;
    LaurentPolynomial q;
    auto [dm, dc] = d.lex_greatest();
    while (!r.is_zero()) {
        auto [rm, rc] = r.lex_greatest();
        Monomial qm = rm * dm.inverse();
        for (int i = 0; i < 3; ++i)
            if (qm.e[i] < qlo.e[i] || qm.e[i] > qhi.e[i]) return std::nullopt;
        Rational qc = rc / dc;
        q.add_term(qm, qc);
        r -= d.mul_term(qm, qc);
    }
    return q;
}

std::string LaurentPolynomial::str(int D) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << (is_integer(a) ? a.get_num().get_str() : rational_str(a));
        } else {
            if (a != 1) os << (is_integer(a) ? a.get_num().get_str() : rational_str(a)) << " ";
            os << m.str(D);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// multivariate gcd (primitive PRS on the content-cleared polynomials)

namespace {

using UniView = std::map<std::int64_t, LaurentPolynomial>;  // main-var degree -> coeff

UniView to_univariate(const LaurentPolynomial& p, int v) {
    UniView out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        std::int64_t deg = m.e[v];
        rest.e[v] = 0;
        out[deg].add_term(rest, c);
    }
    return out;
}

LaurentPolynomial from_univariate(const UniView& u, int v) {
    LaurentPolynomial out;
    for (const auto& [deg, coeff] : u) {
        Monomial shift;
        shift.e[v] = deg;
        out += coeff.mul_term(shift, Rational(1));
    }
    return out;
}

std::int64_t deg_of(const UniView& u) { return u.empty() ? -1 : u.rbegin()->first; }

UniView uni_sub(const UniView& a, const UniView& b) {
    UniView out = a;
    for (const auto& [d, c] : b) {
        auto it = out.find(d);
        if (it == out.end()) {
            if (!c.is_zero()) out[d] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

UniView uni_mul_coeff(const UniView& a, const LaurentPolynomial& c, std::int64_t shift) {
    UniView out;
    for (const auto& [d, cc] : a) {
        LaurentPolynomial p = cc * c;
        if (!p.is_zero()) out[d + shift] = std::move(p);
    }
    return out;
}

// pseudo-remainder of a by b in the main variable
UniView pseudo_rem(UniView a, const UniView& b) {
    std::int64_t db = deg_of(b);
    const LaurentPolynomial& lb = b.rbegin()->second;
    while (deg_of(a) >= db && !a.empty()) {
        std::int64_t da = deg_of(a);
        LaurentPolynomial la = a.rbegin()->second;
        // lb * a - la * x^(da-db) * b kills the leading term
        a = uni_sub(uni_mul_coeff(a, lb, 0), uni_mul_coeff(b, la, da - db));
    }
    return a;
}

LaurentPolynomial gcd_list(const std::vector<LaurentPolynomial>& ps);

// content of a univariate view (gcd of its coefficients)
LaurentPolynomial uni_content(const UniView& u) {
    std::vector<LaurentPolynomial> cs;
    cs.reserve(u.size());
    for (const auto& [d, c] : u) cs.push_back(c);
    return gcd_list(cs);
}

LaurentPolynomial gcd_impl(LaurentPolynomial a, LaurentPolynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : b.normalize_unit().second;
    if (b.is_zero()) return a.normalize_unit().second;
    a = a.normalize_unit().second;  // clears monomial content
    b = b.normalize_unit().second;
    if (a.is_constant() || b.is_constant()) return LaurentPolynomial::one();

    // pick a main variable occurring in both with positive degree
    int v = -1;
    for (int i = 0; i < 3 && v < 0; ++i) {
        bool ina = false, inb = false;
        for (const auto& [m, c] : a.terms()) ina |= m.e[i] != 0;
        for (const auto& [m, c] : b.terms()) inb |= m.e[i] != 0;
        if (ina && inb) v = i;
    }
    if (v < 0) return LaurentPolynomial::one();  // disjoint variable supports

    UniView ua = to_univariate(a, v), ub = to_univariate(b, v);
    LaurentPolynomial ca = uni_content(ua), cb = uni_content(ub);
    LaurentPolynomial cont = gcd_impl(ca, cb);

    auto primitive = [&](UniView u) {
        LaurentPolynomial c = uni_content(u);
        UniView out;
        for (auto& [d, p] : u) {
            auto q = p.exact_divide(c);
            out[d] = std::move(*q);
        }
        return out;
    };
    ua = primitive(ua);
    ub = primitive(ub);
    if (deg_of(ua) < deg_of(ub)) std::swap(ua, ub);

    while (true) {
        if (deg_of(ub) < 0) break;                       // gcd is ua
        if (deg_of(ub) == 0) return cont;                // coprime in v
        UniView r = pseudo_rem(ua, ub);
        ua = std::move(ub);
        ub = r.empty() ? UniView{} : primitive(std::move(r));
    }
    LaurentPolynomial pp = from_univariate(ua, v);
    return (cont * pp).normalize_unit().second;
}

LaurentPolynomial gcd_list(const std::vector<LaurentPolynomial>& ps) {
    LaurentPolynomial g;
    for (const auto& p : ps) {
        g = gcd_impl(g, p);
        if (g.is_one()) return g;
    }
    return g;
}

}  // namespace

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return gcd_impl(a, b);
}

}  // namespace qb
