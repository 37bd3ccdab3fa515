#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qb {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or "-p/q".
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt num = pow_int(BigInt(base.get_num()), a);
    BigInt den = pow_int(BigInt(base.get_den()), a);
    Rational r;
    if (e > 0)
        r = Rational(num, den);
    else
        r = Rational(den, num);
    r.canonicalize();
    return r;
}

// Canonical text form, always with an explicit denominator ("5/1", "-2/3").
inline std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit a machine integer: " + rational_str(r));
    return r.get_num().get_si();
}

}  // namespace qb
