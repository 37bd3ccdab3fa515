#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qblowup/monomial.hpp"
#include "qblowup/ratfunc.hpp"

namespace qb {

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational mul_rational(const Rational& x, const Rational& r) { return x * r; }
    static std::string str(const Rational& x, int) { return rational_str(x); }
};

template <>
struct FieldOps<RationalFunction> {
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction::one(); }
    static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
    static RationalFunction from_rational(const Rational& r) { return RationalFunction(r); }
    static RationalFunction mul_rational(const RationalFunction& x, const Rational& r) {
        return x.mul_scalar(r);
    }
    static std::string str(const RationalFunction& x, int D) { return x.str(D); }
};

// Truncated series in z with exponents on the 1/D grid (stored as integer
// "ticks", exponent * D).  Every stored exponent is <= trunc; trunc of a sum
// or product is the minimum of the operands' truncs.  Exact polynomials use
// the infinite sentinel.
template <class F>
class ZSeries {
  public:
    using Ops = FieldOps<F>;
    static constexpr std::int64_t kInfTrunc = std::numeric_limits<std::int64_t>::max() / 4;

    ZSeries() : D_(16), trunc_(kInfTrunc) {}
    ZSeries(int D, std::int64_t trunc_ticks) : D_(D), trunc_(trunc_ticks) {}

    static ZSeries one(int D, std::int64_t trunc = kInfTrunc) {
        ZSeries s(D, trunc);
        s.add(0, Ops::one());
        return s;
    }
    static ZSeries zterm(int D, std::int64_t tick, F c, std::int64_t trunc = kInfTrunc) {
        ZSeries s(D, trunc);
        s.add(tick, std::move(c));
        return s;
    }

    int D() const { return D_; }
    std::int64_t trunc() const { return trunc_; }
    const std::map<std::int64_t, F>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    F coeff(std::int64_t tick) const {
        auto it = c_.find(tick);
        return it == c_.end() ? Ops::zero() : it->second;
    }

    void add(std::int64_t tick, const F& v) {
        if (tick > trunc_ || Ops::is_zero(v)) return;
        auto [it, inserted] = c_.emplace(tick, v);
        if (!inserted) {
            it->second = it->second + v;
            if (Ops::is_zero(it->second)) c_.erase(it);
        }
    }

    std::optional<std::pair<std::int64_t, F>> first_nonzero() const {
        if (c_.empty()) return std::nullopt;
        return *c_.begin();
    }

    ZSeries truncated(std::int64_t t) const {
        ZSeries s(D_, std::min(t, trunc_));
        for (const auto& [e, v] : c_) {
            if (e > s.trunc_) break;
            s.c_.emplace(e, v);
        }
        return s;
    }

    ZSeries operator-() const {
        ZSeries s(D_, trunc_);
        for (const auto& [e, v] : c_) s.c_.emplace(e, Ops::mul_rational(v, Rational(-1)));
        return s;
    }

    ZSeries operator+(const ZSeries& o) const {
        check(o);
        ZSeries s(D_, std::min(trunc_, o.trunc_));
        for (const auto& [e, v] : c_) s.add(e, v);
        for (const auto& [e, v] : o.c_) s.add(e, v);
        return s;
    }
    ZSeries operator-(const ZSeries& o) const { return *this + (-o); }
    ZSeries& operator+=(const ZSeries& o) { return *this = *this + o; }
    ZSeries& operator-=(const ZSeries& o) { return *this = *this - o; }

    ZSeries operator*(const ZSeries& o) const {
        check(o);
        ZSeries s(D_, std::min(trunc_, o.trunc_));
        for (const auto& [ea, va] : c_) {
            for (const auto& [eb, vb] : o.c_) {
                if (ea + eb > s.trunc_) break;
                s.add(ea + eb, va * vb);
            }
        }
        return s;
    }
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }

    // multiply by c * z^(tick/D); the truncation window shifts along
    ZSeries mul_zpow(std::int64_t tick, const F& c) const {
        ZSeries s(D_, trunc_ >= kInfTrunc ? kInfTrunc : trunc_ + tick);
        if (Ops::is_zero(c)) {
            s.c_.clear();
            return s;
        }
        for (const auto& [e, v] : c_) s.c_.emplace(e + tick, v * c);
        return s;
    }

    ZSeries mul_coeff(const F& c) const { return mul_zpow(0, c); }

    ZSeries mul_rational(const Rational& r) const {
        ZSeries s(D_, trunc_);
        if (r == 0) return s;
        for (const auto& [e, v] : c_) s.c_.emplace(e, Ops::mul_rational(v, r));
        return s;
    }

    // q with q * o = *this up to the common truncation; o's lowest
    // coefficient must be invertible (nonzero in the field)
    ZSeries divide(const ZSeries& o) const {
        check(o);
        if (o.is_zero())
            throw DivisionByZeroError("series division by zero series");
        auto [v, bv] = *o.first_nonzero();
        std::int64_t tq = std::min(trunc_, o.trunc_) - v;
        ZSeries q(D_, tq);
        if (is_zero()) return q;
        std::int64_t lo = c_.begin()->first - v;
        for (std::int64_t e = lo; e <= tq; ++e) {
            F acc = coeff(e + v);
            for (const auto& [eq, vq] : q.c_) {
                // subtract q_eq * b_{e+v-eq}
                auto it = o.c_.find(e + v - eq);
                if (it != o.c_.end()) acc = acc - vq * it->second;
            }
            if (!Ops::is_zero(acc)) q.c_.emplace(e, acc / bv);
        }
        return q;
    }

    // exp of a series with positive valuation
    ZSeries exp() const {
        if (!c_.empty() && c_.begin()->first <= 0)
            throw std::domain_error("series exp needs positive valuation");
        if (trunc_ >= kInfTrunc && !c_.empty())
            throw std::domain_error("series exp needs a finite truncation");
        ZSeries e(D_, trunc_);
        e.add(0, Ops::one());
        for (std::int64_t n = 1; n <= trunc_; ++n) {
            F acc = Ops::zero();
            bool any = false;
            for (const auto& [k, ak] : c_) {
                if (k > n) break;
                auto it = e.c_.find(n - k);
                if (it == e.c_.end()) continue;
                acc = acc + Ops::mul_rational(ak * it->second, Rational(k));
                any = true;
            }
            if (any) {
                acc = Ops::mul_rational(acc, make_rational(1, n));
                if (!Ops::is_zero(acc)) e.c_.emplace(n, acc);
            }
        }
        return e;
    }

    bool operator==(const ZSeries& o) const { return D_ == o.D_ && c_ == o.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << Ops::str(v, D_) << ")";
            if (e != 0) {
                os << " z";
                if (e != D_) {
                    if (e % D_ == 0)
                        os << "^" << e / D_;
                    else
                        os << "^(" << e << "/" << D_ << ")";
                }
            }
        }
        return os.str();
    }

  private:
    void check(const ZSeries& o) const {
        if (D_ != o.D_) throw std::logic_error("mixing series on different exponent grids");
    }

    int D_;
    std::int64_t trunc_;
    std::map<std::int64_t, F> c_;
};

using PointSeries = ZSeries<Rational>;
using SymSeries = ZSeries<RationalFunction>;

}  // namespace qb
