#pragma once

#include <cstdint>
#include <vector>

#include "qblowup/laurent.hpp"
#include "qblowup/monomial.hpp"
#include "qblowup/series.hpp"

namespace qb {

struct NonMonomialPrefactorError : std::domain_error {
    using std::domain_error::domain_error;
};
struct TelescopingError : std::domain_error {
    using std::domain_error::domain_error;
};

// One full-Z factor Z(u_arg; eps1, eps2 | z_scale * z) appearing in a blowup
// product.  u_arg carries exactly one power of u; the eps monomials and
// z_scale live on the root-exponent grid.
struct FactorSpec {
    Monomial u_arg;
    Monomial eps1, eps2;
    Monomial z_scale;  // defaults to 1
};

struct WeightedFactor {
    FactorSpec spec;
    Rational weight;  // exponent weight of the reference factor
};

// exp(E) for the ratio of classical parts: a monomial times a z-power
struct ClassicalRatio {
    Monomial mono;
    std::int64_t z_tick = 0;
};

// Ratio of classical parts prod_f Z_cl(f) / prod_r Z_cl(r)^w computed by
// expanding -log^2(u_arg)/(4 log eps1 log eps2) * log(z_scale * z / eps1 eps2)
// in formal log symbols.  All terms quadratic in log u must cancel and the
// result must be linear in the logs; otherwise the shift pattern is
// inconsistent and NonMonomialPrefactorError is thrown.
ClassicalRatio classical_ratio(Grid grid, const std::vector<FactorSpec>& factors,
                               const std::vector<WeightedFactor>& reference);

// (1 - mono)^exponent factors of a 1-loop ratio
struct OneLoopFactor {
    Monomial mono;
    int exponent;
};

struct OneLoopProduct {
    std::vector<OneLoopFactor> factors;

    template <class Ctx>
    typename Ctx::F evaluate(const Ctx& ctx) const {
        auto v = FieldOps<typename Ctx::F>::one();
        for (const auto& f : factors) {
            if (f.exponent > 0) {
                auto b = ctx.one_minus(f.mono);
                for (int i = 0; i < f.exponent; ++i) v = v * b;
            } else {
                auto b = ctx.inv_one_minus(f.mono);
                for (int i = 0; i < -f.exponent; ++i) v = v * b;
            }
        }
        return v;
    }
};

// Ratio of 1-loop parts prod_f Z_1loop(f) / prod_r Z_1loop(r), telescoped to
// a finite product of factors (1 - u^{+-1} q1^a q2^b)^{+-c} through the
// plethystic expansion -log (w; a, b)_inf = sum_k w^k / (k (1-a^k)(1-b^k)).
// Throws TelescopingError when the ratio is not a finite product.
OneLoopProduct one_loop_ratio(Grid grid, const std::vector<FactorSpec>& factors,
                              const std::vector<FactorSpec>& reference);

}  // namespace qb
