#pragma once

#include <vector>

#include "qblowup/backends.hpp"
#include "qblowup/cache.hpp"
#include "qblowup/partitions.hpp"

namespace qb {

// Omega-background pair of one Nekrasov factor, as monomials in the roots.
struct EpsPair {
    Monomial a, b;

    EpsPair swapped() const { return EpsPair{b, a}; }
    EpsPair inverted() const { return EpsPair{a.inverse(), b.inverse()}; }
    Monomial product() const { return a * b; }
};

// Pole factors (1 - m) of the combinatorial block N_{la,mu}(uarg; eps):
//   prod_{s in la} (1 - uarg q2^{-a_mu(s)-1} q1^{l_la(s)})
// * prod_{s in mu} (1 - uarg q2^{a_la(s)}    q1^{-l_mu(s)-1})
std::vector<Monomial> nekrasov_block_factors(const Partition& la, const Partition& mu,
                                             const Monomial& uarg, const EpsPair& eps);

// the block itself, expanded
LaurentPolynomial nekrasov_block(const Partition& la, const Partition& mu, const Monomial& uarg,
                                 const EpsPair& eps);

// Chern-Simons term T_la(uarg; eps) = prod_{(i,j) in la} uarg^-1 q1^{1-i} q2^{1-j}
Monomial cs_term(const Partition& la, const Monomial& uarg, const EpsPair& eps);

std::string instanton_key(const std::string& backend_key, int l, const EpsPair& eps,
                          const Monomial& uarg);

// Z_inst^{[l]}(uarg; eps | z) as a truncated z-series over the backend field.
// The partition-pair sum runs over |la1| + |la2| <= trunc/D with
// u_1 = uarg^{1/2}, u_2 = uarg^{-1/2}.  Levels outside {0,1,2} are accepted
// here for internal symmetry checks only; the public surfaces restrict l.
template <class Ctx>
ZSeries<typename Ctx::F> instanton_series(const Ctx& ctx, SeriesCache* cache, int l,
                                          const EpsPair& eps, const Monomial& uarg,
                                          std::int64_t trunc) {
    using F = typename Ctx::F;
    const int D = ctx.grid().D;
    const std::string key = instanton_key(ctx.key(), l, eps, uarg);
    if (cache) {
        if (auto hit = cache->get<F>(key, trunc)) return *hit;
    }

    ZSeries<F> out(D, trunc);
    out.add(0, FieldOps<F>::one());
    Monomial u1 = uarg.sqrt();
    Monomial u2 = u1.inverse();
    Monomial epsprod = eps.product();
    const int kmax = trunc >= 0 ? static_cast<int>(trunc / D) : -1;
    auto lists = partitions_up_to(std::max(kmax, 0));
    for (int k = 1; k <= kmax; ++k) {
        F zk = FieldOps<F>::zero();
        for (int k1 = 0; k1 <= k; ++k1) {
            int k2 = k - k1;
            for (const Partition& la1 : lists[k1]) {
                for (const Partition& la2 : lists[k2]) {
                    Monomial num = epsprod.pow(make_rational(-l * k, 2)) * epsprod.pow(-k);
                    if (l != 0)
                        num = num * cs_term(la1, u1, eps).pow(l) * cs_term(la2, u2, eps).pow(l);
                    F val = ctx.eval(num);
                    try {
                        for (const Monomial& f : nekrasov_block_factors(la1, la1, Monomial::one(), eps))
                            val = val * ctx.inv_one_minus(f);
                        for (const Monomial& f : nekrasov_block_factors(la1, la2, uarg, eps))
                            val = val * ctx.inv_one_minus(f);
                        for (const Monomial& f : nekrasov_block_factors(la2, la1, uarg.inverse(), eps))
                            val = val * ctx.inv_one_minus(f);
                        for (const Monomial& f : nekrasov_block_factors(la2, la2, Monomial::one(), eps))
                            val = val * ctx.inv_one_minus(f);
                    } catch (const DegenerateParameterError& e) {
                        throw DegenerateParameterError("instanton term (" + la1.str() + "," +
                                                       la2.str() + "): " + e.what());
                    }
                    zk = zk + val;
                }
            }
        }
        out.add(k * D, zk);
    }
    if (cache) cache->put<F>(key, out);
    return out;
}

}  // namespace qb
