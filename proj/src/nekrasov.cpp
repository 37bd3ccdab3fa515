#include "qblowup/nekrasov.hpp"

#include <sstream>

namespace qb {

std::vector<Monomial> nekrasov_block_factors(const Partition& la, const Partition& mu,
                                             const Monomial& uarg, const EpsPair& eps) {
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(la.weight() + mu.weight()));
    for (const Cell& s : la.cells())
        out.push_back(uarg * eps.b.pow(-arm_length(mu, s) - 1) * eps.a.pow(leg_length(la, s)));
    for (const Cell& s : mu.cells())
        out.push_back(uarg * eps.b.pow(arm_length(la, s)) * eps.a.pow(-leg_length(mu, s) - 1));
    return out;
}

LaurentPolynomial nekrasov_block(const Partition& la, const Partition& mu, const Monomial& uarg,
                                 const EpsPair& eps) {
    LaurentPolynomial p = LaurentPolynomial::one();
    for (const Monomial& m : nekrasov_block_factors(la, mu, uarg, eps))
        p = p * LaurentPolynomial::one_minus(m);
    return p;
}

Monomial cs_term(const Partition& la, const Monomial& uarg, const EpsPair& eps) {
    Monomial t = uarg.pow(-la.weight());
    for (const Cell& s : la.cells()) t = t * eps.a.pow(1 - s.row) * eps.b.pow(1 - s.col);
    return t;
}

std::string instanton_key(const std::string& backend_key, int l, const EpsPair& eps,
                          const Monomial& uarg) {
    auto ms = [](const Monomial& m) {
        std::ostringstream os;
        os << m.e[0] << "," << m.e[1] << "," << m.e[2];
        return os.str();
    };
    std::ostringstream os;
    os << backend_key << "|Zinst|l=" << l << "|eps=" << ms(eps.a) << ";" << ms(eps.b)
       << "|u=" << ms(uarg);
    return os.str();
}

}  // namespace qb
