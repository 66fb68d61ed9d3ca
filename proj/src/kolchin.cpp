#include "kdp/kolchin.hpp"

#include "kdp/error.hpp"

namespace kdp {

KolchinDecomposition decompose(const NumericalPolynomial& p) {
    // The pair (degree, leading coefficient) decreases lexicographically each
    // step, so the loop terminates; the summand count is bounded by the sum of
    // the positive coefficients encountered. Guard against absurd inputs.
    constexpr std::size_t kMaxSummands = 1u << 20;
    KolchinDecomposition d;
    NumericalPolynomial rem = p;
    while (!rem.is_zero()) {
        if (d.exponents.size() >= kMaxSummands)
            throw domain_error(errc::cap_exceeded, "decomposition exceeds the summand cap");
        if (rem.leading_coeff() < 0)
            throw domain_error(errc::not_in_p,
                               "no canonical decomposition: remainder " + rem.to_string() +
                                   " has negative leading coefficient");
        unsigned a = static_cast<unsigned>(rem.degree());
        unsigned step = static_cast<unsigned>(d.exponents.size());
        if (!d.exponents.empty() && a > d.exponents.back())
            throw domain_error(errc::not_in_p, "no canonical decomposition: degrees not monotone");
        rem = rem - NumericalPolynomial::shifted_binomial(a, step);
        d.exponents.push_back(a);
    }
    return d;
}

NumericalPolynomial reconstruct(std::span<const unsigned> exponents) {
    for (std::size_t i = 1; i < exponents.size(); ++i)
        if (exponents[i] > exponents[i - 1])
            throw schema_error("decomposition exponents must be nonincreasing");
    NumericalPolynomial p;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        p = p + NumericalPolynomial::shifted_binomial(exponents[i], static_cast<unsigned>(i));
    return p;
}

Ordinal rank(const KolchinDecomposition& d) {
    Ordinal r;
    for (unsigned a : d.exponents) r = ordinal_sum(r, Ordinal::omega_power(a));
    return r;
}

Ordinal rank(const NumericalPolynomial& p) { return rank(decompose(p)); }

BoundsReport check_rank_bounds(const NumericalPolynomial& p) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "rank bounds are stated for nonzero polynomials");
    BoundsReport rep;
    rep.k = static_cast<unsigned>(p.degree());
    rep.n = p.leading_coeff();
    rep.rank = rank(p);
    Ordinal lo = Ordinal::omega_power(rep.k, rep.n);
    Ordinal hi = Ordinal::omega_power(rep.k, rep.n + 1);
    rep.holds = lo <= rep.rank && rep.rank < hi;
    return rep;
}

}  // namespace kdp
