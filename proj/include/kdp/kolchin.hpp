#pragma once

#include <span>
#include <vector>

#include "kdp/numpoly.hpp"
#include "kdp/ordinal.hpp"

namespace kdp {

// Canonical decomposition P = sum_{i=1..n} C(T + a_i - (i-1), a_i) with
// a_1 >= a_2 >= ... >= a_n >= 0. Exists and is unique exactly for the
// polynomials realizable as dimension polynomials.
struct KolchinDecomposition {
    std::vector<unsigned> exponents;
};

// Greedy peeling: the i-th exponent is the degree of the running remainder.
// Throws not_in_p when no decomposition exists.
KolchinDecomposition decompose(const NumericalPolynomial& p);

NumericalPolynomial reconstruct(std::span<const unsigned> exponents);

// rank(P) = sum_i w^(a_i), summed with ordinal_sum. Since the exponents are
// nonincreasing no absorption occurs and the CNF coefficient of w^e is the
// multiplicity of e.
Ordinal rank(const KolchinDecomposition& d);
Ordinal rank(const NumericalPolynomial& p);

struct BoundsReport {
    unsigned k = 0;  // degree of the polynomial
    Integer n;       // leading binomial coefficient
    Ordinal rank;
    bool holds = false;  // w^k * n <= rank < w^k * (n+1)
};

// Checks the two-sided rank estimate for a nonzero decomposable polynomial.
BoundsReport check_rank_bounds(const NumericalPolynomial& p);

}  // namespace kdp
