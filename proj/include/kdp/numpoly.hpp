#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdp/integer.hpp"

namespace kdp {

enum class Ordering { Less, Equal, Greater };

// Univariate polynomial taking integer values on all integers, stored with
// exact integer coefficients in the binomial basis:
//
//   P(T) = sum_i c[i] * C(T, i)
//
// The coefficient vector is kept canonical (no trailing zeros); the zero
// polynomial is the empty vector.
class NumericalPolynomial {
public:
    NumericalPolynomial() = default;
    explicit NumericalPolynomial(std::vector<Integer> binomial_coeffs);

    static NumericalPolynomial constant(const Integer& c);
    // C(T + shift, a) expanded in the binomial basis via Vandermonde:
    // the coefficient of C(T, k) is C(shift, a - k).
    static NumericalPolynomial binomial_shift(unsigned a, const Integer& shift);
    // C(T + a - s, a), the summand shape used by the canonical decomposition.
    static NumericalPolynomial shifted_binomial(unsigned a, unsigned s);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& binomial_coeffs() const { return coeffs_; }
    const Integer& leading_coeff() const;

    Integer operator()(const Integer& t) const;

    // Read-only monomial view with exact rational coefficients, index = power.
    std::vector<Rational> monomial_coeffs() const;
    Rational leading_monomial_coeff() const;

    NumericalPolynomial operator+(const NumericalPolynomial& rhs) const;
    NumericalPolynomial operator-(const NumericalPolynomial& rhs) const;
    NumericalPolynomial operator*(const Integer& s) const;
    bool operator==(const NumericalPolynomial& rhs) const = default;

    std::string to_string() const;

private:
    std::vector<Integer> coeffs_;
};

// Eventual pointwise order: P < Q iff P(t) < Q(t) for all large t, decided by
// the sign of the leading coefficient of Q - P.
Ordering compare_dominance(const NumericalPolynomial& p, const NumericalPolynomial& q);

// Newton forward-difference fit. values[j] is the sample at t = offset + j.
// Returns the unique interpolating polynomial of degree <= max_degree when the
// (d+1)-st differences vanish for some d <= max_degree, nullopt otherwise.
// Requires values.size() >= max_degree + 2.
std::optional<NumericalPolynomial> fit_from_values(std::span<const Integer> values,
                                                   const Integer& offset, unsigned max_degree);

}  // namespace kdp
