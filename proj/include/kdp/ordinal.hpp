#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdp/integer.hpp"
#include "kdp/numpoly.hpp"

namespace kdp {

// Ordinal below w^w in Cantor normal form: a sum of terms w^e * c with
// strictly decreasing natural exponents and positive integer coefficients.
// Zero is the empty term list.
class Ordinal {
public:
    using Term = std::pair<unsigned, Integer>;  // (exponent, coefficient)

    Ordinal() = default;
    // Validates CNF shape: exponents strictly decreasing, coefficients >= 1.
    static Ordinal from_terms(std::vector<Term> terms);
    static Ordinal omega_power(unsigned e, const Integer& coeff = 1);
    static Ordinal natural(const Integer& n);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    unsigned leading_exponent() const;

    bool operator==(const Ordinal& rhs) const = default;

private:
    std::vector<Term> terms_;
};

Ordering compare(const Ordinal& a, const Ordinal& b);
bool operator<(const Ordinal& a, const Ordinal& b);
bool operator<=(const Ordinal& a, const Ordinal& b);

// Ordinal addition: the left summand's terms below the right summand's
// leading exponent are absorbed. Associative, not commutative.
Ordinal ordinal_sum(const Ordinal& a, const Ordinal& b);

// Hessenberg natural sum: coefficients add exponent-wise. Commutative,
// associative, and ordinal_sum(a, b) <= natural_sum(a, b).
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

// Order isomorphism between N^m under colex and the ordinals below w^m:
// the tuple (r_1, ..., r_m) maps to sum_i w^(i-1) * r_i.
Ordinal ordinal_of_tuple(std::span<const Integer> r);
std::vector<Integer> tuple_of_ordinal(const Ordinal& eta, unsigned m);

// Rendering like "w^2*3 + w*1 + 4"; parse_ordinal accepts the same grammar.
std::string to_pretty(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

}  // namespace kdp
