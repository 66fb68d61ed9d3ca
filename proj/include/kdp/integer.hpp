#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kdp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned k);

// Generalized binomial coefficient C(x, k) for arbitrary integer x. Computed
// by the falling-factorial product with stepwise exact division.
Integer binomial(const Integer& x, unsigned k);

}  // namespace kdp
