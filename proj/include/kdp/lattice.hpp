#pragma once

#include <vector>

#include "kdp/numpoly.hpp"

namespace kdp {

using LatticePoint = std::vector<unsigned>;

unsigned order_of(const LatticePoint& u);
// hi >= lo in every coordinate
bool dominates(const LatticePoint& hi, const LatticePoint& lo);

// Minimal elements of a finite set of lattice points (an antichain).
std::vector<LatticePoint> minimize(std::vector<LatticePoint> points);

// A family of antichains in N^m, one per tracked coordinate. A lattice point
// u is free for coordinate j when no element of coords[j] lies below u.
struct LeaderSet {
    unsigned m = 1;
    std::vector<std::vector<LatticePoint>> coords;

    // Validates shape, minimizes each antichain, sorts for canonical form.
    static LeaderSet make(unsigned m, std::vector<std::vector<LatticePoint>> coords);
};

// Number of (coordinate, point) pairs with |u| <= t and u free for the
// coordinate. OpenMP kernel splitting on the first coordinate of u.
Integer count_free_points(const LeaderSet& ls, unsigned t);
// Serial reference implementation, kept for testing and benchmarking.
Integer count_free_points_serial(const LeaderSet& ls, unsigned t);

struct DimensionPolynomial {
    NumericalPolynomial poly;
    unsigned threshold = 0;  // poly(t) == count_free_points(t) for all t >= threshold
};

// Closed form by inclusion-exclusion over subsets of each antichain, with
// equal joins deduplicated into net signs.
DimensionPolynomial dimension_polynomial(const LeaderSet& ls);

// Number of coordinates with an empty antichain; equals m! times the leading
// monomial coefficient when the polynomial has degree m.
unsigned delta_rank(const LeaderSet& ls);

}  // namespace kdp
