#pragma once

#include <span>
#include <vector>

#include "kdp/kolchin.hpp"
#include "kdp/numpoly.hpp"
#include "kdp/ordinal.hpp"

namespace kdp {

// Parameters for an ordinal-indexed chain in m commuting directions. eta must
// lie below w^m; r is its coefficient tuple, r[i] the coefficient of w^i.
struct ChainSpec {
    unsigned m = 1;
    Ordinal eta;
    std::vector<Integer> r;

    static ChainSpec make(unsigned m, Ordinal eta);
};

// A restriction step drops rank exactly when the child's polynomial is
// strictly below the parent's in the eventual pointwise order. The child must
// actually be a restriction, i.e. child <= parent.
bool forks(const NumericalPolynomial& parent, const NumericalPolynomial& child);

// Upper bound w-stack for the rank of any type whose polynomial is p: the
// ordinal rank of p itself.
Ordinal u_rank_upper(const NumericalPolynomial& p);

struct ChainPolynomial {
    NumericalPolynomial poly;
    Integer threshold;  // poly(t) equals the brute count for all t >= threshold
};

// Closed form for #{u in N^m : |u| <= t, u <_colex r}, assembled from one
// axis-aligned slab per coordinate with r[j] > 0.
ChainPolynomial chain_type_polynomial(const ChainSpec& spec);

// Brute-force counters over the simplex |u| <= t (oracle for the closed form).
Integer count_colex_below(unsigned m, std::span<const Integer> r, unsigned t);
Integer count_colex_below_serial(unsigned m, std::span<const Integer> r, unsigned t);

struct ChainSample {
    Ordinal zeta;
    NumericalPolynomial poly;
    Integer threshold;
    Ordinal rank;
    bool rank_ge_zeta = false;
    bool oracle_agrees = false;
};

struct ChainReport {
    unsigned m = 1;
    Ordinal eta;
    std::vector<ChainSample> samples;       // ascending, eta appended last
    std::vector<bool> strict_steps;         // strict polynomial increase between neighbors
    bool chain_strict = false;
    Ordinal generic_rank;                   // rank of the unconstrained polynomial C(T+m, m)
    bool generic_rank_is_omega_m = false;
    unsigned oracle_window = 0;
    bool all_ok = false;
};

// Builds the chain polynomial at eta and at every sample zeta < eta, checks
// strict growth along the chain, rank(zeta) >= zeta, oracle agreement on
// [threshold, threshold + oracle_window], and the generic rank w^m.
ChainReport verify_chain(const ChainSpec& spec, std::vector<Ordinal> samples,
                         unsigned oracle_window = 10);

// Two-sided estimate for the rank of a pair from the conditioned rank a and
// the base rank b: holds when ordinal_sum(a, b) <= c <= natural_sum(a, b).
bool lascar_bounds(const Ordinal& a, const Ordinal& b, const Ordinal& c);

}  // namespace kdp
