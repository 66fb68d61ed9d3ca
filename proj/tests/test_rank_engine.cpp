#include <doctest.h>

#include "kdp/error.hpp"
#include "kdp/prng.hpp"
#include "kdp/rank_engine.hpp"
#include "kdp/verify.hpp"

using namespace kdp;

TEST_SUITE_BEGIN("rank_engine");

TEST_CASE("chain spec wants eta below w^m") {
    ChainSpec s = ChainSpec::make(2, parse_ordinal("w*4 + 7"));
    CHECK(s.r == std::vector<Integer>{7, 4});
    CHECK_THROWS_AS(ChainSpec::make(2, Ordinal::omega_power(2)), domain_error);
    CHECK_THROWS_AS(ChainSpec::make(0, Ordinal{}), schema_error);
}

TEST_CASE("forking criterion is strict dominance") {
    NumericalPolynomial parent({Integer(1), Integer(2)});  // 2T + 1
    NumericalPolynomial child({Integer(3)});
    CHECK(forks(parent, child));
    CHECK_FALSE(forks(parent, parent));
    CHECK_THROWS_AS((void)forks(child, parent), domain_error);
    try {
        (void)forks(child, parent);
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::not_an_extension);
    }
}

TEST_CASE("upper rank estimate is the polynomial rank") {
    NumericalPolynomial p({Integer(4), Integer(2)});
    CHECK(to_pretty(u_rank_upper(p)) == "w*2 + 3");
}

TEST_CASE("chain polynomials, frozen cases") {
    // finite eta: the count below eta is the constant eta
    ChainPolynomial c5 = chain_type_polynomial(ChainSpec::make(2, Ordinal::natural(5)));
    CHECK(c5.poly == NumericalPolynomial::constant(5));
    CHECK(c5.threshold == 5);

    // eta = w in two directions: T + 1
    ChainPolynomial cw = chain_type_polynomial(ChainSpec::make(2, Ordinal::omega_power(1)));
    CHECK(cw.poly.binomial_coeffs() == std::vector<Integer>{1, 1});
    CHECK(cw.threshold == 1);

    // eta = w*4 + 7: 4T + 5
    ChainPolynomial cb = chain_type_polynomial(ChainSpec::make(2, parse_ordinal("w*4 + 7")));
    CHECK(cb.poly.binomial_coeffs() == std::vector<Integer>{5, 4});
    CHECK(cb.threshold == 11);

    // zero eta: empty region
    ChainPolynomial c0 = chain_type_polynomial(ChainSpec::make(3, Ordinal{}));
    CHECK(c0.poly.is_zero());
    CHECK(c0.threshold == 0);
}

TEST_CASE("closed form counts the colex segment") {
    Prng rng(6101);
    for (int i = 0; i < 80; ++i) {
        unsigned m = static_cast<unsigned>(rng.range(1, 3));
        Ordinal eta = random_ordinal_below(rng, m, 5);
        ChainSpec spec = ChainSpec::make(m, eta);
        ChainPolynomial cp = chain_type_polynomial(spec);
        unsigned t0 = cp.threshold.convert_to<unsigned>();
        for (unsigned t = t0; t <= t0 + 8; ++t)
            CHECK(cp.poly(t) == count_colex_below_serial(m, spec.r, t));
    }
}

TEST_CASE("brute counter matches a direct filter") {
    // |u| <= t in N^2 below (3, 2) colex: spec.r = (3, 2), t = 5
    std::vector<Integer> r{3, 2};
    // direct: u2 < 2 gives u arbitrary below; u2 == 2 wants u1 < 3
    Integer direct = 0;
    for (unsigned u1 = 0; u1 <= 5; ++u1)
        for (unsigned u2 = 0; u1 + u2 <= 5; ++u2)
            if (u2 < 2 || (u2 == 2 && u1 < 3)) ++direct;
    CHECK(count_colex_below_serial(2, r, 5) == direct);
    CHECK(count_colex_below(2, r, 5) == direct);
}

TEST_CASE("verify_chain end to end") {
    ChainSpec spec = ChainSpec::make(2, parse_ordinal("w*2 + 3"));
    std::vector<Ordinal> samples{Ordinal::natural(3), Ordinal::omega_power(1),
                                 parse_ordinal("w + 1"), parse_ordinal("w*2")};
    ChainReport rep = verify_chain(spec, samples, 10);
    CHECK(rep.samples.size() == 5);
    CHECK(rep.chain_strict);
    CHECK(rep.generic_rank_is_omega_m);
    CHECK(rep.all_ok);
    for (const auto& s : rep.samples) {
        CHECK(s.rank_ge_zeta);
        CHECK(s.oracle_agrees);
    }
    // the polynomial at eta carries rank exactly eta here
    CHECK(rep.samples.back().rank == spec.eta);

    // samples must sit below eta
    CHECK_THROWS_AS(verify_chain(spec, {Ordinal::omega_power(1, 3)}, 5), domain_error);

    // duplicate samples collapse
    ChainReport dup = verify_chain(spec, {Ordinal::natural(1), Ordinal::natural(1)}, 5);
    CHECK(dup.samples.size() == 2);
}

TEST_CASE("chain ranks stay at or above their index") {
    Prng rng(6229);
    for (int i = 0; i < 40; ++i) {
        unsigned m = static_cast<unsigned>(rng.range(1, 3));
        Ordinal eta = random_ordinal_below(rng, m, 3);
        if (eta.is_zero()) eta = Ordinal::natural(2);
        ChainSpec spec = ChainSpec::make(m, eta);
        std::vector<Ordinal> samples;
        for (int s = 0; s < 2; ++s) {
            Ordinal z = random_ordinal_below(rng, m, 3);
            if (z < spec.eta) samples.push_back(z);
        }
        CHECK(verify_chain(spec, samples, 6).all_ok);
    }
}

TEST_CASE("two-sided rank estimate for pairs") {
    Ordinal a = parse_ordinal("w*2");
    Ordinal b = parse_ordinal("w + 1");
    CHECK(lascar_bounds(a, b, ordinal_sum(a, b)));
    CHECK(lascar_bounds(a, b, natural_sum(a, b)));
    CHECK_FALSE(lascar_bounds(a, b, Ordinal::natural(1)));
    CHECK_FALSE(lascar_bounds(a, b, Ordinal::omega_power(5)));

    Prng rng(6337);
    for (int i = 0; i < 100; ++i) {
        Ordinal x = random_ordinal_below(rng, 3, 5);
        Ordinal y = random_ordinal_below(rng, 3, 5);
        CHECK(lascar_bounds(x, y, ordinal_sum(x, y)));
        CHECK(lascar_bounds(x, y, natural_sum(x, y)));
    }
}

TEST_SUITE_END();
