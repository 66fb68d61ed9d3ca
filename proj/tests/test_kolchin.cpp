#include <doctest.h>

#include "kdp/error.hpp"
#include "kdp/kolchin.hpp"
#include "kdp/prng.hpp"
#include "kdp/verify.hpp"

using namespace kdp;

TEST_SUITE_BEGIN("kolchin");

TEST_CASE("decomposition of frozen examples") {
    // 2T + 4 = C(T+1,1) + C(T,1) + 1 + 1 + 1
    NumericalPolynomial p({Integer(4), Integer(2)});
    KolchinDecomposition d = decompose(p);
    CHECK(d.exponents == std::vector<unsigned>{1, 1, 0, 0, 0});
    CHECK(reconstruct(d.exponents) == p);
    CHECK(to_pretty(rank(d)) == "w*2 + 3");

    // C(T+2,2) is a single summand
    NumericalPolynomial tri = NumericalPolynomial::shifted_binomial(2, 0);
    CHECK(decompose(tri).exponents == std::vector<unsigned>{2});
    CHECK(rank(tri) == Ordinal::omega_power(2));

    // zero polynomial decomposes into nothing
    CHECK(decompose(NumericalPolynomial{}).exponents.empty());
    CHECK(rank(NumericalPolynomial{}).is_zero());

    // 2T + 1 = C(T+1,1) + C(T,1)
    NumericalPolynomial q({Integer(1), Integer(2)});
    CHECK(decompose(q).exponents == std::vector<unsigned>{1, 1});
}

TEST_CASE("polynomials outside the decomposable cone") {
    // T^2 = 2*C(T,2) + C(T,1) admits no canonical decomposition
    NumericalPolynomial t2({Integer(0), Integer(1), Integer(2)});
    CHECK_THROWS_AS((void)decompose(t2), domain_error);
    try {
        (void)decompose(t2);
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::not_in_p);
    }

    NumericalPolynomial neg({Integer(-1)});
    CHECK_THROWS_AS((void)decompose(neg), domain_error);
}

TEST_CASE("reconstruct validates monotonicity") {
    CHECK_THROWS_AS((void)reconstruct(std::vector<unsigned>{1, 2}), schema_error);
    CHECK(reconstruct(std::vector<unsigned>{}).is_zero());
}

TEST_CASE("roundtrip on random exponent lists") {
    Prng rng(4001);
    for (int i = 0; i < 300; ++i) {
        std::vector<unsigned> exps = random_exponent_list(rng, 6, 4);
        NumericalPolynomial p = reconstruct(exps);
        CHECK(decompose(p).exponents == exps);
    }
}

TEST_CASE("rank multiplicities match the exponent list") {
    KolchinDecomposition d{{3, 3, 1, 0, 0, 0}};
    Ordinal r = rank(d);
    CHECK(to_pretty(r) == "w^3*2 + w*1 + 3");
}

TEST_CASE("two-sided rank bounds") {
    NumericalPolynomial p({Integer(4), Integer(2)});
    BoundsReport rep = check_rank_bounds(p);
    CHECK(rep.k == 1);
    CHECK(rep.n == 2);
    CHECK(rep.holds);

    BoundsReport one = check_rank_bounds(NumericalPolynomial::constant(1));
    CHECK(one.k == 0);
    CHECK(one.n == 1);
    CHECK(one.holds);

    CHECK_THROWS_AS((void)check_rank_bounds(NumericalPolynomial{}), domain_error);

    Prng rng(4099);
    for (int i = 0; i < 200; ++i) {
        std::vector<unsigned> exps = random_exponent_list(rng, 6, 4);
        if (exps.empty()) continue;
        CHECK(check_rank_bounds(reconstruct(exps)).holds);
    }
}

TEST_CASE("rank is strictly monotone for the eventual pointwise order") {
    Prng rng(4177);
    for (int i = 0; i < 200; ++i) {
        NumericalPolynomial p = reconstruct(random_exponent_list(rng, 5, 3));
        NumericalPolynomial q = reconstruct(random_exponent_list(rng, 5, 3));
        Ordering po = compare_dominance(p, q);
        if (po == Ordering::Equal) continue;
        CHECK(compare(rank(p), rank(q)) == po);
    }
}

TEST_SUITE_END();
