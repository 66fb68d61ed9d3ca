#include <doctest.h>

#include "kdp/error.hpp"
#include "kdp/json_io.hpp"
#include "kdp/prng.hpp"
#include "kdp/verify.hpp"

using namespace kdp;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("integers cross the 64-bit boundary as strings") {
    CHECK(json_of_integer(Integer(42)) == json(42));
    CHECK(json_of_integer(Integer(-7)) == json(-7));
    Integer big = Integer("123456789012345678901234567890");
    json jb = json_of_integer(big);
    CHECK(jb.is_string());
    CHECK(integer_of_json(jb) == big);
    CHECK(integer_of_json(json(-7)) == Integer(-7));
    CHECK(integer_of_json(json("-12")) == Integer(-12));
    CHECK_THROWS_AS((void)integer_of_json(json("12x")), schema_error);
    CHECK_THROWS_AS((void)integer_of_json(json("")), schema_error);
    CHECK_THROWS_AS((void)integer_of_json(json(1.5)), schema_error);
    CHECK_THROWS_AS((void)integer_of_json(json::array()), schema_error);
}

TEST_CASE("polynomial serialization") {
    NumericalPolynomial p({Integer(7), Integer(2), Integer(1)});
    json j = to_json(p);
    CHECK(j["binomial_coeffs"] == json::array({7, 2, 1}));
    CHECK(polynomial_of_json(j) == p);
    // arrays are accepted directly, trailing zeros normalize away
    CHECK(polynomial_of_json(json::array({7, 2, 1, 0, 0})) == p);
    CHECK(polynomial_of_json(json{{"binomial_coeffs", json::array()}}).is_zero());
    CHECK_THROWS_AS((void)polynomial_of_json(json{{"nope", 1}}), schema_error);
    CHECK_THROWS_AS((void)polynomial_of_json(json{{"binomial_coeffs", "x"}}), schema_error);
}

TEST_CASE("ordinal serialization") {
    Ordinal o = parse_ordinal("w^2*3 + w*1 + 4");
    json j = to_json(o);
    CHECK(j["cnf"] == json::array({json::array({2, 3}), json::array({1, 1}), json::array({0, 4})}));
    CHECK(j["pretty"] == "w^2*3 + w*1 + 4");
    CHECK(ordinal_of_json(j) == o);
    CHECK(ordinal_of_json(json("w^2*3 + w*1 + 4")) == o);
    CHECK(ordinal_of_json(json(14)) == Ordinal::natural(14));
    CHECK_THROWS_AS((void)ordinal_of_json(json(-3)), schema_error);
    CHECK_THROWS_AS((void)ordinal_of_json(json{{"cnf", json::array({json::array({1})})}}),
                    schema_error);
    // non-canonical exponent order is rejected, not silently fixed
    json bad{{"cnf", json::array({json::array({0, 1}), json::array({2, 1})})}};
    CHECK_THROWS_AS((void)ordinal_of_json(bad), schema_error);
}

TEST_CASE("leader set serialization") {
    json j{{"m", 2}, {"coords", json::array({json::array({json::array({2, 0}),
                                                          json::array({0, 3})}),
                                             json::array()})}};
    LeaderSet ls = leader_set_of_json(j);
    CHECK(ls.m == 2);
    REQUIRE(ls.coords.size() == 2);
    CHECK(ls.coords[0].size() == 2);
    CHECK(ls.coords[1].empty());
    json round = to_json(ls);
    CHECK(leader_set_of_json(round).coords == ls.coords);
    CHECK_THROWS_AS((void)leader_set_of_json(json{{"m", 2}}), schema_error);
    CHECK_THROWS_AS((void)leader_set_of_json(json{{"m", 0}, {"coords", json::array()}}),
                    schema_error);
}

TEST_CASE("word set serialization") {
    json j{{"m", 2}, {"leaders", json::array({"2,1", json::array({1, 2})})}};
    WordSet ws = word_set_of_json(j);
    REQUIRE(ws.words.size() == 2);
    CHECK(word_to_string(ws.words[0]) == "1,2");
    CHECK(word_to_string(ws.words[1]) == "2,1");
    json round = to_json(ws);
    CHECK(word_set_of_json(round).words == ws.words);
    CHECK_THROWS_AS((void)word_set_of_json(json{{"m", 2}, {"leaders", json::array({"9"})}}),
                    schema_error);
}

TEST_CASE("dumps are canonical") {
    json j{{"b", 1}, {"a", 2}};
    CHECK(dump_report(j, false) == "{\"a\":2,\"b\":1}\n");
    // nlohmann objects iterate sorted by key, so dumps cannot depend on
    // insertion order
    json k{{"a", 2}, {"b", 1}};
    CHECK(dump_report(j, false) == dump_report(k, false));
}

TEST_CASE("random roundtrips") {
    Prng rng(9001);
    for (int i = 0; i < 100; ++i) {
        Ordinal o = random_ordinal_below(rng, 5, 30);
        CHECK(ordinal_of_json(to_json(o)) == o);

        std::vector<Integer> c(rng.below(6));
        for (auto& x : c) x = Integer(rng.below(1000)) - 500;
        NumericalPolynomial p(std::move(c));
        CHECK(polynomial_of_json(to_json(p)) == p);

        LeaderSet ls = random_leader_set(rng, 3, 3, 5, 4);
        LeaderSet back = leader_set_of_json(to_json(ls));
        CHECK(back.m == ls.m);
        CHECK(back.coords == ls.coords);
    }
}

TEST_SUITE_END();
