#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "ptcalc/space.hpp"

using namespace ptc;

TEST_CASE("grammar round-trips through the serializer", "[space]") {
    for (const char* text : {"pt", "S0", "S12", "A(Th(id),0)", "(S2 v S1)", "(S2 ^ A(X,-1) ^ S1)",
                             "Susp(Plus(S1))", "Plus((S1 v pt))", "((S1 v S2) ^ Susp(S0))"}) {
        CHECK(to_string(parse_space(text)) == text);
    }
}

TEST_CASE("random terms survive print/parse", "[space][property]") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        SpaceExpr e = testing::random_term(rng, {});
        REQUIRE(parse_space(to_string(e)) == e);
    }
}

TEST_CASE("parser tolerates whitespace and rejects junk", "[space]") {
    CHECK(parse_space("  ( S2  v  S2 ) ") == SpaceExpr::wedge({SpaceExpr::sphere(2), SpaceExpr::sphere(2)}));
    CHECK(parse_space("(S3)") == SpaceExpr::sphere(3));
    CHECK_THROWS_AS(parse_space("(S2 v S1 ^ S3)"), parse_error);
    CHECK_THROWS_AS(parse_space("S-1"), parse_error);
    CHECK_THROWS_AS(parse_space("A(,1)"), parse_error);
    CHECK_THROWS_AS(parse_space("A(x,-2)"), parse_error);
    CHECK_THROWS_AS(parse_space("(S2 v"), parse_error);
    CHECK_THROWS_AS(parse_space("S2 S3"), parse_error);
    CHECK_THROWS_AS(parse_space("Q"), parse_error);
}

TEST_CASE("constructors enforce arity and ranges", "[space]") {
    CHECK_THROWS_AS(SpaceExpr::wedge({SpaceExpr::sphere(1)}), std::invalid_argument);
    CHECK_THROWS_AS(SpaceExpr::smash({}), std::invalid_argument);
    CHECK_THROWS_AS(SpaceExpr::sphere(-1), std::invalid_argument);
    CHECK_THROWS_AS(SpaceExpr::atom("x", -2), std::invalid_argument);
}

TEST_CASE("structural connectivity", "[space]") {
    CHECK(connectivity(SpaceExpr::sphere(3)) == 2);
    CHECK(connectivity(SpaceExpr::smash({SpaceExpr::sphere(2), SpaceExpr::sphere(2)})) == 3);
    CHECK(connectivity(SpaceExpr::plus(SpaceExpr::sphere(5))) == -1);
    CHECK(connectivity(SpaceExpr::point()) == kInfiniteConnectivity);
    CHECK(connectivity(SpaceExpr::sphere(0)) == -1);
    CHECK(connectivity(parse_space("Susp(A(Th(a),1))")) == 2);
    CHECK(connectivity(parse_space("(S4 v S2 v pt)")) == 1);
    CHECK(connectivity(parse_space("(pt ^ S2)")) == kInfiniteConnectivity);
}
