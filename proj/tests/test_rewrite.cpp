#include <catch_amalgamated.hpp>

#include <random>
#include <variant>

#include "oracles.hpp"
#include "ptcalc/rewrite.hpp"

using namespace ptc;

namespace {

SpaceExpr nf(const char* text) { return normalize(parse_space(text)); }

} // namespace

TEST_CASE("normalize: worked examples", "[rewrite]") {
    // Sigma(S1+) ~ S2 v S1.
    CHECK(to_string(nf("Susp(Plus(S1))")) == "(S2 v S1)");
    CHECK(to_string(nf("(S2 ^ S1)")) == "S3");

    SpaceExpr lhs = parse_space("(Plus(S2) ^ S2)");
    SpaceExpr rhs = normalize(lhs);
    CHECK(to_string(rhs) == "(S4 v S2)");
    CHECK(testing::cell_dimensions(lhs) == testing::cell_dimensions(rhs));
}

TEST_CASE("normalize: absorption, unit and ordering", "[rewrite]") {
    CHECK(to_string(nf("(pt ^ S3)")) == "pt");
    CHECK(to_string(nf("(pt v S3)")) == "S3");
    CHECK(to_string(nf("(pt v pt)")) == "pt");
    CHECK(to_string(nf("(S0 ^ A(X,1))")) == "A(X,1)");
    CHECK(to_string(nf("Plus(pt)")) == "S0");
    CHECK(to_string(nf("(S1 v S3 v S2)")) == "(S3 v S2 v S1)");
    CHECK(to_string(nf("(S1 ^ A(b,0) ^ A(a,0))")) == "(A(a,0) ^ A(b,0) ^ S1)");
    CHECK(to_string(nf("((S1 v S2) ^ (S1 v S1))")) == "(S3 v S3 v S2 v S2)");
    CHECK(to_string(nf("Susp(Susp(A(X,0)))")) == "(A(X,0) ^ S2)");
}

TEST_CASE("normalize: Plus without a suspension coordinate survives", "[rewrite]") {
    SpaceExpr e = nf("(Plus(S1) ^ A(Th(id),0))");
    CHECK(contains(e, SpaceExpr::Kind::Plus));
    CHECK(to_string(e) == "(A(Th(id),0) ^ Plus(S1))");
    CHECK(to_string(nf("Plus(S2)")) == "Plus(S2)");
    // S0 carries no suspension coordinate either.
    CHECK(to_string(nf("(Plus(S1) ^ S0)")) == "Plus(S1)");
}

TEST_CASE("normalize: nested Plus peels one level per suspension", "[rewrite]") {
    // ((S1)+ ^ S1)+ ^ S2 -> S4 v S3 v S2
    CHECK(to_string(nf("(Plus((Plus(S1) ^ S1)) ^ S2)")) == "(S4 v S3 v S2)");
    // Sigma(S0+) = S1 v S1
    CHECK(to_string(nf("Susp(Plus(S0))")) == "(S1 v S1)");
}

TEST_CASE("as_wedge_of_spheres", "[rewrite]") {
    auto r = as_wedge_of_spheres(parse_space("(Plus(S1) ^ S1)"));
    REQUIRE(std::holds_alternative<std::vector<int>>(r));
    CHECK(std::get<std::vector<int>>(r) == std::vector<int>{2, 1});

    auto p = as_wedge_of_spheres(SpaceExpr::point());
    REQUIRE(std::holds_alternative<std::vector<int>>(p));
    CHECK(std::get<std::vector<int>>(p).empty());

    auto a = as_wedge_of_spheres(parse_space("(A(Th(θ),1) ^ S1)"));
    REQUIRE(std::holds_alternative<NonSpherical>(a));
    CHECK(to_string(std::get<NonSpherical>(a).normal_form) == "(A(Th(θ),1) ^ S1)");
}

TEST_CASE("desuspend", "[rewrite]") {
    CHECK(desuspend(SpaceExpr::sphere(3)) == SpaceExpr::sphere(2));
    CHECK(!desuspend(SpaceExpr::sphere(0)));
    CHECK(to_string(*desuspend(nf("(A(X,1) ^ S1)"))) == "A(X,1)");
    CHECK(!desuspend(nf("A(X,1)")));
}

TEST_CASE("rewriting is confluent: innermost and outermost agree", "[rewrite][property]") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        SpaceExpr e = testing::random_term(rng, {});
        SpaceExpr a = normalize(e, Strategy::Innermost);
        SpaceExpr b = normalize(e, Strategy::Outermost);
        INFO(to_string(e));
        REQUIRE(a == b);
        REQUIRE(is_irreducible(a));
        REQUIRE(normalize(a) == a);
    }
}

TEST_CASE("every rule application decreases the termination measure", "[rewrite][property]") {
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
        SpaceExpr e = testing::random_term(rng, {});
        for (Strategy s : {Strategy::Innermost, Strategy::Outermost}) {
            normalize(e, s, [](const SpaceExpr& before, const SpaceExpr& after, RewriteRule rule) {
                INFO(rule_name(rule) << ": " << to_string(before) << " -> " << to_string(after));
                REQUIRE(termination_measure(after) < termination_measure(before));
            });
        }
    }
}

TEST_CASE("normalization preserves connectivity", "[rewrite][property]") {
    std::mt19937 rng(5);
    for (int i = 0; i < 1000; ++i) {
        SpaceExpr e = testing::random_term(rng, {});
        INFO(to_string(e));
        REQUIRE(connectivity(normalize(e)) == connectivity(e));
    }
}

TEST_CASE("normalization preserves the reduced cell count", "[rewrite][property]") {
    std::mt19937 rng(11);
    testing::TermGenOptions opt;
    opt.atoms = false;
    for (int i = 0; i < 1000; ++i) {
        SpaceExpr e = testing::random_term(rng, opt);
        INFO(to_string(e));
        REQUIRE(testing::cell_dimensions(normalize(e)) == testing::cell_dimensions(e));
    }
}
