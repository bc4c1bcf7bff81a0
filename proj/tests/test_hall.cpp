#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "ptcalc/hall.hpp"

using namespace ptc;

namespace {

std::vector<std::string> block_strings(const ProductSystem& sys, int w) {
    std::vector<std::string> out;
    for (const auto& p : sys.weight_block(w)) out.push_back(p.str());
    return out;
}

} // namespace

TEST_CASE("two generators: weights 1 to 3", "[hall]") {
    auto sys = generate_system(2, 3);
    CHECK(block_strings(sys, 1) == std::vector<std::string>{"i1", "i2"});
    CHECK(block_strings(sys, 2) == std::vector<std::string>{"[i1,i2]"});
    CHECK(block_strings(sys, 3) == std::vector<std::string>{"[i1,[i1,i2]]", "[i2,[i1,i2]]"});
    CHECK(sys.products().size() == 5);
}

TEST_CASE("two generators: weight 4 under the fixed ordering policy", "[hall]") {
    auto sys = generate_system(2, 4);
    CHECK(block_strings(sys, 4) ==
          std::vector<std::string>{"[i1,[i1,[i1,i2]]]", "[i2,[i1,[i1,i2]]]", "[i2,[i2,[i1,i2]]]"});
    CHECK(sys.weight_block(4).size() == static_cast<std::size_t>(testing::lyndon_count(2, 4)));
}

TEST_CASE("witt_count", "[hall]") {
    CHECK(witt_count(2, 1) == 2);
    CHECK(witt_count(2, 2) == 1);
    CHECK(witt_count(2, 6) == 9);
    for (int g = 1; g <= 4; ++g)
        for (int w = 1; w <= 8; ++w) REQUIRE(witt_count(g, w) == testing::lyndon_count(g, w));
    CHECK_THROWS(witt_count(0, 3));
}

TEST_CASE("weight blocks have Witt-number size", "[hall][property]") {
    for (int g = 2; g <= 4; ++g) {
        auto sys = generate_system(g, 10);
        for (int w = 1; w <= 10; ++w) {
            INFO("g=" << g << " w=" << w);
            REQUIRE(static_cast<std::int64_t>(sys.weight_block(w).size()) == witt_count(g, w));
        }
    }
}

TEST_CASE("every bracket satisfies the basic-product side conditions", "[hall][property]") {
    for (int g = 2; g <= 3; ++g) {
        auto sys = generate_system(g, 8);
        std::set<std::string> seen;
        int previous_weight = 0;
        for (std::size_t i = 0; i < sys.products().size(); ++i) {
            const auto& p = sys.products()[i];
            REQUIRE(p.ordinal() == static_cast<int>(i));
            REQUIRE(p.weight() >= previous_weight);
            previous_weight = p.weight();
            int sum = 0;
            for (int d : p.multidegree()) sum += d;
            REQUIRE(sum == p.weight());
            REQUIRE(seen.insert(p.str()).second);
            if (p.is_generator()) {
                REQUIRE(p.weight() == 1);
                continue;
            }
            auto a = p.left();
            auto b = p.right();
            REQUIRE(a.weight() + b.weight() == p.weight());
            REQUIRE(a.ordinal() < b.ordinal());
            if (!b.is_generator()) REQUIRE(b.left().ordinal() <= a.ordinal());
        }
    }
}

TEST_CASE("generation is deterministic", "[hall][property]") {
    auto a = generate_system(3, 7);
    auto b = generate_system(3, 7);
    REQUIRE(a.products().size() == b.products().size());
    for (std::size_t i = 0; i < a.products().size(); ++i) REQUIRE(a.products()[i].str() == b.products()[i].str());
}

TEST_CASE("generation caps", "[hall]") {
    CHECK_THROWS_AS(generate_system(2, 17), resource_error);
    CHECK_THROWS_AS(generate_system(4, 12, HallLimits{16, 1000}), resource_error);
    CHECK_THROWS_AS(generate_system(2, 0), std::invalid_argument);
}

TEST_CASE("smash spaces Y_lambda", "[hall]") {
    std::vector<SpaceExpr> ys{SpaceExpr::sphere(2), SpaceExpr::sphere(1)};
    auto g = [](int i) { return BasicProduct::generator(i, 2); };
    auto br = [](const BasicProduct& a, const BasicProduct& b) { return BasicProduct::bracket(a, b); };
    CHECK(smash_space(br(g(1), g(2)), ys) == SpaceExpr::sphere(3));
    CHECK(smash_space(g(2), ys) == SpaceExpr::sphere(1));
    auto l = br(g(1), br(g(1), g(2)));
    CHECK(l.multidegree() == std::vector<int>{2, 1});
    CHECK(smash_space(l, ys) == SpaceExpr::sphere(5));
    std::vector<SpaceExpr> atoms{SpaceExpr::atom("a", 0), SpaceExpr::sphere(1)};
    CHECK(to_string(smash_space(l, atoms)) == "(A(a,0) ^ A(a,0) ^ S1)");
    CHECK_THROWS(smash_space(l, {SpaceExpr::sphere(1)}));
}
