#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "ptcalc/splitter.hpp"

using namespace ptc;

namespace {

const SphereTable& table() { return default_table(); }

SpaceExpr S(int n) { return SpaceExpr::sphere(n); }

struct Row {
    std::string label, space, group;
    bool operator==(const Row&) const = default;
    auto operator<=>(const Row&) const = default;
};

std::vector<Row> rows(const Decomposition& d) {
    std::vector<Row> out;
    for (const auto& s : d.summands) out.push_back({s.label, to_string(s.space), render(s.group)});
    return out;
}

// Totals with the symbolic terms sorted, since the two routes list their
// summands in different orders.
std::string sorted_total(const Decomposition& d) {
    FgAbelianGroup known;
    std::vector<std::string> symbolic;
    for (const auto& s : d.summands) {
        if (s.group.is_known()) known = direct_sum(known, s.group);
        else symbolic.push_back(render(s.group));
    }
    std::sort(symbolic.begin(), symbolic.end());
    std::string out = render(known);
    for (const auto& t : symbolic) out += " (+) " + t;
    return out;
}

std::multiset<std::pair<std::string, std::string>> space_groups(const Decomposition& d) {
    std::multiset<std::pair<std::string, std::string>> out;
    for (const auto& s : d.summands) out.insert({to_string(s.space), render(s.group)});
    return out;
}

} // namespace

TEST_CASE("pi_3(S2 v S2)", "[splitter]") {
    auto d = hilton_milnor(3, {S(1), S(1)}, table());
    CHECK(rows(d) == std::vector<Row>{{"i1", "S2", "Z"}, {"i2", "S2", "Z"}, {"[i1,i2]", "S3", "Z"}});
    CHECK(render(d.total()) == "Z^3");
    CHECK(d.truncation_weight == 3);
}

TEST_CASE("pi_4(S3 v S2)", "[splitter]") {
    auto d = hilton_milnor(4, {S(2), S(1)}, table());
    CHECK(rows(d) == std::vector<Row>{{"i1", "S3", "Z/2"}, {"i2", "S2", "Z/2"}, {"[i1,i2]", "S4", "Z"}});
    CHECK(render(d.total()) == "Z (+) Z/2 (+) Z/2");
}

TEST_CASE("pi_2(S2 v S2)", "[splitter]") {
    auto d = hilton_milnor(2, {S(1), S(1)}, table());
    CHECK(rows(d) == std::vector<Row>{{"i1", "S2", "Z"}, {"i2", "S2", "Z"}});
    CHECK(render(d.total()) == "Z^2");
}

TEST_CASE("truncation bound", "[splitter]") {
    CHECK(truncation_bound(3, {S(1), S(1)}) == 3);
    CHECK(truncation_bound(2, {S(1), S(1)}) == 2);
    CHECK(truncation_bound(0, {S(4), S(1)}) == 1);
    CHECK(truncation_bound(7, {S(2), S(3)}) == 4);
}

TEST_CASE("single generator is a plain lookup", "[splitter]") {
    auto d = hilton_milnor(5, {S(2)}, table());
    CHECK(rows(d) == std::vector<Row>{{"i1", "S3", "Z/2"}});
}

TEST_CASE("hilton_milnor rejects bad input", "[splitter]") {
    CHECK_THROWS_AS(hilton_milnor(-1, {S(1), S(1)}, table()), domain_error);
    CHECK_THROWS_AS(hilton_milnor(3, {SpaceExpr::wedge({S(1), S(2)}), S(1)}, table()), domain_error);
    CHECK_THROWS_AS(hilton_milnor(3, {S(0), S(1)}, table()), domain_error);
    CHECK_THROWS_AS(hilton_milnor(3, {}, table()), domain_error);
}

TEST_CASE("non-spherical summands go symbolic", "[splitter]") {
    auto d = hilton_milnor(4, {SpaceExpr::atom("Th(a)", 1), S(1)}, table());
    REQUIRE(d.summands.size() == 3);
    CHECK(render(d.summands[0].group) == "π_4((A(Th(a),1) ^ S1))");
    CHECK(render(d.summands[1].group) == "Z/2");
    CHECK(d.total().is_symbolic_sum());
}

TEST_CASE("truncation is sound and tight", "[splitter][property]") {
    for (int m = 1; m <= 12; ++m) {
        for (int a = 1; a <= 4; ++a) {
            for (int b = 1; b <= 4; ++b) {
                std::vector<SpaceExpr> ys{S(a), S(b)};
                int w = truncation_bound(m, ys);
                if (w > 12) continue;
                auto sys = generate_system(2, w);
                for (const auto& l : sys.weight_block(w))
                    REQUIRE(connectivity(normalize(SpaceExpr::susp(smash_space(l, ys)))) >= m);
                if (a == b && w > 1) {
                    bool below = false;
                    for (const auto& l : sys.weight_block(w - 1))
                        below = below || connectivity(normalize(SpaceExpr::susp(smash_space(l, ys)))) < m;
                    REQUIRE(below);
                }
                auto d = hilton_milnor(m, ys, table());
                std::size_t cap = 0;
                for (int v = 1; v < w; ++v) cap += static_cast<std::size_t>(witt_count(2, v));
                REQUIRE(d.summands.size() <= cap);
            }
        }
    }
}

TEST_CASE("label sets grow with the degree", "[splitter][property]") {
    for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
            std::set<std::string> previous;
            for (int m = 1; m <= 12; ++m) {
                std::vector<SpaceExpr> ys{S(a), S(b)};
                if (truncation_bound(m, ys) > 14) break;
                std::set<std::string> labels;
                for (const auto& s : hilton_milnor(m, ys, table()).summands) labels.insert(s.label);
                REQUIRE(std::includes(labels.begin(), labels.end(), previous.begin(), previous.end()));
                previous = labels;
            }
        }
    }
}

TEST_CASE("plus-smash, unstable route", "[splitter]") {
    auto d = split_plus_smash(4, S(1), S(2), SplitMode::Unstable, table());
    CHECK(d.route == Route::PlusSmashUnstable);
    CHECK(rows(d) == std::vector<Row>{{"base", "S2", "Z/2"}, {"smash", "S3", "Z/2"}, {"[i1,i2]", "S4", "Z"}});
    auto direct = hilton_milnor(4, {S(2), S(1)}, table());
    CHECK(space_groups(d) == space_groups(direct));
    CHECK(render(d.total()) == render(direct.total()));
}

TEST_CASE("plus-smash with the point is the base alone", "[splitter]") {
    auto d = split_plus_smash(4, SpaceExpr::point(), S(3), SplitMode::Unstable, table());
    CHECK(rows(d) == std::vector<Row>{{"base", "S3", "Z/2"}});
    CHECK(render(d.total()) == render(lookup_pi(4, 3, table())));
}

TEST_CASE("plus-smash without a suspension coordinate is refused", "[splitter]") {
    try {
        split_plus_smash(3, S(1), SpaceExpr::atom("Th(id)", 0), SplitMode::Unstable, table());
        FAIL("expected domain_error");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).rfind("no framed direction", 0) == 0);
    }
    // The stable route has no such requirement.
    CHECK_NOTHROW(split_plus_smash(3, S(1), SpaceExpr::atom("Th(id)", 0), SplitMode::Stable, table()));
}

TEST_CASE("plus-smash, stable route", "[splitter]") {
    // pi^s_3(S2+ ^ S0) = stem(1) + stem(3)
    auto d = split_plus_smash(3, S(2), S(0), SplitMode::Stable, table());
    CHECK(rows(d) == std::vector<Row>{{"smash", "S2", "Z/2"}, {"base", "S0", "Z/24"}});
    CHECK(render(d.total()) == "Z/2 (+) Z/24");
}

TEST_CASE("two-route consistency on framed inputs", "[splitter][property]") {
    std::mt19937 rng(31);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int i = 0; i < 100; ++i) {
        int m = pick(0, 12);
        SpaceExpr x = S(pick(1, 5));
        SpaceExpr z = S(pick(2, 6));
        auto split = split_plus_smash(m, x, z, SplitMode::Unstable, table());
        // Independent path: let the rewriter eliminate Plus and split the wedge.
        auto direct = pi_of_wedge(m, SpaceExpr::smash({SpaceExpr::plus(x), z}), table());
        INFO("m=" << m << " X=" << to_string(x) << " Z=" << to_string(z));
        REQUIRE(sorted_total(split) == sorted_total(direct));
        REQUIRE(space_groups(split) == space_groups(direct));
    }
}

TEST_CASE("pi of a wedge term", "[splitter]") {
    CHECK(render(pi_of_wedge(3, parse_space("(S2 v S2)"), table()).total()) == "Z^3");
    CHECK(pi_of_wedge(3, SpaceExpr::point(), table()).summands.empty());
    CHECK_THROWS_AS(pi_of_wedge(3, parse_space("(S1 v S2)"), table()), domain_error);
    CHECK_THROWS_AS(pi_of_wedge(3, parse_space("A(X,2)"), table()), domain_error);
}
