#include <doctest.h>

#include "ribbongate/pipeline.hpp"

using namespace ribbongate;

TEST_CASE("minimal copy count") {
    CHECK(minimal_copies(1) == 3);
    CHECK(minimal_copies(2) == 5);
    CHECK(minimal_copies(10) == 21);
    CHECK_THROWS_AS(minimal_copies(0), BadParameter);
}

TEST_CASE("family spec validation") {
    CHECK_NOTHROW(FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}}));
    CHECK_NOTHROW(FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}}, 3));
    CHECK_THROWS_AS(FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}}, 5),
                    HypothesisFailed);
    CHECK_THROWS_AS(FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}}, 4),
                    BadParameter);
    CHECK_THROWS_AS(FamilySpec::from_spec(nlohmann::json{{"pretzel", {2, 2, 2}}}), NotAKnot);
}

TEST_CASE("build_lg on the pretzel family") {
    FamilySpec family = FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}});

    for (int g = 1; g <= 3; ++g) {
        auto [recipe, cert] = build_lg(family, g);
        const int n = minimal_copies(g);

        CHECK(genus(recipe) == g);
        CHECK_FALSE(recipe.decomposable_certified());
        CHECK(recipe.source().smooth.component_count() == 1);
        CHECK(recipe.target().smooth == unknot());

        // Source tb: n summands at tb = -1 give -1, the tower costs 2g more;
        // the symbolic S(.) mark carries no numeric shift.
        CHECK(recipe.source().tb == -1 - 2 * g);
        CHECK(recipe.source().rotation == 0);
        CHECK(recipe.source().symbolic_stabs == std::vector<std::string>{"S"});
        CHECK(recipe.target().symbolic_stabs == std::vector<std::string>{"S"});

        CHECK(cert.p == 3);
        CHECK(cert.beta0 == static_cast<std::size_t>(n));
        CHECK(cert.beta1 == 0);
        CHECK(cert.raw_bound == Rational(1, 2));
        CHECK(cert.c2_lower == 1);
        CHECK(cert.verdict == Verdict::OBSTRUCTED);

        // The reported bound must agree with a from-scratch recomputation.
        std::size_t b0 = beta1_mod_p(recipe.source().smooth, cert.p);
        std::size_t b1 = beta1_mod_p(recipe.target().smooth, cert.p);
        CHECK(cert.raw_bound == livingston_bound(b0, b1, g));
    }
}

TEST_CASE("build_lg copy-count override") {
    FamilySpec family = FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}});

    // n = 2 at genus 1 is exactly the threshold failure: bound 0.
    auto [recipe, cert] = build_lg(family, 1, 2);
    CHECK(genus(recipe) == 1);
    CHECK(cert.raw_bound == Rational(0, 1));
    CHECK(cert.c2_lower == 0);
    CHECK(cert.verdict == Verdict::INCONCLUSIVE);

    // n = 7 at genus 1 overshoots comfortably.
    auto [recipe7, cert7] = build_lg(family, 1, 7);
    CHECK(cert7.raw_bound == Rational(5, 2));
    CHECK(cert7.c2_lower == 3);
    CHECK(cert7.verdict == Verdict::OBSTRUCTED);
}

TEST_CASE("build_lg rejects hypothesis violations") {
    FamilySpec unknot_family = FamilySpec::from_spec("unknot");
    CHECK_THROWS_AS(build_lg(unknot_family, 1), HypothesisFailed);
    FamilySpec family = FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}});
    CHECK_THROWS_AS(build_lg(family, 0), BadParameter);
}

TEST_CASE("recipe shape and verdict across families and genera") {
    const std::vector<nlohmann::json> bases{nlohmann::json{{"pretzel", {3, -3, 4}}},
                                            nlohmann::json{{"pretzel", {3, -3, 6}}},
                                            nlohmann::json{{"torus2", 5}}};
    for (const auto& base : bases) {
        FamilySpec family = FamilySpec::from_spec(base);
        for (int g = 1; g <= 5; ++g) {
            auto [recipe, cert] = build_lg(family, g);
            CAPTURE(base.dump());
            CAPTURE(g);
            CHECK(genus(recipe) == g);
            CHECK(recipe.source().smooth.component_count() == 1);
            CHECK(recipe.target().smooth.component_count() == 1);
            CHECK(recipe.source().tb == -1 - 2 * g);
            CHECK(cert.verdict == Verdict::OBSTRUCTED);
            CHECK(cert.raw_bound == livingston_bound(cert.beta0, cert.beta1, g));
        }
    }
}

TEST_CASE("build_lg accepts non-pretzel bases as assumed families") {
    FamilySpec family = FamilySpec::from_spec(nlohmann::json{{"torus2", 5}});
    auto [recipe, cert] = build_lg(family, 1);
    CHECK(genus(recipe) == 1);
    CHECK(cert.p == 5);
    CHECK(cert.beta0 == 3);
    CHECK(cert.verdict == Verdict::OBSTRUCTED);
    bool has_assumed = false;
    for (const Move& m : recipe.moves())
        if (m.kind == MoveKind::REVERSAL_APPROX) has_assumed = true;
    CHECK(has_assumed);
}
