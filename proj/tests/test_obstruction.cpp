#include <doctest.h>

#include "ribbongate/cobordism.hpp"
#include "ribbongate/obstruction.hpp"

using namespace ribbongate;

namespace {

KnotDiagram nfold(const KnotDiagram& k, int n) {
    KnotDiagram sum = k;
    for (int i = 1; i < n; ++i) sum = connected_sum(sum, k);
    return sum;
}

}  // namespace

TEST_CASE("livingston bound arithmetic") {
    CHECK(livingston_bound(0, 0, 0) == Rational(0, 1));
    CHECK(livingston_bound(3, 0, 1) == Rational(1, 2));
    CHECK(livingston_bound(7, 0, 3) == Rational(1, 2));
    CHECK(livingston_bound(5, 0, 2) == Rational(1, 2));
    CHECK(livingston_bound(4, 2, 1) == Rational(0, 1));
    CHECK(livingston_bound(0, 4, 0) == Rational(-2, 1));
    for (int n = 1; n <= 8; ++n)
        for (int g = 0; g <= 3; ++g)
            CHECK(livingston_bound(static_cast<std::size_t>(n), 0, g) ==
                  Rational(n - 2 * g, 2));
}

TEST_CASE("rational ceiling") {
    CHECK(Rational(1, 2).ceil_value() == 1);
    CHECK(Rational(-1, 2).ceil_value() == 0);
    CHECK(Rational(3, 1).ceil_value() == 3);
    CHECK(Rational(-3, 2).ceil_value() == -1);
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("odd prime factorization") {
    CHECK(odd_prime_factors(Zint(1)).empty());
    CHECK(odd_prime_factors(Zint(9)) == std::vector<long long>{3});
    CHECK(odd_prime_factors(Zint(15)) == std::vector<long long>{3, 5});
    Zint big = 1;
    for (int i = 0; i < 7; ++i) big *= 9;
    CHECK(odd_prime_factors(big) == std::vector<long long>{3});
}

TEST_CASE("ribbon_verdict on the reference pairs") {
    SUBCASE("unknot to unknot is inconclusive") {
        ObstructionCertificate c = ribbon_verdict(unknot(), unknot(), 0);
        CHECK(c.verdict == Verdict::INCONCLUSIVE);
        CHECK(c.c2_lower == 0);
        CHECK(c.beta0 == 0);
        CHECK(c.beta1 == 0);
    }
    SUBCASE("three trefoils versus the unknot at genus one") {
        ObstructionCertificate c = ribbon_verdict(nfold(trefoil(), 3), unknot(), 1);
        CHECK(c.p == 3);
        CHECK(c.beta0 == 3);
        CHECK(c.beta1 == 0);
        CHECK(c.raw_bound == Rational(1, 2));
        CHECK(c.c2_lower == 1);
        CHECK(c.verdict == Verdict::OBSTRUCTED);
        CHECK(c.source_factors == std::vector<Zint>{Zint(3), Zint(3), Zint(3)});
    }
    SUBCASE("pretzel powers with n = 2g+1") {
        for (int g = 1; g <= 3; ++g) {
            ObstructionCertificate c =
                ribbon_verdict(nfold(pretzel(3, -3, 4), 2 * g + 1), unknot(), g);
            CHECK(c.p == 3);
            CHECK(c.verdict == Verdict::OBSTRUCTED);
            CHECK(c.c2_lower >= 1);
        }
    }
}

TEST_CASE("certificate arithmetic is recomputable from its own fields") {
    ObstructionCertificate c = ribbon_verdict(nfold(trefoil(), 4), trefoil(), 1);
    CHECK(c.raw_bound == livingston_bound(c.beta0, c.beta1, c.genus));
    CHECK(c.c2_lower == std::max(0LL, c.raw_bound.ceil_value()));
    CHECK((c.verdict == Verdict::OBSTRUCTED) == (c.c2_lower >= 1));
}

TEST_CASE("for fixed ends, increasing genus never increases the bound") {
    KnotDiagram k0 = nfold(trefoil(), 3);
    long long prev = ribbon_verdict(k0, unknot(), 0).c2_lower;
    for (int g = 1; g <= 4; ++g) {
        long long cur = ribbon_verdict(k0, unknot(), g).c2_lower;
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("parallel prime sweep is bit-identical to sequential") {
    KnotDiagram k0 = nfold(connected_sum(trefoil(), torus2(5)), 2);  // det 225: primes 3, 5
    for (int g = 0; g <= 2; ++g) {
        ObstructionCertificate seq = ribbon_verdict(k0, trefoil(), g, 1);
        ObstructionCertificate par = ribbon_verdict(k0, trefoil(), g, 4);
        CHECK(certificate_to_json(seq) == certificate_to_json(par));
    }
}

TEST_CASE("soundness coupling with decomposable recipes") {
    // A certified-decomposable concordance is ribbon, so the obstruction
    // must stay silent at genus 0 across its ends.
    for (int k = 1; k <= 10; ++k) {
        CobordismRecipe ck = pretzel_concordance(k);
        REQUIRE(ck.decomposable_certified());
        ObstructionCertificate c =
            ribbon_verdict(ck.source().smooth, ck.target().smooth, 0);
        CHECK(c.verdict == Verdict::INCONCLUSIVE);
    }
    CobordismRecipe cc = concordance_connected_sum(pretzel_concordance(4),
                                                   pretzel_concordance(5));
    ObstructionCertificate c = ribbon_verdict(cc.source().smooth, cc.target().smooth, 0);
    CHECK(c.verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("borodzik-truol lower bound") {
    CHECK(check_prop_lower(trefoil(), 4, 3));
    CHECK(beta1_mod_p(nfold(trefoil(), 4), 3) == 4);
    CHECK(check_prop_lower(pretzel(3, -3, 5), 3, 3));
    CHECK_THROWS_AS(check_prop_lower(unknot(), 1, 3), HypothesisFailed);
    CHECK_THROWS_AS(check_prop_lower(trefoil(), 2, 5), HypothesisFailed);
}

TEST_CASE("borodzik-truol vanishing") {
    CHECK(check_prop_vanish(trefoil(), 5));
    CHECK(check_prop_vanish(unknot(), 3));
    CHECK(check_prop_vanish(unknot(), 7));
    CHECK_THROWS_AS(check_prop_vanish(torus2(5), 5), HypothesisFailed);
    CHECK_THROWS_AS(check_prop_vanish(trefoil(), 3), HypothesisFailed);
}

TEST_CASE("certificate JSON carries the factor lists") {
    ObstructionCertificate c = ribbon_verdict(nfold(trefoil(), 3), unknot(), 1);
    nlohmann::json j = certificate_to_json(c);
    CHECK(j.at("p") == 3);
    CHECK(j.at("verdict") == "OBSTRUCTED");
    CHECK(j.at("raw_bound").at("num") == 1);
    CHECK(j.at("raw_bound").at("den") == 2);
    CHECK(j.at("source_invariant_factors").size() == 3);
    CHECK(j.at("target_invariant_factors").empty());
}
