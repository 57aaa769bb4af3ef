#include <doctest.h>

#include "ribbongate/cobordism.hpp"

using namespace ribbongate;

TEST_CASE("euler characteristic and genus of the elementary recipes") {
    CobordismRecipe id = identity_recipe(legendrian_unknot());
    CHECK(euler_characteristic(id) == 0);
    CHECK(genus(id) == 0);
    CHECK(id.decomposable_certified());

    CobordismRecipe block = svvw_tower(legendrian_unknot(), 1);
    CHECK(euler_characteristic(block) == -2);
    CHECK(genus(block) == 1);
    CHECK(block.decomposable_certified());

    CobordismRecipe ck = pretzel_concordance(4);
    CHECK(euler_characteristic(ck) == 0);
    CHECK(genus(ck) == 0);
    CHECK(ck.total_births() == 1);
    CHECK(ck.total_saddles() == 1);
    CHECK(ck.decomposable_certified());
    CHECK(ck.source() == legendrian_unknot());
    CHECK(ck.target().smooth == pretzel(3, -3, 4));
    CHECK(ck.target().tb == -1);

    // Below the pictured k >= 3 range the concordance is still generated,
    // with the caveat recorded on the primitive move.
    CobordismRecipe c1 = pretzel_concordance(1);
    CHECK(genus(c1) == 0);
    CHECK(c1.moves()[0].label.find("outside") != std::string::npos);
}

TEST_CASE("svvw tower bookkeeping") {
    LegendrianKnot u = legendrian_unknot();
    CobordismRecipe t1 = svvw_tower(u, 1);
    CHECK(t1.source().tb == u.tb - 2);
    CHECK(t1.source().rotation == u.rotation);
    CHECK(t1.target() == u);

    for (int g = 1; g <= 10; ++g) {
        CobordismRecipe t = svvw_tower(u, g);
        CHECK(genus(t) == g);
        CHECK(euler_characteristic(t) == -2 * g);
        CHECK(t.source().tb == u.tb - 2 * g);
    }
    CHECK_THROWS_AS(svvw_tower(u, 0), BadParameter);
}

TEST_CASE("concatenate") {
    LegendrianKnot u = legendrian_unknot();
    CobordismRecipe id = identity_recipe(u);
    CobordismRecipe tower = svvw_tower(u, 2);

    CobordismRecipe same = concatenate(tower, id);
    CHECK(euler_characteristic(same) == euler_characteristic(tower));
    CHECK(genus(same) == 2);

    // Tower on tower: genus and chi add.
    CobordismRecipe upper = svvw_tower(tower.source(), 3);
    CobordismRecipe stack = concatenate(upper, tower);
    CHECK(genus(stack) == 5);
    CHECK(euler_characteristic(stack) ==
          euler_characteristic(upper) + euler_characteristic(tower));

    // Mismatched ends are rejected with the differing field.
    CobordismRecipe other = svvw_tower(stabilize(u, +1), 1);
    CHECK_THROWS_AS(concatenate(other, tower), EndMismatch);
}

TEST_CASE("concordance connected sum") {
    CobordismRecipe ck = pretzel_concordance(4);
    CobordismRecipe id = identity_recipe(legendrian_unknot());

    CobordismRecipe with_id = concordance_connected_sum(ck, id);
    CHECK(genus(with_id) == 0);
    CHECK(with_id.target().smooth == pretzel(3, -3, 4));
    CHECK(with_id.decomposable_certified());

    CobordismRecipe cc = concordance_connected_sum(ck, ck);
    CHECK(genus(cc) == 0);
    CHECK(cc.total_births() == 2);
    CHECK(cc.total_saddles() == 2);
    CHECK(cc.decomposable_certified());
    CHECK(cc.source().smooth == unknot());
    CHECK(cc.target().smooth == connected_sum(pretzel(3, -3, 4), pretzel(3, -3, 4)));

    // n-fold sums stay concordances.
    CobordismRecipe cn = ck;
    for (int i = 1; i < 5; ++i) cn = concordance_connected_sum(cn, ck);
    CHECK(euler_characteristic(cn) == 0);
    CHECK(cn.total_births() == cn.total_saddles());

    CobordismRecipe tower = svvw_tower(legendrian_unknot(), 1);
    CHECK_THROWS_AS(concordance_connected_sum(tower, ck), NotAConcordance);
}

TEST_CASE("reverse_approximate") {
    CobordismRecipe ck = pretzel_concordance(5);
    CobordismRecipe rev = reverse_approximate(ck, "S");
    CHECK(genus(rev) == 0);
    CHECK_FALSE(rev.decomposable_certified());
    CHECK(rev.source().smooth == ck.target().smooth);
    CHECK(rev.target().smooth == ck.source().smooth);
    CHECK(rev.source().symbolic_stabs == std::vector<std::string>{"S"});
    CHECK(rev.moves().size() == 1);
    CHECK(rev.moves()[0].kind == MoveKind::REVERSAL_APPROX);

    CobordismRecipe rev_id = reverse_approximate(identity_recipe(legendrian_unknot()), "S");
    CHECK(euler_characteristic(rev_id) == 0);
    CHECK_FALSE(rev_id.decomposable_certified());

    CHECK_THROWS_AS(reverse_approximate(svvw_tower(legendrian_unknot(), 1), "S"),
                    NotAConcordance);
}

TEST_CASE("decomposability certificate is monotone") {
    CobordismRecipe ck = pretzel_concordance(4);
    CobordismRecipe rev = reverse_approximate(ck, "S");

    // No downstream operation may resurrect the certificate.
    CobordismRecipe tower = svvw_tower(rev.source(), 2);
    CobordismRecipe lg = concatenate(tower, rev);
    CHECK_FALSE(lg.decomposable_certified());

    CobordismRecipe summed = concordance_connected_sum(rev, ck);
    CHECK_FALSE(summed.decomposable_certified());

    // make() refuses to certify a recipe containing a reversal even when
    // asked to.
    CobordismRecipe forced = CobordismRecipe::make(
        rev.source(), rev.target(), rev.moves(), /*certified_decomposable=*/true);
    CHECK_FALSE(forced.decomposable_certified());
}

TEST_CASE("component flow validation") {
    LegendrianKnot u = legendrian_unknot();
    // A lone birth leaves two components.
    CHECK_THROWS_AS(CobordismRecipe::make(u, u, {Move::birth(1)}, false), MalformedRecipe);
    // A join of unborn components is rejected.
    CHECK_THROWS_AS(CobordismRecipe::make(u, u, {Move::saddle_join(0, 1, 2)}, false),
                    MalformedRecipe);
    // Birth then join works: that is the shape of a primitive concordance.
    CHECK_NOTHROW(CobordismRecipe::make(u, u, {Move::birth(1), Move::saddle_join(0, 1, 2)},
                                        false));
    // Odd chi cannot be a knot-to-knot genus.
    CobordismRecipe half =
        CobordismRecipe::make(u, u, {Move::primitive(0, 0, 1, true, "half")}, false);
    CHECK_THROWS_AS(genus(half), MalformedRecipe);
}

TEST_CASE("recipe JSON round-trip is lossless") {
    CobordismRecipe ck = pretzel_concordance(4);
    CobordismRecipe rev = reverse_approximate(ck, "S");
    CobordismRecipe tower = svvw_tower(rev.source(), 2);
    CobordismRecipe lg = concatenate(tower, rev);

    for (const CobordismRecipe& r : {ck, rev, tower, lg}) {
        nlohmann::json j = recipe_to_json(r);
        CHECK(recipe_to_json(recipe_from_json(j)) == j);
    }
}
