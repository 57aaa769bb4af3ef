#include "ribbongate/selftest.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

namespace ribbongate {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

// --- corpus ---

struct CorpusEntry {
    std::string name;
    KnotDiagram d;
};

std::vector<CorpusEntry> single_corpus() {
    std::vector<CorpusEntry> out;
    out.push_back({"unknot", unknot()});
    out.push_back({"trefoil", trefoil()});
    out.push_back({"torus2(5)", torus2(5)});
    out.push_back({"torus2(7)", torus2(7)});
    for (int k = 1; k <= 10; ++k)
        out.push_back({"pretzel(3,-3," + std::to_string(k) + ")", pretzel(3, -3, k)});
    return out;
}

std::vector<CorpusEntry> pair_bases() {
    std::vector<CorpusEntry> out;
    out.push_back({"trefoil", trefoil()});
    out.push_back({"torus2(5)", torus2(5)});
    out.push_back({"torus2(7)", torus2(7)});
    for (int k : {1, 4, 5, 10})
        out.push_back({"pretzel(3,-3," + std::to_string(k) + ")", pretzel(3, -3, k)});
    return out;
}

Zint abs_alexander_at_minus_one(const KnotDiagram& d) {
    return abs(laurent_eval(alexander_poly(d), -1));
}

// --- criteria ---

std::string check_pretzel_det_table() {
    for (int k = 1; k <= 10; ++k) {
        Zint det = determinant_knot(pretzel(3, -3, k));
        if (det != 9)
            fail("det(pretzel(3,-3," + std::to_string(k) + ")) = " + det.str() + ", want 9");
    }
    return "det = 9 for k = 1..10";
}

std::string check_unknot_normalization() {
    KnotDiagram u = unknot();
    if (determinant_knot(u) != 1) fail("det(unknot) != 1");
    if (!(alexander_poly(u) == LaurentPoly::one())) fail("Delta(unknot) != 1");
    DoubleCoverHomology h = h1_double_cover(u);
    if (!h.invariant_factors.empty() || h.order != 1) fail("H1 of the unknot cover not trivial");
    return "det = 1, Delta = 1, no invariant factors";
}

std::string check_dual_path_determinant(std::uint64_t seed) {
    auto both_routes = [](const std::string& name, const KnotDiagram& d) {
        Zint alex = abs_alexander_at_minus_one(d);
        if (d.crossing_count() == 0) {
            if (alex != 1) fail(name + ": unknot determinant != 1");
            return;
        }
        Zint goeritz = abs(det_exact(goeritz_matrix(d)));
        if (alex != goeritz)
            fail(name + ": |Delta(-1)| = " + alex.str() + " but |det Goeritz| = " +
                 goeritz.str());
    };

    int cases = 0;
    for (const auto& e : single_corpus()) {
        both_routes(e.name, e.d);
        ++cases;
    }
    auto bases = pair_bases();
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i; j < bases.size(); ++j) {
            both_routes(bases[i].name + "#" + bases[j].name,
                        connected_sum(bases[i].d, bases[j].d));
            ++cases;
        }
    auto singles = single_corpus();
    for (int i = 0; i < 200; ++i) {
        const auto& base = singles[static_cast<std::size_t>(i) % singles.size()];
        int steps = 1 + i % 5;
        KnotDiagram p = reidemeister_perturb(base.d, seed + static_cast<std::uint64_t>(i),
                                             steps);
        both_routes(base.name + "+R" + std::to_string(i), p);
        ++cases;
    }
    return std::to_string(cases) + " diagrams agree exactly";
}

std::string check_multiplicativity() {
    auto bases = pair_bases();
    int pairs = 0;
    for (std::size_t i = 0; i < bases.size() && pairs < 20; ++i)
        for (std::size_t j = i; j < bases.size() && pairs < 20; ++j) {
            KnotDiagram sum = connected_sum(bases[i].d, bases[j].d);
            LaurentPoly product = laurent_normalize(
                laurent_mul(alexander_poly(bases[i].d), alexander_poly(bases[j].d)));
            if (!(alexander_poly(sum) == product))
                fail("Delta not multiplicative for " + bases[i].name + "#" + bases[j].name);
            if (determinant_knot(sum) !=
                determinant_knot(bases[i].d) * determinant_knot(bases[j].d))
                fail("det not multiplicative for " + bases[i].name + "#" + bases[j].name);
            ++pairs;
        }
    return std::to_string(pairs) + " pairs multiplicative";
}

std::string check_prop_grid() {
    const std::vector<std::pair<std::string, KnotDiagram>> lower_knots{
        {"trefoil", trefoil()},
        {"pretzel(3,-3,4)", pretzel(3, -3, 4)},
        {"pretzel(3,-3,5)", pretzel(3, -3, 5)}};
    for (const auto& [name, k] : lower_knots)
        for (int n = 1; n <= 6; ++n)
            if (!check_prop_lower(k, n, 3))
                fail("beta1 lower bound fails for " + name + ", n = " + std::to_string(n));

    const std::vector<std::pair<std::string, std::pair<KnotDiagram, long long>>> vanish{
        {"trefoil@5", {trefoil(), 5}},
        {"trefoil@7", {trefoil(), 7}},
        {"pretzel(3,-3,4)@5", {pretzel(3, -3, 4), 5}},
        {"pretzel(3,-3,4)@7", {pretzel(3, -3, 4), 7}},
        {"pretzel(3,-3,5)@11", {pretzel(3, -3, 5), 11}},
        {"torus2(5)@3", {torus2(5), 3}},
        {"torus2(5)@7", {torus2(5), 7}},
        {"torus2(7)@3", {torus2(7), 3}},
        {"torus2(7)@5", {torus2(7), 5}},
        {"unknot@3", {unknot(), 3}}};
    for (const auto& [name, kp] : vanish)
        if (!check_prop_vanish(kp.first, kp.second)) fail("vanishing fails for " + name);
    return "18 lower-bound cells and 10 vanishing pairs hold";
}

std::string check_livingston_end_to_end(int jobs) {
    std::ostringstream os;
    FamilySpec family = FamilySpec::from_spec(nlohmann::json{{"pretzel", {3, -3, 4}}});
    for (int g = 1; g <= 3; ++g) {
        auto [recipe, cert] = build_lg(family, g, 0, jobs);
        if (genus(recipe) != g) fail("genus(recipe) != g at g = " + std::to_string(g));
        if (cert.raw_bound < Rational(1, 2))
            fail("raw bound " + cert.raw_bound.str() + " < 1/2 at g = " + std::to_string(g));
        if (cert.c2_lower < 1) fail("c2 lower bound < 1 at g = " + std::to_string(g));
        if (cert.verdict != Verdict::OBSTRUCTED)
            fail("verdict not OBSTRUCTED at g = " + std::to_string(g));
        os << "g=" << g << ": n=" << minimal_copies(g) << " p=" << cert.p
           << " bound=" << cert.raw_bound.str() << "; ";
    }
    return os.str();
}

std::string check_snf_properties(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x534e46ULL);
    auto draw = [&rng](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = static_cast<std::size_t>(draw(1, 30));
        std::size_t cols = static_cast<std::size_t>(draw(1, 30));
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = draw(-20, 20);

        SnfResult r = snf(m);
        if (!(r.u.mul(m).mul(r.v) == r.s)) fail("U*M*V != S at trial " + std::to_string(trial));
        Zint du = abs(det_exact(r.u)), dv = abs(det_exact(r.v));
        if (du != 1 || dv != 1) fail("transform not unimodular at trial " + std::to_string(trial));
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
            const Zint& a = r.invariant_factors[i];
            const Zint& b = r.invariant_factors[i + 1];
            if (a == 0 && b != 0) fail("zero factor before nonzero at trial " + std::to_string(trial));
            if (a != 0 && b % a != 0) fail("divisibility chain broken at trial " + std::to_string(trial));
        }
        for (std::size_t i = 0; i < r.s.rows(); ++i)
            for (std::size_t j = 0; j < r.s.cols(); ++j)
                if (i != j && r.s.at(i, j) != 0) fail("S not diagonal at trial " + std::to_string(trial));
        for (long long p : {3LL, 5LL, 7LL}) {
            std::size_t not_div = 0;
            for (const Zint& f : r.invariant_factors)
                if (f != 0 && f % p != 0) ++not_div;
            if (rank_mod_p(m, p) != not_div)
                fail("rank mod " + std::to_string(p) + " inconsistent at trial " +
                     std::to_string(trial));
        }
    }
    return "300 random matrices pass decomposition, unimodularity, chain, rank checks";
}

std::string check_recipe_accounting() {
    std::vector<CobordismRecipe> generated;

    // Concordances: the pretzel primitives, their sums, and reversals.
    for (int k = 1; k <= 10; ++k) generated.push_back(pretzel_concordance(k));
    for (int k = 1; k <= 5; ++k) {
        CobordismRecipe c = pretzel_concordance(k);
        generated.push_back(concordance_connected_sum(c, c));
    }
    for (int k : {1, 2, 4}) {
        CobordismRecipe c = pretzel_concordance(k);
        generated.push_back(
            concordance_connected_sum(concordance_connected_sum(c, c), c));
    }
    for (int k = 1; k <= 5; ++k)
        generated.push_back(reverse_approximate(pretzel_concordance(k), "S"));
    generated.push_back(identity_recipe(legendrian_unknot()));
    for (int k = 1; k <= 5; ++k)
        generated.push_back(identity_recipe(pretzel_concordance(k).target()));

    // Concordance invariants: chi = 0 and births = saddles.
    for (const auto& r : generated) {
        if (euler_characteristic(r) != 0) fail("concordance with nonzero chi");
        if (genus(r) != 0) fail("concordance with positive genus");
        if (r.total_births() != r.total_saddles()) fail("concordance births != saddles");
    }

    // Towers: genus g exactly, for g up to 10.
    for (int g = 1; g <= 10; ++g) {
        CobordismRecipe t = svvw_tower(legendrian_unknot(), g);
        if (genus(t) != g) fail("tower genus wrong at g = " + std::to_string(g));
        generated.push_back(std::move(t));
    }

    // Chi additivity across composable chains, including tower-on-tower and
    // tower-on-reversal stacks.
    int compositions = 0;
    for (int g1 = 1; g1 <= 3; ++g1)
        for (int g2 = 1; g2 <= 3; ++g2) {
            LegendrianKnot base = legendrian_unknot();
            CobordismRecipe low = svvw_tower(base, g1);
            LegendrianKnot mid = low.source();
            CobordismRecipe high = svvw_tower(mid, g2);
            CobordismRecipe both = concatenate(high, low);
            if (euler_characteristic(both) !=
                euler_characteristic(high) + euler_characteristic(low))
                fail("chi not additive over tower stack");
            if (genus(both) != g1 + g2) fail("genus not additive over tower stack");
            generated.push_back(both);
            ++compositions;
        }
    for (int k : {1, 4}) {
        CobordismRecipe rev = reverse_approximate(pretzel_concordance(k), "S");
        for (int g = 1; g <= 2; ++g) {
            CobordismRecipe tower = svvw_tower(rev.source(), g);
            CobordismRecipe lg = concatenate(tower, rev);
            if (euler_characteristic(lg) !=
                euler_characteristic(tower) + euler_characteristic(rev))
                fail("chi not additive over tower-reversal stack");
            if (lg.decomposable_certified()) fail("reversal failed to clear the certificate");
            generated.push_back(lg);
            ++compositions;
        }
    }

    // Monotonicity: no operation resurrects a cleared certificate.
    for (const auto& r : generated) {
        if (!r.decomposable_certified()) {
            bool has_reversal = false, has_undecomposable = false;
            for (const Move& m : r.moves()) {
                has_reversal |= m.kind == MoveKind::REVERSAL_APPROX;
                has_undecomposable |=
                    m.kind == MoveKind::PRIMITIVE_CONCORDANCE && !m.decomposable;
            }
            if (!has_reversal && !has_undecomposable)
                fail("certificate cleared without a reversal");
        }
    }

    if (generated.size() < 50)
        fail("generated set too small: " + std::to_string(generated.size()));
    return std::to_string(generated.size()) + " recipes, " + std::to_string(compositions) +
           " compositions checked";
}

}  // namespace

std::uint64_t selftest_seed() {
    if (const char* env = std::getenv("RIBBONGATE_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw BadParameter("RIBBONGATE_SEED must be an unsigned integer");
        }
    }
    return 0x9e3779b97f4a7c15ULL;
}

std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed, int jobs) {
    std::vector<CheckResult> out;
    out.push_back(timed("pretzel-determinant-table", check_pretzel_det_table));
    out.push_back(timed("unknot-normalization", check_unknot_normalization));
    out.push_back(timed("dual-path-determinant",
                        [seed] { return check_dual_path_determinant(seed); }));
    out.push_back(timed("multiplicativity", check_multiplicativity));
    out.push_back(timed("prop-grid", check_prop_grid));
    out.push_back(
        timed("livingston-end-to-end", [jobs] { return check_livingston_end_to_end(jobs); }));
    out.push_back(timed("snf-properties", [seed] { return check_snf_properties(seed); }));
    out.push_back(timed("recipe-accounting", check_recipe_accounting));
    return out;
}

}  // namespace ribbongate
