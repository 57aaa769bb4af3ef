#include "ribbongate/pipeline.hpp"

namespace ribbongate {

FamilySpec FamilySpec::from_spec(nlohmann::json base, std::optional<long long> hint) {
    FamilySpec fs;
    fs.base_knot = std::move(base);
    fs.prime_hint = hint;

    KnotDiagram d = diagram_from_spec(fs.base_knot);
    if (!d.is_knot()) throw NotAKnot("family base must be a knot");
    if (fs.prime_hint) {
        long long p = *fs.prime_hint;
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw BadParameter("prime hint must be an odd prime");
        if (determinant_knot(d) % p != 0)
            throw HypothesisFailed("prime hint " + std::to_string(p) +
                                   " does not divide det(base)");
    }
    return fs;
}

int minimal_copies(int g) {
    if (g < 1) throw BadParameter("genus must be >= 1");
    return 2 * g + 1;
}

namespace {

// The base concordance U -> base. pretzel(3,-3,k) bases get the concrete
// primitive; other bases carry the concordance as a family assumption with
// unspecified internal counts.
CobordismRecipe base_concordance(const nlohmann::json& spec, const KnotDiagram& base) {
    if (spec.is_object() && spec.contains("pretzel")) {
        const auto& t = spec.at("pretzel");
        if (t.at(0).get<int>() == 3 && t.at(1).get<int>() == -3)
            return pretzel_concordance(t.at(2).get<int>());
    }
    LegendrianKnot target;
    target.smooth = base;
    target.tb = -1;
    target.rotation = 0;
    std::vector<Move> moves{Move::primitive(
        0, 0, 0, true, "assumed decomposable concordance (family hypothesis)")};
    return CobordismRecipe::make(legendrian_unknot(), std::move(target), std::move(moves),
                                 true);
}

}  // namespace

std::pair<CobordismRecipe, ObstructionCertificate> build_lg(const FamilySpec& spec, int g,
                                                            int copies_override, int jobs) {
    if (g < 1) throw BadParameter("genus must be >= 1");

    KnotDiagram base = diagram_from_spec(spec.base_knot);
    if (!base.is_knot()) throw NotAKnot("family base must be a knot");

    // Theorem hypotheses, checked computationally before any construction.
    Zint det = determinant_knot(base);
    if (odd_prime_factors(det).empty())
        throw HypothesisFailed("det(base) = " + det.str() + " has no odd prime factor");
    if (spec.prime_hint && det % *spec.prime_hint != 0)
        throw HypothesisFailed("prime hint does not divide det(base)");

    const int n = copies_override > 0 ? copies_override : minimal_copies(g);

    CobordismRecipe c = base_concordance(spec.base_knot, base);
    CobordismRecipe cn = c;
    for (int i = 1; i < n; ++i) cn = concordance_connected_sum(cn, c);

    CobordismRecipe reversed = reverse_approximate(cn, "S");
    CobordismRecipe tower = svvw_tower(reversed.source(), g);
    CobordismRecipe lg = concatenate(tower, reversed);

    if (genus(lg) != g) throw InternalError("pipeline produced the wrong genus");
    if (lg.decomposable_certified())
        throw InternalError("reversal must clear the decomposability certificate");

    ObstructionCertificate cert =
        ribbon_verdict(lg.source().smooth, lg.target().smooth, g, jobs);
    return {std::move(lg), std::move(cert)};
}

}  // namespace ribbongate
