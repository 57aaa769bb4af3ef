#pragma once

#include <string>
#include <vector>

#include "ribbongate/legendrian.hpp"

namespace ribbongate {

/// Elementary pieces of a cobordism recipe. Recipes are symbolic: they
/// certify Euler characteristic, genus, component flow and decomposability
/// flags, never the geometry of intermediate slices.
enum class MoveKind { BIRTH, SADDLE, ISOTOPY, REVERSAL_APPROX, PRIMITIVE_CONCORDANCE };

const char* to_string(MoveKind k);

/// Flat move record; which fields matter depends on kind. Component ids are
/// allocated sequentially during replay validation, so a recipe is valid
/// exactly when it replays from one component back to one component.
struct Move {
    MoveKind kind = MoveKind::ISOTOPY;
    int comp_a = -1, comp_b = -1;      // inputs (SADDLE join uses both)
    int result_a = -1, result_b = -1;  // outputs (SADDLE split uses both)
    int births = 0, saddles = 0;       // PRIMITIVE_CONCORDANCE / REVERSAL_APPROX totals
    bool decomposable = false;         // PRIMITIVE_CONCORDANCE only
    std::string label;                 // free-form note / stabilization parameter

    static Move birth(int new_component);
    static Move saddle_join(int a, int b, int result);
    static Move saddle_split(int a, int result1, int result2);
    static Move isotopy(int component, std::string note);
    static Move primitive(int component, int births, int saddles, bool decomposable,
                          std::string label);
    static Move reversal(int component, int births, int saddles, std::string stab_param);

    bool operator==(const Move& o) const;
};

/// Symbolic Lagrangian cobordism recipe between Legendrian ends. Immutable
/// after construction; make() rejects anything whose component flow does
/// not run 1 -> ... -> 1.
class CobordismRecipe {
public:
    static CobordismRecipe make(LegendrianKnot source, LegendrianKnot target,
                                std::vector<Move> moves, bool certified_decomposable);

    const LegendrianKnot& source() const { return source_; }
    const LegendrianKnot& target() const { return target_; }
    const std::vector<Move>& moves() const { return moves_; }
    bool decomposable_certified() const { return certified_; }

    /// Birth/saddle totals that enter the Euler characteristic (the opaque
    /// reversal move contributes zero by construction).
    int total_births() const;
    int total_saddles() const;

private:
    LegendrianKnot source_, target_;
    std::vector<Move> moves_;
    bool certified_ = false;
};

/// Identity concordance on L (no moves).
CobordismRecipe identity_recipe(const LegendrianKnot& l);

/// chi = births - saddles over all moves.
int euler_characteristic(const CobordismRecipe& r);

/// g = -chi/2 for knot-to-knot recipes; rejects positive or odd chi.
int genus(const CobordismRecipe& r);

/// Stack B on top of A; the ends must match exactly (smooth diagram, tb,
/// rotation, stabilization record).
CobordismRecipe concatenate(const CobordismRecipe& a, const CobordismRecipe& b);

/// Connected sum of two concordances, collapsed to one primitive move with
/// summed birth/saddle counts.
CobordismRecipe concordance_connected_sum(const CobordismRecipe& c1, const CobordismRecipe& c2);

/// Reverse a concordance and absorb the approximation step into a single
/// opaque move; both ends pick up a symbolic stabilization mark and the
/// decomposability certificate is lost.
CobordismRecipe reverse_approximate(const CobordismRecipe& c, const std::string& stab_param);

/// g stacked genus-one blocks (two saddles each): recipe from the g-fold
/// double stabilization of L down to L.
CobordismRecipe svvw_tower(const LegendrianKnot& l, int g);

/// Primitive decomposable concordance from the tb = -1 unknot to the
/// standard Legendrian representative of pretzel(3,-3,k); one birth, one
/// saddle.
CobordismRecipe pretzel_concordance(int k);

nlohmann::json recipe_to_json(const CobordismRecipe& r);
CobordismRecipe recipe_from_json(const nlohmann::json& j);

}  // namespace ribbongate
