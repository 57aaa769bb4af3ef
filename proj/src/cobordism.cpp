#include "ribbongate/cobordism.hpp"

#include <algorithm>
#include <set>

namespace ribbongate {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::BIRTH: return "BIRTH";
        case MoveKind::SADDLE: return "SADDLE";
        case MoveKind::ISOTOPY: return "ISOTOPY";
        case MoveKind::REVERSAL_APPROX: return "REVERSAL_APPROX";
        case MoveKind::PRIMITIVE_CONCORDANCE: return "PRIMITIVE_CONCORDANCE";
    }
    return "UNKNOWN";
}

Move Move::birth(int new_component) {
    Move m;
    m.kind = MoveKind::BIRTH;
    m.result_a = new_component;
    return m;
}

Move Move::saddle_join(int a, int b, int result) {
    Move m;
    m.kind = MoveKind::SADDLE;
    m.comp_a = a;
    m.comp_b = b;
    m.result_a = result;
    return m;
}

Move Move::saddle_split(int a, int result1, int result2) {
    Move m;
    m.kind = MoveKind::SADDLE;
    m.comp_a = a;
    m.comp_b = a;
    m.result_a = result1;
    m.result_b = result2;
    return m;
}

Move Move::isotopy(int component, std::string note) {
    Move m;
    m.kind = MoveKind::ISOTOPY;
    m.comp_a = component;
    m.label = std::move(note);
    return m;
}

Move Move::primitive(int component, int births, int saddles, bool decomposable,
                     std::string label) {
    Move m;
    m.kind = MoveKind::PRIMITIVE_CONCORDANCE;
    m.comp_a = component;
    m.births = births;
    m.saddles = saddles;
    m.decomposable = decomposable;
    m.label = std::move(label);
    return m;
}

Move Move::reversal(int component, int births, int saddles, std::string stab_param) {
    Move m;
    m.kind = MoveKind::REVERSAL_APPROX;
    m.comp_a = component;
    m.births = births;
    m.saddles = saddles;
    m.label = std::move(stab_param);
    return m;
}

bool Move::operator==(const Move& o) const {
    return kind == o.kind && comp_a == o.comp_a && comp_b == o.comp_b &&
           result_a == o.result_a && result_b == o.result_b && births == o.births &&
           saddles == o.saddles && decomposable == o.decomposable && label == o.label;
}

namespace {

struct Flow {
    std::set<int> live{0};
    int next_id = 1;
    int final_component() const { return *live.begin(); }
};

void require_live(const Flow& f, int comp, const Move& m) {
    if (!f.live.count(comp))
        throw MalformedRecipe(std::string(to_string(m.kind)) + " references component " +
                              std::to_string(comp) + " which is not alive");
}

void take_fresh(Flow& f, int id, const Move& m) {
    if (id != f.next_id)
        throw MalformedRecipe(std::string(to_string(m.kind)) + " allocates id " +
                              std::to_string(id) + ", expected " + std::to_string(f.next_id));
    f.live.insert(id);
    ++f.next_id;
}

Flow replay(const std::vector<Move>& moves) {
    Flow f;
    for (const Move& m : moves) {
        switch (m.kind) {
            case MoveKind::BIRTH:
                take_fresh(f, m.result_a, m);
                break;
            case MoveKind::SADDLE:
                require_live(f, m.comp_a, m);
                if (m.comp_a == m.comp_b) {  // fission: one circle splits in two
                    f.live.erase(m.comp_a);
                    take_fresh(f, m.result_a, m);
                    take_fresh(f, m.result_b, m);
                } else {  // fusion
                    require_live(f, m.comp_b, m);
                    f.live.erase(m.comp_a);
                    f.live.erase(m.comp_b);
                    take_fresh(f, m.result_a, m);
                }
                break;
            case MoveKind::ISOTOPY:
            case MoveKind::REVERSAL_APPROX:
            case MoveKind::PRIMITIVE_CONCORDANCE:
                require_live(f, m.comp_a, m);
                break;
        }
    }
    if (f.live.size() != 1)
        throw MalformedRecipe("component flow ends with " + std::to_string(f.live.size()) +
                              " components");
    return f;
}

bool derivable_decomposable(const std::vector<Move>& moves) {
    for (const Move& m : moves) {
        if (m.kind == MoveKind::REVERSAL_APPROX) return false;
        if (m.kind == MoveKind::PRIMITIVE_CONCORDANCE && !m.decomposable) return false;
    }
    return true;
}

}  // namespace

CobordismRecipe CobordismRecipe::make(LegendrianKnot source, LegendrianKnot target,
                                      std::vector<Move> moves, bool certified_decomposable) {
    replay(moves);
    CobordismRecipe r;
    r.source_ = std::move(source);
    r.target_ = std::move(target);
    r.moves_ = std::move(moves);
    r.certified_ = certified_decomposable && derivable_decomposable(r.moves_);
    return r;
}

int CobordismRecipe::total_births() const {
    int b = 0;
    for (const Move& m : moves_) {
        if (m.kind == MoveKind::BIRTH) ++b;
        if (m.kind == MoveKind::PRIMITIVE_CONCORDANCE) b += m.births;
    }
    return b;
}

int CobordismRecipe::total_saddles() const {
    int s = 0;
    for (const Move& m : moves_) {
        if (m.kind == MoveKind::SADDLE) ++s;
        if (m.kind == MoveKind::PRIMITIVE_CONCORDANCE) s += m.saddles;
    }
    return s;
}

CobordismRecipe identity_recipe(const LegendrianKnot& l) {
    return CobordismRecipe::make(l, l, {}, true);
}

int euler_characteristic(const CobordismRecipe& r) {
    return r.total_births() - r.total_saddles();
}

int genus(const CobordismRecipe& r) {
    if (!r.source().smooth.is_knot() || !r.target().smooth.is_knot())
        throw MalformedRecipe("genus needs knot ends");
    const int chi = euler_characteristic(r);
    if (chi > 0 || chi % 2 != 0)
        throw MalformedRecipe("knot-to-knot recipe cannot have Euler characteristic " +
                              std::to_string(chi));
    return -chi / 2;
}

CobordismRecipe concatenate(const CobordismRecipe& a, const CobordismRecipe& b) {
    const LegendrianKnot& at = a.target();
    const LegendrianKnot& bs = b.source();
    if (at.smooth != bs.smooth) throw EndMismatch("smooth diagrams differ");
    if (at.tb != bs.tb)
        throw EndMismatch("tb " + std::to_string(at.tb) + " vs " + std::to_string(bs.tb));
    if (at.rotation != bs.rotation)
        throw EndMismatch("rotation " + std::to_string(at.rotation) + " vs " +
                          std::to_string(bs.rotation));
    if (at.pos_stabs != bs.pos_stabs || at.neg_stabs != bs.neg_stabs)
        throw EndMismatch("stabilization counters differ");
    if (at.symbolic_stabs != bs.symbolic_stabs)
        throw EndMismatch("symbolic stabilization marks differ");

    // Remap B's component ids into A's id space: B's source becomes A's
    // final component, B's fresh ids continue A's sequence.
    Flow fa = replay(a.moves());
    const int a_final = fa.final_component();
    const int offset = fa.next_id - 1;
    auto remap = [a_final, offset](int id) {
        if (id < 0) return id;
        return id == 0 ? a_final : id + offset;
    };

    std::vector<Move> moves = a.moves();
    for (Move m : b.moves()) {
        m.comp_a = remap(m.comp_a);
        m.comp_b = remap(m.comp_b);
        m.result_a = remap(m.result_a);
        m.result_b = remap(m.result_b);
        moves.push_back(std::move(m));
    }
    return CobordismRecipe::make(a.source(), b.target(), std::move(moves),
                                 a.decomposable_certified() && b.decomposable_certified());
}

CobordismRecipe concordance_connected_sum(const CobordismRecipe& c1,
                                          const CobordismRecipe& c2) {
    if (genus(c1) != 0) throw NotAConcordance("first summand has positive genus");
    if (genus(c2) != 0) throw NotAConcordance("second summand has positive genus");

    LegendrianKnot source = legendrian_connected_sum(c1.source(), c2.source());
    LegendrianKnot target = legendrian_connected_sum(c1.target(), c2.target());
    const bool dec = c1.decomposable_certified() && c2.decomposable_certified();
    std::vector<Move> moves{Move::primitive(0, c1.total_births() + c2.total_births(),
                                            c1.total_saddles() + c2.total_saddles(), dec,
                                            "concordance connected sum")};
    return CobordismRecipe::make(std::move(source), std::move(target), std::move(moves), dec);
}

CobordismRecipe reverse_approximate(const CobordismRecipe& c, const std::string& stab_param) {
    if (genus(c) != 0) throw NotAConcordance("only concordances can be reverted");
    LegendrianKnot source = mark_symbolic_stabilization(c.target(), stab_param);
    LegendrianKnot target = mark_symbolic_stabilization(c.source(), stab_param);
    std::vector<Move> moves{
        Move::reversal(0, c.total_births(), c.total_saddles(), stab_param)};
    return CobordismRecipe::make(std::move(source), std::move(target), std::move(moves),
                                 /*certified_decomposable=*/false);
}

CobordismRecipe svvw_tower(const LegendrianKnot& l, int g) {
    if (g < 1) throw BadParameter("tower height must be >= 1");
    LegendrianKnot source = l;
    for (int i = 0; i < g; ++i) source = stabilize_both(source);

    // Each block trades one double stabilization for one unit of genus:
    // split the single circle, then rejoin it.
    std::vector<Move> moves;
    int live = 0, next = 1;
    for (int i = 0; i < g; ++i) {
        moves.push_back(Move::saddle_split(live, next, next + 1));
        moves.push_back(Move::saddle_join(next, next + 1, next + 2));
        live = next + 2;
        next += 3;
    }
    return CobordismRecipe::make(std::move(source), l, std::move(moves), true);
}

CobordismRecipe pretzel_concordance(int k) {
    KnotDiagram target_smooth = pretzel(3, -3, k);
    LegendrianKnot target;
    target.smooth = std::move(target_smooth);
    target.tb = -1;  // concordances preserve tb and rotation from U
    target.rotation = 0;

    std::string label = "pretzel_concordance(3,-3," + std::to_string(k) + ")";
    if (k < 3) label += " [outside the k>=3 picture; accepted as a knot]";
    std::vector<Move> moves{Move::primitive(0, 1, 1, true, std::move(label))};
    return CobordismRecipe::make(legendrian_unknot(), std::move(target), std::move(moves), true);
}

nlohmann::json recipe_to_json(const CobordismRecipe& r) {
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& m : r.moves()) {
        nlohmann::json jm{{"kind", to_string(m.kind)}};
        switch (m.kind) {
            case MoveKind::BIRTH:
                jm["component"] = m.result_a;
                break;
            case MoveKind::SADDLE:
                if (m.comp_a == m.comp_b) {
                    jm["split"] = m.comp_a;
                    jm["result"] = {m.result_a, m.result_b};
                } else {
                    jm["join"] = {m.comp_a, m.comp_b};
                    jm["result"] = m.result_a;
                }
                break;
            case MoveKind::ISOTOPY:
                jm["component"] = m.comp_a;
                jm["note"] = m.label;
                break;
            case MoveKind::PRIMITIVE_CONCORDANCE:
                jm["component"] = m.comp_a;
                jm["births"] = m.births;
                jm["saddles"] = m.saddles;
                jm["decomposable"] = m.decomposable;
                jm["label"] = m.label;
                break;
            case MoveKind::REVERSAL_APPROX:
                jm["component"] = m.comp_a;
                jm["births"] = m.births;
                jm["saddles"] = m.saddles;
                jm["stab_param"] = m.label;
                break;
        }
        moves.push_back(std::move(jm));
    }
    return nlohmann::json{{"source", legendrian_to_json(r.source())},
                          {"target", legendrian_to_json(r.target())},
                          {"moves", moves},
                          {"decomposable_certified", r.decomposable_certified()}};
}

CobordismRecipe recipe_from_json(const nlohmann::json& j) {
    std::vector<Move> moves;
    for (const auto& jm : j.at("moves")) {
        const std::string kind = jm.at("kind").get<std::string>();
        if (kind == "BIRTH") {
            moves.push_back(Move::birth(jm.at("component").get<int>()));
        } else if (kind == "SADDLE") {
            if (jm.contains("split"))
                moves.push_back(Move::saddle_split(jm.at("split").get<int>(),
                                                   jm.at("result").at(0).get<int>(),
                                                   jm.at("result").at(1).get<int>()));
            else
                moves.push_back(Move::saddle_join(jm.at("join").at(0).get<int>(),
                                                  jm.at("join").at(1).get<int>(),
                                                  jm.at("result").get<int>()));
        } else if (kind == "ISOTOPY") {
            moves.push_back(
                Move::isotopy(jm.at("component").get<int>(), jm.at("note").get<std::string>()));
        } else if (kind == "PRIMITIVE_CONCORDANCE") {
            moves.push_back(Move::primitive(jm.at("component").get<int>(),
                                            jm.at("births").get<int>(),
                                            jm.at("saddles").get<int>(),
                                            jm.at("decomposable").get<bool>(),
                                            jm.at("label").get<std::string>()));
        } else if (kind == "REVERSAL_APPROX") {
            moves.push_back(Move::reversal(jm.at("component").get<int>(),
                                           jm.at("births").get<int>(),
                                           jm.at("saddles").get<int>(),
                                           jm.at("stab_param").get<std::string>()));
        } else {
            throw MalformedInput("unknown move kind \"" + kind + "\"");
        }
    }
    return CobordismRecipe::make(legendrian_from_json(j.at("source")),
                                 legendrian_from_json(j.at("target")), std::move(moves),
                                 j.at("decomposable_certified").get<bool>());
}

}  // namespace ribbongate
