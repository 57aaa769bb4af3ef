#include "ribbongate/legendrian.hpp"

namespace ribbongate {

LegendrianKnot legendrian_unknot() {
    LegendrianKnot l;
    l.smooth = unknot();
    l.tb = -1;
    l.rotation = 0;
    return l;
}

LegendrianKnot stabilize(const LegendrianKnot& l, int sign) {
    if (sign != 1 && sign != -1) throw BadParameter("stabilization sign must be +1 or -1");
    LegendrianKnot out = l;
    out.tb -= 1;
    out.rotation += sign;
    (sign > 0 ? out.pos_stabs : out.neg_stabs) += 1;
    return out;
}

LegendrianKnot stabilize_both(const LegendrianKnot& l) {
    return stabilize(stabilize(l, -1), +1);
}

LegendrianKnot legendrian_connected_sum(const LegendrianKnot& l1, const LegendrianKnot& l2) {
    LegendrianKnot out;
    out.smooth = connected_sum(l1.smooth, l2.smooth);
    out.tb = l1.tb + l2.tb + 1;
    out.rotation = l1.rotation + l2.rotation;
    out.pos_stabs = l1.pos_stabs + l2.pos_stabs;
    out.neg_stabs = l1.neg_stabs + l2.neg_stabs;
    out.symbolic_stabs = l1.symbolic_stabs;
    out.symbolic_stabs.insert(out.symbolic_stabs.end(), l2.symbolic_stabs.begin(),
                              l2.symbolic_stabs.end());
    return out;
}

LegendrianKnot mark_symbolic_stabilization(const LegendrianKnot& l, const std::string& label) {
    LegendrianKnot out = l;
    out.symbolic_stabs.push_back(label);
    return out;
}

nlohmann::json legendrian_to_json(const LegendrianKnot& l) {
    nlohmann::json j{{"tb", l.tb},
                     {"r", l.rotation},
                     {"stabs", {l.pos_stabs, l.neg_stabs}},
                     {"smooth", diagram_to_json(l.smooth)}};
    if (!l.symbolic_stabs.empty()) j["symbolic"] = l.symbolic_stabs;
    return j;
}

LegendrianKnot legendrian_from_json(const nlohmann::json& j) {
    LegendrianKnot l;
    l.smooth = diagram_from_json(j.at("smooth"));
    l.tb = j.at("tb").get<int>();
    l.rotation = j.at("r").get<int>();
    l.pos_stabs = j.at("stabs").at(0).get<int>();
    l.neg_stabs = j.at("stabs").at(1).get<int>();
    if (j.contains("symbolic")) l.symbolic_stabs = j.at("symbolic").get<std::vector<std::string>>();
    return l;
}

}  // namespace ribbongate
